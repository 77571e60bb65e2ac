#pragma once

#include <Eigen/Dense>

namespace jch {

inline constexpr double kNormTol = 1e-12;

// Single-excitation amplitudes in the localized basis: photon(j) multiplies
// |G> x |1_j>, atom(j) multiplies |e_j> x |0>.
struct SingleExcitationState {
  Eigen::VectorXcd photon;  // a_j
  Eigen::VectorXcd atom;    // b_j
  bool unit_norm = true;    // false when built from raw amplitudes off the sphere

  [[nodiscard]] int sites() const { return static_cast<int>(photon.size()); }
  [[nodiscard]] double squared_norm() const {
    return photon.squaredNorm() + atom.squaredNorm();
  }
  [[nodiscard]] double norm() const { return std::sqrt(squared_norm()); }

  static SingleExcitationState zero(int n);
  static SingleExcitationState photon_excitation_at(int n, int site);
  static SingleExcitationState atom_excitation_at(int n, int site);
  // normalize=true rescales to unit norm (throws on the zero vector);
  // normalize=false accepts arbitrary amplitudes and flags non-unit norm.
  static SingleExcitationState from_amplitudes(Eigen::VectorXcd photon,
                                               Eigen::VectorXcd atom,
                                               bool normalize);
};

// The same excitation in the delocalized-mode basis: alpha_j photon modes,
// beta_j collective atomic modes.
struct DelocalizedState {
  Eigen::VectorXcd photon_modes;  // alpha_j
  Eigen::VectorXcd atom_modes;    // beta_j

  [[nodiscard]] int size() const { return static_cast<int>(photon_modes.size()); }
  [[nodiscard]] double squared_norm() const {
    return photon_modes.squaredNorm() + atom_modes.squaredNorm();
  }
};

}  // namespace jch
