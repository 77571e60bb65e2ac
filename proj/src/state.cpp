#include "jch/state.hpp"

#include <cmath>
#include <stdexcept>

namespace jch {

SingleExcitationState SingleExcitationState::zero(int n) {
  return {Eigen::VectorXcd::Zero(n), Eigen::VectorXcd::Zero(n), false};
}

SingleExcitationState SingleExcitationState::photon_excitation_at(int n, int site) {
  if (site < 0 || site >= n) throw std::out_of_range("photon_excitation_at: site out of range");
  auto s = zero(n);
  s.photon(site) = 1.0;
  s.unit_norm = true;
  return s;
}

SingleExcitationState SingleExcitationState::atom_excitation_at(int n, int site) {
  if (site < 0 || site >= n) throw std::out_of_range("atom_excitation_at: site out of range");
  auto s = zero(n);
  s.atom(site) = 1.0;
  s.unit_norm = true;
  return s;
}

SingleExcitationState SingleExcitationState::from_amplitudes(Eigen::VectorXcd photon,
                                                             Eigen::VectorXcd atom,
                                                             bool normalize) {
  if (photon.size() != atom.size()) {
    throw std::invalid_argument("from_amplitudes: photon/atom length mismatch");
  }
  SingleExcitationState s{std::move(photon), std::move(atom), false};
  const double nrm = s.norm();
  if (normalize) {
    if (nrm == 0.0) throw std::invalid_argument("from_amplitudes: cannot normalize zero state");
    s.photon /= nrm;
    s.atom /= nrm;
    s.unit_norm = true;
  } else {
    s.unit_norm = std::abs(nrm - 1.0) < kNormTol;
  }
  return s;
}

}  // namespace jch
