#pragma once

#include <stdexcept>
#include <string>

namespace jch {

// Coupling layout of the photon-hopping term between adjacent cavities.
enum class Topology {
  CyclicUniform,    // closed ring, uniform nearest-neighbor hopping
  LinearParabolic,  // open chain, sqrt(j(N-j)) hopping (Krawtchouk Jacobi matrix)
};

// Physical configuration of a Jaynes-Cummings-Hubbard chain.
// All frequencies are angular frequencies in the same (arbitrary) unit.
struct ChainParams {
  int n_cavities = 2;                // N
  double atom_freq = 0.0;            // epsilon, two-level transition frequency
  double cavity_freq = 0.0;          // Omega, bare photon frequency
  double atom_photon_coupling = 0.0; // g >= 0
  double hop_strength = 0.0;         // kappa
  Topology topology = Topology::CyclicUniform;

  // atom-cavity detuning delta = epsilon - Omega
  [[nodiscard]] double detuning() const { return atom_freq - cavity_freq; }

  // Throws std::invalid_argument on N < 2 or non-finite parameters.
  void validate() const;
};

// Perturbative kernels refuse to divide by a vanishing mode detuning.
class SingularDetuningError : public std::runtime_error {
 public:
  SingularDetuningError(int mode, double value);
  [[nodiscard]] int mode() const { return mode_; }

 private:
  int mode_;
};

// Operation applied to the wrong chain topology (e.g. shift on an open chain).
class TopologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Resonant-mode index of the wrong degeneracy class for the requested kernel.
class ModeClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace jch
