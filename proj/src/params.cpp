#include "jch/params.hpp"

#include <cmath>

namespace jch {

void ChainParams::validate() const {
  if (n_cavities < 2) {
    throw std::invalid_argument("ChainParams: need at least 2 cavities, got " +
                                std::to_string(n_cavities));
  }
  if (!std::isfinite(atom_freq) || !std::isfinite(cavity_freq) ||
      !std::isfinite(atom_photon_coupling) || !std::isfinite(hop_strength)) {
    throw std::invalid_argument("ChainParams: non-finite parameter");
  }
  if (atom_photon_coupling < 0.0) {
    throw std::invalid_argument("ChainParams: atom_photon_coupling must be >= 0");
  }
}

SingularDetuningError::SingularDetuningError(int mode, double value)
    : std::runtime_error("singular detuning: mode " + std::to_string(mode) +
                         " has |Delta| = " + std::to_string(value)),
      mode_(mode) {}

}  // namespace jch
