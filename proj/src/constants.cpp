#include "moireq/constants.hpp"

#include <cmath>

namespace moireq {

bool constants_consistent() {
  auto close = [](double x, double y) { return std::abs(x - y) <= 1e-9 * std::abs(y); };
  const double two_pi = 2.0 * M_PI;
  // h [meV s] = 2 pi hbar [meV ps] * 1e-12
  if (!close(PhysConstants::h, two_pi * PhysConstants::hbar * 1e-12)) return false;
  // muB/h in GHz/T, the Zeeman conversion used by the qubit module
  if (!close(PhysConstants::muB_over_h_GHz,
             PhysConstants::muB / PhysConstants::h * 1e-9))
    return false;
  // muB/h is 13.996... GHz/T
  if (!(PhysConstants::muB_over_h_GHz > 13.9 && PhysConstants::muB_over_h_GHz < 14.1))
    return false;
  return true;
}

}  // namespace moireq
