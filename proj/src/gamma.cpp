#include "hausdorff/gamma.hpp"

#include <cmath>

#include "hausdorff/errors.hpp"

namespace hausdorff {
namespace {

// Lanczos coefficients for g = 7, N = 9. This is the classical set of
// Godfrey/Pugh as circulated in the numerical literature; |eps| < 1e-13
// on Re z >= 1/2.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const double kSqrtTwoPi = std::sqrt(2.0 * kPi);

bool is_nonpositive_integer(cplx z) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  return r <= 0.0 && r == std::floor(r);
}

cplx lanczos_half_plane(cplx z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  cplx t = z + kLanczosG + 0.5;
  return kSqrtTwoPi * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

cplx complex_gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw SpecError("complex_gamma: pole at nonpositive integer");
  }
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * lanczos_half_plane(1.0 - z));
  }
  return lanczos_half_plane(z);
}

double log_abs_gamma(cplx z) {
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(std::abs(std::sin(kPi * z))) -
           log_abs_gamma(1.0 - z);
  }
  cplx w = z - 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (w + static_cast<double>(i));
  cplx t = w + kLanczosG + 0.5;
  cplx log_gamma = std::log(kSqrtTwoPi) + (w + 0.5) * std::log(t) - t + std::log(x);
  return log_gamma.real();
}

}  // namespace hausdorff
