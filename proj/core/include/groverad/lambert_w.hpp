#pragma once

namespace groverad {

/// Lower real branch W_{-1} of the inverse of w -> w e^w.
///
/// Defined for -1/e <= x < 0, returns w <= -1. Halley iteration seeded with
/// ln(-x) - ln(-ln(-x)); the result satisfies |w e^w - x| <= 1e-12 |x|.
/// Throws DomainError outside the domain and NonConvergenceError if 50
/// iterations do not reach the tolerance.
double lambert_w_minus1(double x);

/// Crossing of e^{-A T} and B / T^2 on the lower branch: T = -(2/A) W_{-1}(-A sqrt(B) / 2).
/// Throws DomainError when A <= 0, B <= 0 or -A sqrt(B)/2 < -1/e.
double critical_time(double rate, double prefactor);

}  // namespace groverad
