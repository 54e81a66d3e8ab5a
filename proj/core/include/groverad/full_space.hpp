#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "groverad/model.hpp"
#include "groverad/propagator.hpp"

namespace groverad {

inline constexpr long long kFullSpaceMaxN = 64;

struct FullSpaceResult {
  /// Excited-state population of the state projected onto {|w>, |w_perp>}.
  double p_final = 0.0;
  /// Squared norm of the component outside span{|w>, |w_perp>} at s = 1.
  double leakage = 0.0;
  /// |1 - ||psi(T)|||
  double norm_drift = 0.0;
  /// Projected states at uniformly strided s, endpoints included.
  std::vector<double> s;
  std::vector<QuantumState> projected;
};

/// Brute-force integration of H(t) = f H0 + g Hp on the full N-dimensional
/// space, H0 = I - |phi_in><phi_in|, Hp = I - |w><w| with |w> = |0>, using
/// dense Hermitian diagonalisation for every step. Same step rule and count
/// as evolve(). Requires 2 <= N <= kFullSpaceMaxN.
FullSpaceResult full_space_evolve(const ProblemSize& n, double running_time,
                                  std::optional<long long> steps = std::nullopt,
                                  std::size_t max_samples = 2,
                                  Integrator integrator = Integrator::magnus4);

}  // namespace groverad
