#include "groverad/full_space.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace groverad {

namespace {

// Extended precision: in double the per-step rounding of the dense products
// accumulates to ~1e-12 norm drift over 1e5 steps.
using Real = long double;
using Scalar = std::complex<Real>;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

class DenseHamiltonian {
 public:
  DenseHamiltonian(const ProblemSize& n, const Schedule& sched)
      : dim_(static_cast<Eigen::Index>(n.value())),
        sched_(sched),
        input_projector_(Matrix::Constant(dim_, dim_, Scalar{1.0L / n.value(), 0.0L})) {}

  Matrix at(double s) const {
    Matrix h = Matrix::Identity(dim_, dim_);
    h -= static_cast<Real>(sched_.f(s)) * input_projector_;
    h(0, 0) -= static_cast<Real>(sched_.g(s));
    return h;
  }

 private:
  Eigen::Index dim_;
  const Schedule& sched_;
  Matrix input_projector_;
};

// exp(-i K dt) psi through the eigenbasis of K.
Vector propagate(const Matrix& generator, Real dt, const Vector& psi) {
  const Eigen::SelfAdjointEigenSolver<Matrix> solver(generator);
  const RealVector& energies = solver.eigenvalues();
  Vector coefficients = solver.eigenvectors().adjoint() * psi;
  for (Eigen::Index i = 0; i < energies.size(); ++i) {
    coefficients(i) *= std::polar(Real{1}, -energies(i) * dt);
  }
  return solver.eigenvectors() * coefficients;
}

QuantumState project(const Vector& psi, double& leakage) {
  const auto dim = psi.size();
  const Scalar alpha = psi(0);
  Scalar rest_sum{0.0L, 0.0L};
  for (Eigen::Index i = 1; i < dim; ++i) rest_sum += psi(i);
  const Scalar beta = rest_sum / std::sqrt(static_cast<Real>(dim - 1));
  leakage = static_cast<double>(std::abs(psi.squaredNorm() - std::norm(alpha) - std::norm(beta)));
  return {Complex(static_cast<double>(alpha.real()), static_cast<double>(alpha.imag())),
          Complex(static_cast<double>(beta.real()), static_cast<double>(beta.imag()))};
}

}  // namespace

FullSpaceResult full_space_evolve(const ProblemSize& n, double running_time,
                                  std::optional<long long> steps, std::size_t max_samples,
                                  Integrator integrator) {
  if (n.value() > kFullSpaceMaxN) {
    throw std::invalid_argument("full_space_evolve: N must be at most " +
                                std::to_string(kFullSpaceMaxN));
  }
  if (!(running_time > 0.0)) {
    throw std::invalid_argument("full_space_evolve: running time must be positive");
  }
  if (max_samples < 2) {
    throw std::invalid_argument("full_space_evolve: max_samples must be at least 2");
  }
  const long long count = steps.value_or(default_steps(running_time));
  if (count < 1) {
    throw std::invalid_argument("full_space_evolve: step count must be at least 1");
  }

  const Schedule sched = Schedule::linear();
  const DenseHamiltonian hamiltonian(n, sched);
  const auto dim = static_cast<Eigen::Index>(n.value());
  const double ds = 1.0 / static_cast<double>(count);
  const Real dt = static_cast<Real>(running_time) / static_cast<Real>(count);
  const double gauss_offset = std::sqrt(3.0) / 6.0;
  const Real commutator_weight = std::sqrt(3.0L) / 12.0L;
  const auto intervals = static_cast<long long>(max_samples - 1);
  const long long stride = (count + intervals - 1) / intervals;

  Vector psi = Vector::Constant(dim, Scalar{1.0L / std::sqrt(static_cast<Real>(dim)), 0.0L});
  FullSpaceResult out;
  double leakage = 0.0;
  out.s.push_back(0.0);
  out.projected.push_back(project(psi, leakage));

  for (long long k = 0; k < count; ++k) {
    const double base = static_cast<double>(k);
    Matrix generator;
    if (integrator == Integrator::midpoint) {
      generator = hamiltonian.at((base + 0.5) * ds);
    } else {
      // Omega = -i dt K with K = (H1 + H2)/2 - i (sqrt(3)/12) dt [H2, H1].
      const Matrix h1 = hamiltonian.at((base + 0.5 - gauss_offset) * ds);
      const Matrix h2 = hamiltonian.at((base + 0.5 + gauss_offset) * ds);
      generator = Real{0.5} * (h1 + h2) -
                  Scalar{0.0L, commutator_weight * dt} * (h2 * h1 - h1 * h2);
    }
    psi = propagate(generator, dt, psi);
    const long long done = k + 1;
    if (done % stride == 0 || done == count) {
      out.s.push_back(done == count ? 1.0 : static_cast<double>(done) * ds);
      out.projected.push_back(project(psi, leakage));
    }
  }

  out.leakage = leakage;
  out.norm_drift = static_cast<double>(std::abs(1.0L - psi.norm()));
  out.p_final = transition_probability(out.projected.back(), 1.0, n, sched);
  return out;
}

}  // namespace groverad
