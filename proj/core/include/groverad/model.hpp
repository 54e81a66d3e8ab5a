#pragma once

#include <complex>
#include <functional>
#include <string>

namespace groverad {

using Complex = std::complex<double>;

/// Turn-off/turn-on pair interpolating H(s) = f(s) H0 + g(s) Hp.
///
/// Construction checks the boundary values f(0)=1, f(1)=0, g(0)=0, g(1)=1
/// and non-negativity of both functions on a 1001-point grid. Throws
/// std::invalid_argument otherwise.
class Schedule {
 public:
  using Function = std::function<double(double)>;

  Schedule(std::string name, Function turn_off, Function turn_on);

  /// f(s) = 1 - s, g(s) = s.
  static Schedule linear();

  double f(double s) const { return turn_off_(s); }
  double g(double s) const { return turn_on_(s); }
  const std::string& name() const { return name_; }
  bool is_linear() const { return linear_; }

 private:
  Schedule(std::string name, Function turn_off, Function turn_on, bool linear);

  std::string name_;
  Function turn_off_;
  Function turn_on_;
  bool linear_ = false;
};

/// Number of database entries. Must be at least 2.
class ProblemSize {
 public:
  explicit ProblemSize(long long n);
  long long value() const { return n_; }
  double as_double() const { return static_cast<double>(n_); }

 private:
  long long n_;
};

/// Coefficients of a traceless Hamiltonian H = -(1/2) (hx sx + hy sy + hz sz).
struct FieldVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  FieldVector operator+(const FieldVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  FieldVector operator-(const FieldVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  FieldVector operator*(double k) const { return {k * x, k * y, k * z}; }
  double dot(const FieldVector& o) const { return x * o.x + y * o.y + z * o.z; }
};

/// Amplitudes in the {|w>, |w_perp>} basis.
struct QuantumState {
  Complex alpha;
  Complex beta;

  double norm() const;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

struct FieldComponents {
  double X;  // 2 f sqrt(N-1)
  double Z;  // 2 f + N (g - f)
};

struct Eigensystem {
  double e_minus;
  double e_plus;
  QuantumState v_minus;
  QuantumState v_plus;
};

FieldComponents field_components(double s, const ProblemSize& n, const Schedule& sched);

/// Field of the undriven Hamiltonian: (X/N, 0, Z/N).
FieldVector grover_field(double s, const ProblemSize& n, const Schedule& sched);

/// Energy gap between the instantaneous eigenstates (hbar = 1).
double gap(double s, const ProblemSize& n, const Schedule& sched);

/// atan2(X, Z), in [0, pi] since X >= 0.
double mixing_angle(double s, const ProblemSize& n, const Schedule& sched);

Eigensystem eigensystem(double s, const ProblemSize& n, const Schedule& sched);

/// Eigenpair of an arbitrary field. The lower state is (cos a/2, e^{i phi} sin a/2)
/// with (a, phi) the polar and azimuthal angles of h; for hy = 0 and hx >= 0 this
/// reduces to the real convention used by eigensystem().
Eigensystem eigensystem(const FieldVector& h);

/// Uniform superposition projected onto {|w>, |w_perp>}.
QuantumState initial_state(const ProblemSize& n);

/// r_k = <psi| sigma_k |psi>.
BlochVector bloch_vector(const QuantumState& psi);

/// H psi for H = -(1/2) h.sigma.
QuantumState apply_hamiltonian(const FieldVector& h, const QuantumState& psi);

/// <a|b>
Complex inner(const QuantumState& a, const QuantumState& b);

}  // namespace groverad
