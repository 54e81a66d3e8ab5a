#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "groverad/errors.hpp"
#include "groverad/propagator.hpp"
#include "oracles.hpp"

namespace groverad {
namespace {

const Schedule kLinear = Schedule::linear();

TEST(Step, ZeroTimeIsIdentity) {
  const QuantumState psi{{0.6, 0.0}, {0.0, 0.8}};
  const QuantumState out = step(psi, {0.3, 0.1, -0.2}, 0.0);
  EXPECT_EQ(out.alpha, psi.alpha);
  EXPECT_EQ(out.beta, psi.beta);
}

TEST(Step, ZeroFieldIsIdentity) {
  const QuantumState psi{{0.6, 0.0}, {0.0, 0.8}};
  const QuantumState out = step(psi, {0.0, 0.0, 0.0}, 3.0);
  EXPECT_EQ(out.alpha, psi.alpha);
  EXPECT_EQ(out.beta, psi.beta);
}

TEST(Step, EigenstateOnlyGainsPhase) {
  const double h = 0.7;
  const double dt = 1.3;
  const QuantumState out = step({{1.0, 0.0}, {0.0, 0.0}}, {0.0, 0.0, h}, dt);
  const Complex expected = std::polar(1.0, 0.5 * h * dt);
  EXPECT_NEAR(std::abs(out.alpha - expected), 0.0, 1e-15);
  EXPECT_EQ(std::abs(out.beta), 0.0);
}

TEST(Step, RabiHalfPeriodFlips) {
  const QuantumState out = step({{1.0, 0.0}, {0.0, 0.0}}, {1.0, 0.0, 0.0}, std::numbers::pi);
  EXPECT_NEAR(std::abs(out.alpha), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out.beta), 1.0, 1e-15);
}

TEST(Step, RejectsNegativeTime) {
  EXPECT_THROW(step({{1.0, 0.0}, {0.0, 0.0}}, {1.0, 0.0, 0.0}, -0.1), std::invalid_argument);
}

TEST(Step, PreservesNorm) {
  QuantumState psi{{0.6, 0.0}, {0.0, 0.8}};
  for (int i = 0; i < 10000; ++i) {
    psi = step(psi, {std::sin(i * 0.1), 0.3, std::cos(i * 0.07)}, 0.37);
  }
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
}

TEST(Magnus4Field, CommutingFieldsAverage) {
  const FieldVector h1{0.0, 0.0, 1.0};
  const FieldVector h2{0.0, 0.0, 3.0};
  const FieldVector h = magnus4_field(h1, h2, 0.5);
  EXPECT_DOUBLE_EQ(h.z, 2.0);
  EXPECT_DOUBLE_EQ(h.x, 0.0);
  EXPECT_DOUBLE_EQ(h.y, 0.0);
}

TEST(DefaultSteps, Policy) {
  EXPECT_EQ(default_steps(1.0), 20000);
  EXPECT_EQ(default_steps(100.0), 20000);
  EXPECT_EQ(default_steps(1000.0), 200000);
  EXPECT_EQ(default_steps(1000.001), 200001);
}

TEST(Evolve, RejectsBadSpecs) {
  EXPECT_THROW(evolve(EvolutionSpec(ProblemSize(4), 0.0)), std::invalid_argument);
  EvolutionSpec no_steps(ProblemSize(4), 1.0);
  no_steps.steps = 0;
  EXPECT_THROW(evolve(no_steps), std::invalid_argument);
}

TEST(Evolve, RejectsTooFewStepsForStability) {
  EvolutionSpec spec(ProblemSize(4), 100.0);
  spec.steps = 50;
  try {
    evolve(spec);
    FAIL() << "expected InsufficientStepsError";
  } catch (const InsufficientStepsError& e) {
    EXPECT_EQ(e.operation(), "evolve");
    EXPECT_EQ(e.requested(), 50);
    EXPECT_GE(e.required(), 1000);
  }
}

TEST(Evolve, AdiabaticLimitReachesTarget) {
  const Trajectory tr = evolve(EvolutionSpec(ProblemSize(4), 1e4));
  EXPECT_LT(tr.final_probability(), 1e-6);
  EXPECT_GT(std::norm(tr.final_state.alpha), 1.0 - 1e-6);
}

TEST(Evolve, ExactDrivingStaysAdiabatic) {
  const Trajectory tr = evolve(EvolutionSpec(ProblemSize(4), 10.0, DrivingKind::exact));
  EXPECT_LT(tr.final_probability(), 1e-10);
  for (const auto& sample : tr.samples) EXPECT_LT(sample.p, 1e-10);
}

TEST(Evolve, AgreesWithIndependentRungeKutta) {
  // Reference values come from a classical RK4 integration with 4e6 steps.
  for (double t : {5.0, 50.0, 1000.0}) {
    const double reference = oracle::TwoLevelRk4{10.0, t}.final_excited_population(4'000'000);
    const double p = evolve(EvolutionSpec(ProblemSize(10), t)).final_probability();
    EXPECT_NEAR(p, reference, 1e-8 * reference) << "T=" << t;
  }
}

TEST(Evolve, FrozenLargeTimeValue) {
  // Raw final probability for N=10, T=1000; the oscillation phase puts it
  // below the B/T^2 envelope (see the sweep envelope test).
  const double p = evolve(EvolutionSpec(ProblemSize(10), 1000.0)).final_probability();
  EXPECT_NEAR(p, 9.2037355357e-08, 1e-16);
}

TEST(Evolve, TrajectoryInvariants) {
  for (auto driving : {DrivingKind::none, DrivingKind::const_min, DrivingKind::const_max}) {
    const ProblemSize n(10);
    const Trajectory tr = evolve(EvolutionSpec(n, 20.0, driving));
    ASSERT_LE(tr.samples.size(), 4001u);
    ASSERT_GE(tr.samples.size(), 2u);
    EXPECT_EQ(tr.samples.front().s, 0.0);
    EXPECT_EQ(tr.samples.back().s, 1.0);
    for (std::size_t i = 0; i < tr.samples.size(); ++i) {
      const auto& sample = tr.samples[i];
      if (i > 0) {
        EXPECT_GT(sample.s, tr.samples[i - 1].s);
      }
      EXPECT_NEAR(sample.psi.norm(), 1.0, 1e-12);
      EXPECT_GE(sample.p, 0.0);
      EXPECT_LE(sample.p, 1.0);
      EXPECT_NEAR(sample.bloch.norm(), 1.0, 1e-10);
      EXPECT_NEAR(sample.e_res, sample.p * gap(sample.s, n, kLinear), 1e-12);
    }
  }
}

TEST(Evolve, StrideRespectsSampleBudget) {
  EvolutionSpec spec(ProblemSize(4), 1.0);
  spec.steps = 1000;
  spec.max_samples = 11;
  const Trajectory tr = evolve(spec);
  ASSERT_EQ(tr.samples.size(), 11u);
  EXPECT_NEAR(tr.samples[5].s, 0.5, 1e-15);
  EXPECT_EQ(tr.steps, 1000);
}

TEST(Evolve, StepHalvingAtDefaultPolicy) {
  for (long long size : {2LL, 10LL, 100LL}) {
    for (double t : {10.0, 300.0}) {
      EvolutionSpec coarse(ProblemSize(size), t);
      coarse.max_samples = 2;
      EvolutionSpec fine = coarse;
      fine.steps = 2 * coarse.resolved_steps();
      const double a = evolve(coarse).final_probability();
      const double b = evolve(fine).final_probability();
      EXPECT_LT(std::abs(a - b) / b, 1e-6) << "N=" << size << " T=" << t;
    }
  }
}

TEST(Evolve, MidpointIsSecondOrderAndMagnusFourth) {
  auto error_ratio = [](Integrator integrator) {
    const double reference = [&] {
      EvolutionSpec spec(ProblemSize(4), 10.0);
      spec.steps = 64000;
      spec.max_samples = 2;
      return evolve(spec).final_probability();
    }();
    auto at = [&](long long steps) {
      EvolutionSpec spec(ProblemSize(4), 10.0);
      spec.steps = steps;
      spec.integrator = integrator;
      spec.max_samples = 2;
      return std::abs(evolve(spec).final_probability() - reference);
    };
    return at(200) / at(400);
  };
  EXPECT_NEAR(error_ratio(Integrator::midpoint), 4.0, 0.4);
  EXPECT_NEAR(error_ratio(Integrator::magnus4), 16.0, 1.6);
}

TEST(TransitionProbability, Eigenstates) {
  const ProblemSize n(10);
  for (double s : {0.0, 0.3, 0.5, 0.9}) {
    const auto eig = eigensystem(s, n, kLinear);
    EXPECT_NEAR(transition_probability(eig.v_minus, s, n, kLinear), 0.0, 1e-15);
    EXPECT_NEAR(transition_probability(eig.v_plus, s, n, kLinear), 1.0, 1e-15);
  }
  EXPECT_NEAR(transition_probability(initial_state(n), 0.0, n, kLinear), 0.0, 1e-15);
}

TEST(TransitionProbability, BothFormsAgree) {
  const ProblemSize n(7);
  const QuantumState psi{{0.6, 0.2}, {-0.3, std::sqrt(1.0 - 0.36 - 0.04 - 0.09)}};
  for (int i = 0; i <= 20; ++i) {
    const double s = i / 20.0;
    EXPECT_NEAR(transition_probability(psi, s, n, kLinear),
                transition_probability_complement(psi, s, n, kLinear), 1e-12);
  }
}

TEST(ResidualEnergy, Examples) {
  const ProblemSize n(4);
  const auto eig = eigensystem(0.5, n, kLinear);
  EXPECT_NEAR(residual_energy(eig.v_minus, 0.5, n, kLinear), 0.0, 1e-15);
  EXPECT_NEAR(residual_energy(eig.v_plus, 0.5, n, kLinear), 0.5, 1e-15);
  const double r = std::sqrt(0.5);
  const QuantumState half{r * eig.v_minus.alpha + r * eig.v_plus.alpha,
                          r * eig.v_minus.beta + r * eig.v_plus.beta};
  EXPECT_NEAR(residual_energy(half, 0.5, n, kLinear), 0.25, 1e-15);
}

}  // namespace
}  // namespace groverad
