#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "groverad/driving.hpp"

namespace groverad {
namespace {

const Schedule kLinear = Schedule::linear();

TEST(DrivingKind, TokensRoundTrip) {
  for (auto kind : {DrivingKind::none, DrivingKind::exact, DrivingKind::const_min,
                    DrivingKind::const_max}) {
    EXPECT_EQ(parse_driving_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_driving_kind("maximal").has_value());
}

TEST(DrivingSpec, RejectsNonPositiveTime) {
  EXPECT_THROW(DrivingSpec(DrivingKind::exact, ProblemSize(4), 0.0), std::invalid_argument);
  EXPECT_THROW(DrivingSpec(DrivingKind::exact, ProblemSize(4), -1.0), std::invalid_argument);
}

TEST(ThetaDot, KnownValues) {
  const ProblemSize n(4);
  EXPECT_NEAR(theta_dot_ds(0.0, n), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(theta_dot_ds(0.5, n), 2.0 * std::sqrt(3.0), 1e-14);
  for (long long size : {2LL, 10LL, 100LL}) {
    EXPECT_DOUBLE_EQ(theta_dot_ds(0.0, ProblemSize(size)), theta_dot_ds(1.0, ProblemSize(size)));
  }
}

TEST(ThetaDot, MatchesFiniteDifferenceOfMixingAngle) {
  const double h = 1e-5;
  for (long long size : {2LL, 4LL, 10LL, 100LL}) {
    const ProblemSize n(size);
    for (int i = 1; i <= 999; ++i) {
      const double s = i / 1000.0;
      const double numeric =
          (mixing_angle(s + h, n, kLinear) - mixing_angle(s - h, n, kLinear)) / (2.0 * h);
      EXPECT_NEAR(theta_dot_ds(s, n), -numeric, 1e-6) << "N=" << size << " s=" << s;
    }
  }
}

TEST(ThetaDot, DerivativeMatchesFiniteDifference) {
  const double h = 1e-6;
  const ProblemSize n(10);
  for (int i = 1; i < 100; ++i) {
    const double s = i / 100.0;
    const double numeric = (theta_dot_ds(s + h, n) - theta_dot_ds(s - h, n)) / (2.0 * h);
    EXPECT_NEAR(theta_dot_ds_derivative(s, n), numeric, 1e-5 * (1.0 + std::abs(numeric)));
  }
}

TEST(DrivingField, None) {
  const DrivingSpec spec = DrivingSpec::none(ProblemSize(10), 5.0);
  const FieldVector h = driving_field(spec, 0.3);
  EXPECT_EQ(h.x, 0.0);
  EXPECT_EQ(h.y, 0.0);
  EXPECT_EQ(h.z, 0.0);
}

TEST(DrivingField, ConstMinAmplitude) {
  const DrivingSpec spec(DrivingKind::const_min, ProblemSize(100), 10.0);
  EXPECT_NEAR(driving_field(spec, 0.7).y, 2.0 * std::sqrt(99.0) / 1000.0, 1e-16);
  EXPECT_NEAR(driving_field(spec, 0.7).y, 0.0198997, 1e-7);
  EXPECT_EQ(driving_field(spec, 0.7).x, 0.0);
}

TEST(DrivingField, ConstMaxAmplitude) {
  const DrivingSpec spec(DrivingKind::const_max, ProblemSize(100), 10.0);
  EXPECT_NEAR(driving_field(spec, 0.1).y, 2.0 * std::sqrt(99.0) / 10.0, 1e-15);
}

TEST(DrivingField, ExactMatchesConstantKindsAtEndsAndMiddle) {
  for (long long size : {2LL, 4LL, 10LL, 100LL}) {
    const ProblemSize n(size);
    for (double t : {1.0, 10.0, 1000.0}) {
      const DrivingSpec exact(DrivingKind::exact, n, t);
      const DrivingSpec low(DrivingKind::const_min, n, t);
      const DrivingSpec high(DrivingKind::const_max, n, t);
      EXPECT_NEAR(driving_field(exact, 0.0).y, driving_field(low, 0.4).y, 1e-13);
      EXPECT_NEAR(driving_field(exact, 1.0).y, driving_field(low, 0.4).y, 1e-13);
      EXPECT_NEAR(driving_field(exact, 0.5).y, driving_field(high, 0.9).y, 1e-13);
    }
  }
}

TEST(DrivingField, DerivativeOfConstantKindsIsZero) {
  const DrivingSpec spec(DrivingKind::const_max, ProblemSize(10), 3.0);
  const FieldVector d = driving_field_derivative(spec, 0.2);
  EXPECT_EQ(d.y, 0.0);
}

TEST(DrivenSpectrum, UndrivenReducesToGap) {
  const ProblemSize n(10);
  const DrivingSpec spec = DrivingSpec::none(n, 10.0);
  for (double s : {0.0, 0.3, 0.5, 1.0}) {
    const auto levels = driven_spectrum(s, spec);
    EXPECT_NEAR(levels.e0, -0.5 * gap(s, n, kLinear), 1e-15);
    EXPECT_NEAR(levels.e1, 0.5 * gap(s, n, kLinear), 1e-15);
  }
}

TEST(DrivenSpectrum, ConstMinWidensAvoidedCrossing) {
  const DrivingSpec spec(DrivingKind::const_min, ProblemSize(100), 10.0);
  const auto levels = driven_spectrum(0.5, spec);
  const double width = levels.e1 - levels.e0;
  EXPECT_NEAR(width * width, 0.010396, 1e-12);
}

TEST(DrivenSpectrum, ExactDrivingWidensGapForAnyTime) {
  const ProblemSize n(10);
  for (double t : {0.1, 1.0, 100.0, 1e4}) {
    const auto levels = driven_spectrum(0.5, DrivingSpec(DrivingKind::exact, n, t));
    EXPECT_GT(levels.e1 - levels.e0, gap(0.5, n, kLinear));
  }
}

}  // namespace
}  // namespace groverad
