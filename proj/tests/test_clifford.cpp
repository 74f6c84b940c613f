#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "gcl/clifford.hpp"

namespace {

using cd = std::complex<double>;
using gcl::Context;
using gcl::Operator;
using gcl::PhasePoint;
using gcl::SympMatrix;

double max_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
  double m = 0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

cd float_trace(const Operator& op) {
  const auto m = gcl::to_complex_matrix(op);
  cd t = 0;
  for (std::size_t i = 0; i < op.dim(); ++i) t += m[i * op.dim() + i];
  return t;
}

Context ctx_of(std::uint64_t d, std::vector<std::uint32_t> extra = {}) { return Context::make(gcl::make_field_of_size(d), extra); }

}  // namespace

TEST(SymplecticUnitary, IdentityMapsToIdentity) {
  for (std::uint64_t d : {3u, 5u, 9u}) {
    const Context ctx = ctx_of(d);
    EXPECT_TRUE(gcl::symplectic_unitary(ctx, SympMatrix::identity(ctx.field())).is_identity());
  }
}

TEST(SymplecticUnitary, FourierAtThree) {
  const Context ctx = ctx_of(3);
  const auto& f = ctx.field();
  const Operator u = gcl::symplectic_unitary(ctx, SympMatrix::from_codes(f, 0, 1, -1, 0));
  EXPECT_FALSE(u.antiunitary());
  std::vector<cd> want(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) want[x * 3 + y] = cd(0, 1) / std::sqrt(3.0) * std::polar(1.0, -2 * M_PI * x * y / 3);
  EXPECT_LT(max_diff(gcl::to_complex_matrix(u), want), 1e-12);
}

TEST(SymplecticUnitary, JIsComplexConjugation) {
  const Context ctx = ctx_of(3);
  const Operator uj = gcl::symplectic_unitary(ctx, SympMatrix::J(ctx.field()));
  EXPECT_TRUE(uj.antiunitary());
  Operator m = uj;
  m.set_antiunitary(false);
  EXPECT_TRUE(m.is_identity());
  const Operator sq = uj * uj;
  EXPECT_FALSE(sq.antiunitary());
  EXPECT_TRUE(sq.is_identity());
}

TEST(SymplecticUnitary, UnitarityD5) {
  const Context ctx = ctx_of(5);
  std::mt19937 rng(5);
  for (int k = 0; k < 40; ++k) {
    const SympMatrix F = gcl::random_esl(ctx.field(), rng);
    const Operator u = gcl::symplectic_unitary(ctx, F);
    EXPECT_TRUE((u * u.adjoint()).is_identity());
    EXPECT_TRUE((u.adjoint() * u).is_identity());
  }
}

TEST(SymplecticUnitary, FaithfulOnRandomPairsD7) {
  const Context ctx = ctx_of(7);
  std::mt19937 rng(77);
  for (int k = 0; k < 1000; ++k) {
    const SympMatrix a = gcl::random_esl(ctx.field(), rng), b = gcl::random_esl(ctx.field(), rng);
    ASSERT_TRUE(gcl::symplectic_unitary(ctx, a) * gcl::symplectic_unitary(ctx, b) == gcl::symplectic_unitary(ctx, a * b)) << a.str() << " " << b.str();
  }
}

TEST(SymplecticUnitary, FaithfulExhaustiveD3AndFieldNine) {
  for (std::uint64_t d : {3u}) {
    const Context ctx = ctx_of(d);
    const auto group = gcl::all_esl(ctx.field());
    ASSERT_EQ(group.size(), 48u);
    for (const auto& a : group)
      for (const auto& b : group) ASSERT_TRUE(gcl::symplectic_unitary(ctx, a) * gcl::symplectic_unitary(ctx, b) == gcl::symplectic_unitary(ctx, a * b));
  }
  const Context c9 = ctx_of(9);
  std::mt19937 rng(9);
  for (int k = 0; k < 300; ++k) {
    const SympMatrix a = gcl::random_esl(c9.field(), rng), b = gcl::random_esl(c9.field(), rng);
    ASSERT_TRUE(gcl::symplectic_unitary(c9, a) * gcl::symplectic_unitary(c9, b) == gcl::symplectic_unitary(c9, a * b));
  }
}

TEST(Covariance, ExhaustiveD5) {
  const Context ctx = ctx_of(5);
  const auto group = gcl::all_esl(ctx.field());
  ASSERT_EQ(group.size(), 240u);
  const auto pts = gcl::all_points(ctx.field());
  for (const auto& F : group) {
    const Operator u = gcl::symplectic_unitary(ctx, F), ui = u.adjoint();
    for (const auto& p : pts) ASSERT_TRUE(u * gcl::displacement(ctx, p) * ui == gcl::displacement(ctx, F.apply(p))) << F.str();
  }
  EXPECT_TRUE(gcl::covariance_check(ctx, SympMatrix::identity(ctx.field()), pts[7]));
}

TEST(Covariance, JConjugatesDisplacement) {
  const Context ctx = ctx_of(3);
  const auto& f = ctx.field();
  const Operator uj = gcl::symplectic_unitary(ctx, SympMatrix::J(f));
  EXPECT_TRUE(uj * gcl::displacement(ctx, {f.one(), f.one()}) * uj.adjoint() == gcl::displacement(ctx, {f.one(), -f.one()}));
  EXPECT_TRUE(gcl::covariance_check(ctx, SympMatrix::J(f), {f.one(), f.one()}));
}

TEST(WeylExpansion, IdentityIsSingleTerm) {
  const Context ctx = ctx_of(5);
  const auto w = gcl::weyl_expansion(ctx, SympMatrix::identity(ctx.field()));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_TRUE(w[0].first.is_zero());
  EXPECT_EQ(w[0].second, ctx.scalar(1));
}

TEST(WeylExpansion, ShearAtThree) {
  const Context ctx = ctx_of(3);
  const auto& f = ctx.field();
  const auto w = gcl::weyl_expansion(ctx, SympMatrix::from_codes(f, 1, 1, 0, 1));
  ASSERT_EQ(w.size(), 3u);
  for (const auto& [u, c] : w) {
    EXPECT_TRUE(u.u2.is_zero());
    const double r = u.u1.code();
    const cd want = cd(0, 1) / std::sqrt(3.0) * std::polar(1.0, 2 * M_PI * r * r * 2 / 3);  // tau = omega^2
    EXPECT_LT(std::abs(c.to_complex() - want), 1e-12);
  }
}

TEST(WeylExpansion, ReconstructsAllSlSmall) {
  for (std::uint64_t d : {3u, 5u, 9u}) {
    const Context ctx = ctx_of(d);
    for (const auto& F : gcl::all_sl(ctx.field())) ASSERT_TRUE(gcl::weyl_reconstruct(ctx, gcl::weyl_expansion(ctx, F)) == gcl::symplectic_unitary(ctx, F)) << F.str();
  }
  const Context c7 = ctx_of(7);
  const SympMatrix z = SympMatrix::from_codes(c7.field(), 0, -1, 1, -1);
  const auto w = gcl::weyl_expansion(c7, z);
  EXPECT_EQ(w.size(), 49u);
  EXPECT_TRUE(gcl::weyl_reconstruct(c7, w) == gcl::symplectic_unitary(c7, z));
}

TEST(WeylExpansion, RejectsAntisymplectic) {
  const Context ctx = ctx_of(5);
  EXPECT_THROW(gcl::weyl_expansion(ctx, SympMatrix::J(ctx.field())), gcl::DomainError);
  EXPECT_THROW(gcl::trace_closed_form(ctx, SympMatrix::J(ctx.field())), gcl::DomainError);
  EXPECT_THROW(gcl::direct_trace(ctx, SympMatrix::J(ctx.field())), gcl::DomainError);
}

TEST(Trace, Examples) {
  const Context c7 = ctx_of(7);
  EXPECT_EQ(gcl::trace_closed_form(c7, SympMatrix::from_codes(c7.field(), 0, -1, 1, -1)), c7.scalar(1));
  const Context c3 = ctx_of(3);
  const auto t = gcl::trace_closed_form(c3, SympMatrix::from_codes(c3.field(), 1, 1, 0, 1));
  EXPECT_LT(std::abs(t.to_complex() - cd(0, std::sqrt(3.0))), 1e-12);
  EXPECT_EQ(t, gcl::i_unit(c3.ring()) * c3.sqrt_d());
  for (std::uint64_t d : {3u, 9u, 25u}) {
    const Context ctx = ctx_of(d);
    EXPECT_EQ(gcl::trace_closed_form(ctx, SympMatrix::identity(ctx.field())), ctx.scalar(static_cast<std::int64_t>(d)));
  }
}

TEST(Trace, ClosedFormMatchesFloatTraceAllSl) {
  for (std::uint64_t d : {3u, 5u, 7u, 9u}) {
    const Context ctx = ctx_of(d);
    for (const auto& F : gcl::all_sl(ctx.field())) {
      const auto closed = gcl::trace_closed_form(ctx, F);
      ASSERT_EQ(closed, gcl::direct_trace(ctx, F));
      ASSERT_LT(std::abs(closed.to_complex() - float_trace(gcl::symplectic_unitary(ctx, F))), 1e-9) << F.str();
    }
  }
}

TEST(IdentifyClifford, PureCases) {
  const Context ctx = ctx_of(5);
  const auto& f = ctx.field();
  std::mt19937 rng(1);
  for (int k = 0; k < 20; ++k) {
    const SympMatrix F = gcl::random_esl(f, rng);
    const auto e = gcl::identify_clifford(ctx, gcl::symplectic_unitary(ctx, F));
    EXPECT_EQ(e.F, F);
    EXPECT_TRUE(e.chi.is_zero());
    EXPECT_EQ(e.phase, ctx.scalar(1));
    const PhasePoint chi = gcl::random_point(f, rng);
    const auto g = gcl::identify_clifford(ctx, gcl::displacement(ctx, chi));
    EXPECT_TRUE(g.F.is_identity());
    EXPECT_EQ(g.chi, chi);
    EXPECT_EQ(g.phase, ctx.scalar(1));
  }
}

TEST(IdentifyClifford, RoundTripWithPhaseAndShift) {
  const Context ctx = ctx_of(5);
  const auto& f = ctx.field();
  std::mt19937 rng(2);
  const PhasePoint chi{f.element(2), f.element(3)};
  for (int k = 0; k < 30; ++k) {
    const SympMatrix F = gcl::random_esl(f, rng);
    const gcl::CliffordElement e{F, chi, ctx.omega_pow(1)};
    const Operator u = gcl::clifford_element(ctx, e);
    const auto got = gcl::identify_clifford(ctx, u);
    EXPECT_EQ(got.F, F);
    EXPECT_EQ(got.chi, chi);
    EXPECT_EQ(got.phase, ctx.omega_pow(1));
  }
}

TEST(IdentifyClifford, ExtensionFieldNeedsAllProbes) {
  const Context ctx = ctx_of(9, {8});
  const auto& f = ctx.field();
  std::mt19937 rng(3);
  for (int k = 0; k < 30; ++k) {
    const gcl::CliffordElement e{gcl::random_esl(f, rng), gcl::random_point(f, rng), gcl::root_of_unity(ctx.ring(), 8, static_cast<std::int64_t>(rng() % 8))};
    const auto got = gcl::identify_clifford(ctx, gcl::clifford_element(ctx, e));
    EXPECT_EQ(got.F, e.F);
    EXPECT_EQ(got.chi, e.chi);
    EXPECT_EQ(got.phase, e.phase);
  }
}

TEST(IdentifyClifford, RejectsNonClifford) {
  const Context ctx = ctx_of(5);
  // diag(1, 1, 1, 1, i) is unitary but does not normalize the displacements
  Operator t = Operator::identity(ctx.ring(), 5);
  t.set(4, 4, gcl::i_unit(ctx.ring()));
  EXPECT_THROW(gcl::identify_clifford(ctx, t), gcl::NotCliffordError);
  const Context c3 = ctx_of(3);
  EXPECT_THROW(gcl::identify_clifford(c3, t), gcl::DomainError);
}
