#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "gcl/gf.hpp"

namespace {

using gcl::FieldElement;
using gcl::GaloisField;

// Schoolbook multiplication in Z_p[x]/(modulus) on coefficient vectors.
std::vector<std::uint32_t> naive_mul(const GaloisField& f, std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b) {
  const std::uint32_t n = f.n(), p = f.p();
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  const auto& m = f.modulus();
  for (std::uint32_t k = 2 * n - 1; k >= n; --k) {
    const std::uint64_t c = prod[k];
    if (!c) continue;
    for (std::uint32_t j = 0; j <= n; ++j) prod[k - n + j] = (prod[k - n + j] + (p - c) * m[j]) % p;
  }
  return {prod.begin(), prod.begin() + n};
}

std::uint32_t naive_pow_code(const GaloisField& f, std::uint32_t code, std::uint64_t e) {
  std::vector<std::uint32_t> acc = f.coords(1), b = f.coords(code);
  for (std::uint64_t k = 0; k < e; ++k) acc = naive_mul(f, acc, b);
  return f.encode(acc);
}

// Frobenius sum x + x^p + ... as an element; must land in the prime field.
std::uint32_t trace_oracle(const GaloisField& f, std::uint32_t code) {
  std::uint32_t sum = 0, y = code;
  for (std::uint32_t k = 0; k < f.n(); ++k) {
    sum = (f.element(sum) + f.element(y)).code();
    y = naive_pow_code(f, y, f.p());
  }
  EXPECT_LT(sum, f.p());
  return sum;
}

}  // namespace

TEST(GaloisField, PrimeFieldThreeHasThetaTwo) {
  const GaloisField& f = gcl::make_field(3, 1);
  EXPECT_EQ(f.theta().code(), 2u);
  EXPECT_EQ(f.size(), 3u);
}

TEST(GaloisField, NineUsesConwayModulusAndPrimitiveRoot) {
  const GaloisField& f = gcl::make_field(3, 2);
  EXPECT_EQ(f.modulus(), (gcl::Poly{2, 2, 1}));
  const std::uint32_t g = f.theta().code();
  EXPECT_EQ(g, 3u);
  EXPECT_EQ(naive_pow_code(f, g, 4), 2u);
  EXPECT_EQ(naive_pow_code(f, g, 8), 1u);
}

TEST(GaloisField, EvenCharacteristicRejected) {
  EXPECT_THROW(gcl::make_field(2, 1), gcl::DomainError);
  EXPECT_THROW(gcl::make_field_of_size(2), gcl::DomainError);
  EXPECT_THROW(gcl::make_field_of_size(15), gcl::DomainError);
}

TEST(GaloisField, ReducibleModulusRejected) {
  EXPECT_THROW(gcl::make_field(3, 2, gcl::Poly{2, 0, 1}), gcl::DomainError);  // x^2 + 2 has root 1
  EXPECT_THROW(gcl::make_field(5, 2, gcl::Poly{4, 0, 1}), gcl::DomainError);      // x^2 - 1
}

TEST(GaloisField, MultiplicationMatchesSchoolbook) {
  for (std::uint64_t d : {9u, 25u, 27u, 49u, 81u}) {
    const GaloisField& f = gcl::make_field_of_size(d);
    for (const auto& x : f.elements())
      for (const auto& y : f.elements()) ASSERT_EQ((x * y).code(), f.encode(naive_mul(f, f.coords(x.code()), f.coords(y.code())))) << d;
  }
}

TEST(GaloisField, ThetaHasFullOrderAndLogIsBijective) {
  for (std::uint64_t d : {3u, 5u, 7u, 9u, 25u, 27u, 121u, 243u}) {
    const GaloisField& f = gcl::make_field_of_size(d);
    std::set<std::uint32_t> logs;
    FieldElement acc = f.one();
    for (std::uint32_t k = 0; k + 1 < d; ++k) {
      if (k > 0) {
        ASSERT_FALSE(acc.is_one()) << d << " " << k;
      }
      ASSERT_EQ(gcl::discrete_log(acc), k);
      logs.insert(gcl::discrete_log(acc));
      acc = acc * f.theta();
    }
    EXPECT_TRUE(acc.is_one());
    EXPECT_EQ(logs.size(), d - 1);
  }
}

TEST(GaloisField, FrobeniusAndFermat) {
  for (std::uint64_t d : {9u, 27u, 25u}) {
    const GaloisField& f = gcl::make_field_of_size(d);
    for (const auto& x : f.elements()) {
      FieldElement y = x;
      for (std::uint32_t k = 0; k < f.n(); ++k) y = y.pow(f.p());
      EXPECT_EQ(y, x);
      if (!x.is_zero()) {
        EXPECT_TRUE(x.pow(d - 1).is_one());
      }
    }
  }
}

TEST(FieldTrace, PrimeFieldIsIdentity) {
  const GaloisField& f = gcl::make_field(5, 1);
  EXPECT_EQ(gcl::field_trace(f.element(3)), 3u);
}

// The example value 2 for tr(g+1) in F_9 disagrees with direct arithmetic:
// tr(1) = 2 and tr(g) = g + g^3 = 1, so tr(g+1) = 0.
TEST(FieldTrace, NineGPlusOneIsZero) {
  const GaloisField& f = gcl::make_field(3, 2);
  const std::uint32_t g_plus_1 = 4;
  EXPECT_EQ(trace_oracle(f, g_plus_1), 0u);
  EXPECT_EQ(gcl::field_trace(f.element(g_plus_1)), 0u);
  EXPECT_EQ(gcl::field_trace(f.one()), 2u);
  EXPECT_EQ(gcl::field_trace(f.element(3)), 1u);
  EXPECT_EQ(gcl::field_trace(f.zero()), 0u);
}

TEST(FieldTrace, MatchesFrobeniusSumLinearAndSurjective) {
  for (std::uint64_t d : {9u, 25u, 27u, 125u}) {
    const GaloisField& f = gcl::make_field_of_size(d);
    std::set<std::uint32_t> image;
    for (const auto& x : f.elements()) {
      const std::uint32_t t = gcl::field_trace(x);
      ASSERT_EQ(t, trace_oracle(f, x.code()));
      EXPECT_EQ(gcl::field_trace(x.pow(f.p())), t);
      image.insert(t);
    }
    EXPECT_EQ(image.size(), f.p());
    for (int k = 0; k < 50; ++k) {
      const FieldElement x = f.element((k * 7 + 1) % d), y = f.element((k * 13 + 5) % d);
      EXPECT_EQ(gcl::field_trace(x + y), (gcl::field_trace(x) + gcl::field_trace(y)) % f.p());
      EXPECT_EQ(gcl::field_trace(f.from_int(2) * x), 2 * gcl::field_trace(x) % f.p());
    }
  }
}

TEST(DiscreteLog, Examples) {
  const GaloisField& f = gcl::make_field(5, 1);
  EXPECT_EQ(f.theta().code(), 2u);
  EXPECT_EQ(gcl::discrete_log(f.element(4)), 2u);
  EXPECT_EQ(gcl::discrete_log(gcl::make_field_of_size(9).one()), 0u);
  EXPECT_THROW(gcl::discrete_log(f.zero()), gcl::DomainError);
}

TEST(QuadraticCharacter, Examples) {
  EXPECT_EQ(gcl::quadratic_character(gcl::make_field(5, 1).element(2)), -1);
  EXPECT_EQ(gcl::quadratic_character(gcl::make_field_of_size(9).from_int(2)), 1);
  EXPECT_EQ(gcl::quadratic_character(gcl::make_field(7, 1).zero()), 0);
}

TEST(QuadraticCharacter, MultiplicativeWithBalancedClasses) {
  for (std::uint64_t d : {3u, 5u, 7u, 9u, 11u, 13u, 25u, 27u}) {
    const GaloisField& f = gcl::make_field_of_size(d);
    std::set<std::uint32_t> squares;
    for (const auto& x : f.elements())
      if (!x.is_zero()) squares.insert((x * x).code());
    int q = 0, nr = 0;
    for (const auto& x : f.elements()) {
      if (x.is_zero()) continue;
      const int l = gcl::quadratic_character(x);
      EXPECT_EQ(l, squares.count(x.code()) ? 1 : -1);
      (l == 1 ? q : nr)++;
      for (const auto& y : f.elements())
        if (!y.is_zero()) {
          ASSERT_EQ(gcl::quadratic_character(x * y), l * gcl::quadratic_character(y));
        }
    }
    EXPECT_EQ(q, static_cast<int>((d - 1) / 2));
    EXPECT_EQ(nr, static_cast<int>((d - 1) / 2));
  }
}

TEST(QuadraticCharacter, PrimeSubfieldElements) {
  for (std::uint64_t d : {9u, 25u, 27u, 5u, 7u}) {
    const GaloisField& f = gcl::make_field_of_size(d);
    const std::uint32_t p = f.p();
    for (std::uint32_t z = 1; z < p; ++z) {
      int legendre = -1;
      for (std::uint32_t y = 1; y < p; ++y)
        if (y * y % p == z) legendre = 1;
      EXPECT_EQ(gcl::quadratic_character(f.from_int(z)), f.n() % 2 == 0 ? 1 : legendre) << d << " " << z;
    }
  }
}

TEST(QuadraticExtension, EmbeddingAndEta) {
  for (std::uint64_t d : {3u, 5u, 7u, 9u, 11u, 25u, 27u}) {
    const GaloisField& f = gcl::make_field_of_size(d);
    const auto& ext = gcl::QuadraticExtension::of(f);
    const GaloisField& e = ext.ext();
    EXPECT_EQ(ext.embed(f.theta()), ext.theta_bar().pow(d + 1));
    const FieldElement eta = ext.eta();
    EXPECT_EQ(eta.pow(d + 1), -e.one());
    EXPECT_EQ(eta.pow(d), -eta.inv());
    std::set<std::uint32_t> image;
    for (const auto& x : f.elements()) {
      image.insert(ext.embed(x).code());
      EXPECT_EQ(ext.restrict(ext.embed(x)), x);
      for (const auto& y : f.elements()) {
        ASSERT_EQ(ext.embed(x + y), ext.embed(x) + ext.embed(y));
        ASSERT_EQ(ext.embed(x * y), ext.embed(x) * ext.embed(y));
      }
    }
    std::set<std::uint32_t> fixed;
    for (const auto& y : e.elements())
      if (y.pow(d) == y) fixed.insert(y.code());
    EXPECT_EQ(image, fixed);
    if (d % 4 == 3) {
      const FieldElement w = eta - eta.inv();
      EXPECT_EQ(w.pow(d), w);
    }
  }
}

TEST(SqrtInExt, ResidueTieBreak) {
  const GaloisField& f = gcl::make_field(5, 1);
  const auto& ext = gcl::QuadraticExtension::of(f);
  EXPECT_EQ(gcl::sqrt_in_ext(ext, f.element(4)), ext.embed(f.element(2)));
  EXPECT_LT(ext.log(ext.embed(f.element(2))), ext.log(ext.embed(f.element(3))));
  for (std::uint64_t d : {3u, 7u, 9u, 25u}) {
    const auto& ed = gcl::QuadraticExtension::of(gcl::make_field_of_size(d));
    EXPECT_TRUE(gcl::sqrt_in_ext(ed, ed.base().one()).is_one());
  }
}

TEST(SqrtInExt, NonResidueIsAntiFixed) {
  for (std::uint64_t d : {5u, 7u, 9u, 11u, 25u}) {
    const GaloisField& f = gcl::make_field_of_size(d);
    const auto& ext = gcl::QuadraticExtension::of(f);
    for (const auto& x : f.elements()) {
      if (x.is_zero()) continue;
      const FieldElement y = gcl::sqrt_in_ext(ext, x);
      ASSERT_EQ(y * y, ext.embed(x));
      if (gcl::quadratic_character(x) == 1) {
        ASSERT_TRUE(ext.restrict(y).has_value());
        const FieldElement other = -y;
        EXPECT_LT(ext.log(y), ext.log(other));
      } else {
        EXPECT_FALSE(ext.restrict(y).has_value());
        EXPECT_EQ(y.pow(d), -y);
      }
    }
    EXPECT_THROW(gcl::sqrt_in_ext(ext, f.zero()), gcl::DomainError);
  }
}

TEST(DualBasis, TraceConstraints) {
  const GaloisField& f = gcl::make_field_of_size(9);
  const std::vector<FieldElement> basis{f.one(), f.element(3)};
  const auto dual = gcl::dual_basis(basis);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) EXPECT_EQ(gcl::field_trace(basis[r] * dual[s]), r == s ? 1u : 0u);
  // brute force: exactly one element meets each pair of trace conditions
  for (int s = 0; s < 2; ++s) {
    int hits = 0;
    for (const auto& e : f.elements())
      if (gcl::field_trace(basis[0] * e) == (s == 0) && gcl::field_trace(basis[1] * e) == (s == 1)) {
        ++hits;
        EXPECT_EQ(e, dual[s]);
      }
    EXPECT_EQ(hits, 1);
  }
}

TEST(DualBasis, PrimeFieldAndErrors) {
  const GaloisField& f = gcl::make_field(7, 1);
  for (std::uint32_t c = 1; c < 7; ++c) {
    const auto dual = gcl::dual_basis({f.element(c)});
    EXPECT_EQ(gcl::field_trace(f.element(c) * dual[0]), 1u);
    EXPECT_EQ(dual[0], f.element(c).inv());
  }
  const GaloisField& g = gcl::make_field_of_size(9);
  EXPECT_THROW(gcl::dual_basis({g.one(), g.one()}), gcl::DomainError);
  EXPECT_THROW(gcl::dual_basis({g.one()}), gcl::DomainError);
}

TEST(ModulusOverride, FileTableIsUsed) {
  const std::string path = ::testing::TempDir() + "moduli.txt";
  {
    std::ofstream out(path);
    out << "# alternative quadratic for F_49\n7 2 3,1,1\n";
  }
  gcl::load_modulus_table(path);
  const GaloisField& f = gcl::make_field(7, 2);
  EXPECT_EQ(f.modulus(), (gcl::Poly{3, 1, 1}));
  EXPECT_THROW(gcl::load_modulus_table(path + ".missing"), gcl::DomainError);
}
