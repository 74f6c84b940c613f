#pragma once

// 2x2 matrices over a field, phase-space points, and the group ESL(2, F_d)
// of matrices with determinant +1 or -1.

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gcl/gf.hpp"

namespace gcl {

/// [[a, b], [c, d]] over any ring-like T.
template <class T>
struct Mat2 {
  T a, b, c, d;

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 scaled(const T& s) const { return {s * a, s * b, s * c, s * d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d; }
};

struct PhasePoint {
  FieldElement u1, u2;

  PhasePoint operator+(const PhasePoint& o) const { return {u1 + o.u1, u2 + o.u2}; }
  PhasePoint operator-(const PhasePoint& o) const { return {u1 - o.u1, u2 - o.u2}; }
  PhasePoint operator-() const { return {-u1, -u2}; }
  PhasePoint scaled(FieldElement x) const { return {x * u1, x * u2}; }
  bool is_zero() const { return u1.is_zero() && u2.is_zero(); }
  friend bool operator==(const PhasePoint& a, const PhasePoint& b) { return a.u1 == b.u1 && a.u2 == b.u2; }
  friend bool operator<(const PhasePoint& a, const PhasePoint& b) {
    return std::make_pair(a.u1.code(), a.u2.code()) < std::make_pair(b.u1.code(), b.u2.code());
  }
};

inline std::vector<PhasePoint> all_points(const GaloisField& f) {
  std::vector<PhasePoint> out;
  out.reserve(static_cast<std::size_t>(f.size()) * f.size());
  for (const auto& x : f.elements())
    for (const auto& y : f.elements()) out.push_back({x, y});
  return out;
}

/// Element of ESL(2, F_d).
class SympMatrix {
 public:
  SympMatrix(FieldElement alpha, FieldElement beta, FieldElement gamma, FieldElement delta) : m_{alpha, beta, gamma, delta} {
    const FieldElement det = m_.det();
    if (det.is_one()) {
      det_ = 1;
    } else if (det == -alpha.field().one()) {
      det_ = -1;
    } else {
      throw DomainError("determinant must be +1 or -1");
    }
  }
  explicit SympMatrix(const Mat2<FieldElement>& m) : SympMatrix(m.a, m.b, m.c, m.d) {}

  static SympMatrix identity(const GaloisField& f) { return {f.one(), f.zero(), f.zero(), f.one()}; }
  /// diag(1, -1).
  static SympMatrix J(const GaloisField& f) { return {f.one(), f.zero(), f.zero(), -f.one()}; }
  /// Entries given as signed polynomial-basis codes.
  static SympMatrix from_codes(const GaloisField& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return {f.from_signed_code(a), f.from_signed_code(b), f.from_signed_code(c), f.from_signed_code(d)};
  }

  const GaloisField& field() const { return m_.a.field(); }
  FieldElement alpha() const { return m_.a; }
  FieldElement beta() const { return m_.b; }
  FieldElement gamma() const { return m_.c; }
  FieldElement delta() const { return m_.d; }
  const Mat2<FieldElement>& mat() const { return m_; }
  int det() const { return det_; }
  FieldElement det_element() const { return det_ == 1 ? field().one() : -field().one(); }
  FieldElement trace() const { return m_.trace(); }
  bool is_identity() const { return m_.a.is_one() && m_.b.is_zero() && m_.c.is_zero() && m_.d.is_one(); }

  SympMatrix operator*(const SympMatrix& o) const { return SympMatrix(m_ * o.m_, det_ * o.det_); }
  SympMatrix inverse() const {
    // F^{-1} = det * [[delta, -beta], [-gamma, alpha]] since det = det^{-1}
    const FieldElement s = det_element();
    return SympMatrix(Mat2<FieldElement>{s * m_.d, -(s * m_.b), -(s * m_.c), s * m_.a}, det_);
  }
  SympMatrix pow(std::int64_t e) const {
    SympMatrix base = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    SympMatrix r = identity(field());
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }
  PhasePoint apply(const PhasePoint& u) const { return {m_.a * u.u1 + m_.b * u.u2, m_.c * u.u1 + m_.d * u.u2}; }

  friend bool operator==(const SympMatrix& x, const SympMatrix& y) { return x.m_ == y.m_; }
  friend bool operator<(const SympMatrix& x, const SympMatrix& y) { return x.codes() < y.codes(); }
  std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t> codes() const {
    return {m_.a.code(), m_.b.code(), m_.c.code(), m_.d.code()};
  }
  std::string str() const {
    return "[[" + std::to_string(m_.a.code()) + "," + std::to_string(m_.b.code()) + "],[" + std::to_string(m_.c.code()) +
           "," + std::to_string(m_.d.code()) + "]]";
  }

 private:
  SympMatrix(const Mat2<FieldElement>& m, int det) : m_(m), det_(det) {}

  Mat2<FieldElement> m_;
  int det_ = 1;
};

/// Every element of ESL(2, F_d) (det +1 first when `with_anti`), in code order.
inline std::vector<SympMatrix> all_esl(const GaloisField& f, bool with_anti = true) {
  std::vector<SympMatrix> out;
  for (int det : {1, -1}) {
    if (det == -1 && !with_anti) break;
    const FieldElement D = det == 1 ? f.one() : -f.one();
    for (const auto& a : f.elements())
      for (const auto& b : f.elements())
        for (const auto& c : f.elements()) {
          if (!a.is_zero()) {
            out.emplace_back(a, b, c, (D + b * c) / a);
          } else if (!b.is_zero() && c == -D / b) {
            for (const auto& d : f.elements()) out.emplace_back(a, b, c, d);
          }
        }
  }
  return out;
}

inline std::vector<SympMatrix> all_sl(const GaloisField& f) { return all_esl(f, false); }

/// Uniform random element of ESL (or SL) by rejection on the entries.
template <class Rng>
SympMatrix random_esl(const GaloisField& f, Rng& rng, bool with_anti = true) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
  for (;;) {
    const FieldElement a = f.element(pick(rng)), b = f.element(pick(rng)), c = f.element(pick(rng)), d = f.element(pick(rng));
    const FieldElement det = a * d - b * c;
    if (det.is_one() || (with_anti && det == -f.one())) return {a, b, c, d};
  }
}

template <class Rng>
PhasePoint random_point(const GaloisField& f, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
  const FieldElement a = f.element(pick(rng));
  return {a, f.element(pick(rng))};
}

}  // namespace gcl
