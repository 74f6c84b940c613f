#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_M).
//
// A scalar is (sum_k c_k zeta^k) / den with integer c_k, k < phi(M), and a
// positive common denominator reduced against the content of the c_k. This
// is the same set of values as a vector of rationals, but products and sums
// only ever touch integers.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gcl/gf.hpp"
#include "gcl/integer.hpp"

namespace gcl {

/// Default bound on phi(M).
inline constexpr std::uint32_t kMaxCycloDegree = 4096;

namespace detail {

inline std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t r = m;
  for (std::uint64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      while (m % q == 0) m /= q;
      r -= r / q;
    }
  if (m > 1) r -= r / m;
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  return r;
}

using IPoly = std::vector<std::int64_t>;

// Exact quotient of a by the monic b; throws if the remainder is nonzero.
inline IPoly ipoly_divexact(IPoly a, const IPoly& b) {
  const std::size_t db = b.size() - 1;
  IPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::int64_t c = a[k];
    q[k - db] = c;
    if (c)
      for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = checked_sub(a[k - db + j], checked_mul(c, b[j]));
  }
  for (std::size_t k = 0; k < db; ++k)
    if (a[k] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

inline const IPoly& cyclotomic_poly(std::uint32_t m) {
  static std::mutex mu;
  static std::map<std::uint32_t, IPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (std::uint32_t e = 1; e < m; ++e)
    if (m % e == 0) num = ipoly_divexact(num, cyclotomic_poly(e));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(num)).first->second;
}

inline unsigned __int128 uabs128(__int128 v) { return v < 0 ? -static_cast<unsigned __int128>(v) : v; }

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace detail

class CycloRing {
 public:
  CycloRing(const CycloRing&) = delete;
  CycloRing& operator=(const CycloRing&) = delete;

  /// Interned ring of conductor M; lives for the process lifetime.
  static const CycloRing& get(std::uint32_t m, std::uint32_t max_degree = kMaxCycloDegree) {
    if (m == 0) throw DomainError("conductor must be positive");
    const std::uint64_t phi = detail::euler_phi(m);
    if (phi > max_degree)
      throw DomainError("phi(" + std::to_string(m) + ") = " + std::to_string(phi) + " exceeds bound " + std::to_string(max_degree));
    static std::mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<CycloRing>> reg;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = reg[m];
    if (!slot) slot.reset(new CycloRing(m));
    return *slot;
  }

  std::uint32_t conductor() const { return m_; }
  std::uint32_t degree() const { return phi_; }
  const detail::IPoly& cyclotomic() const { return poly_; }
  /// Nonzero coefficients of Phi_M below the leading term.
  const std::vector<std::pair<std::uint32_t, std::int64_t>>& tail() const { return tail_; }

  /// zeta^j reduced mod Phi_M, j taken mod M.
  const detail::IPoly& monomial(std::int64_t j) const {
    std::call_once(mono_once_, [this] {
      monos_.resize(m_);
      detail::IPoly cur(phi_, 0);
      cur[0] = 1;
      for (std::uint32_t k = 0; k < m_; ++k) {
        monos_[k] = cur;
        // multiply by zeta: shift up, fold the overflow coefficient back in
        const std::int64_t top = cur[phi_ - 1];
        for (std::uint32_t i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top)
          for (auto [i, c] : tail_) cur[i] = detail::checked_sub(cur[i], detail::checked_mul(top, c));
      }
    });
    return monos_[static_cast<std::size_t>(detail::mod(j, m_))];
  }

 private:
  explicit CycloRing(std::uint32_t m) : m_(m), poly_(detail::cyclotomic_poly(m)) {
    phi_ = static_cast<std::uint32_t>(poly_.size() - 1);
    if (phi_ != detail::euler_phi(m)) throw std::logic_error("cyclotomic degree mismatch");
    for (std::uint32_t i = 0; i < phi_; ++i)
      if (poly_[i]) tail_.emplace_back(i, poly_[i]);
    // Phi_M must divide x^M - 1
    detail::IPoly xm(m + 1, 0);
    xm[0] = -1;
    xm[m] = 1;
    detail::ipoly_divexact(xm, poly_);
  }

  std::uint32_t m_;
  std::uint32_t phi_ = 0;
  detail::IPoly poly_;
  std::vector<std::pair<std::uint32_t, std::int64_t>> tail_;
  mutable std::once_flag mono_once_;
  mutable std::vector<detail::IPoly> monos_;
};

class CycloScalar {
 public:
  CycloScalar() = default;
  explicit CycloScalar(const CycloRing& r) : ring_(&r) {}
  CycloScalar(const CycloRing& r, const Integer& v) : ring_(&r) {
    if (!v.is_zero()) {
      num_.assign(r.degree(), Integer(0));
      num_[0] = v;
    }
  }
  /// Rational value num/den.
  static CycloScalar rational(const CycloRing& r, const Integer& num, const Integer& den) {
    CycloScalar s(r, num);
    if (den.is_zero()) throw DomainError("zero denominator");
    s.den_ = den;
    s.normalize();
    return s;
  }
  /// zeta_M^j.
  static CycloScalar zeta(const CycloRing& r, std::int64_t j) {
    CycloScalar s(r);
    const auto& m = r.monomial(j);
    s.num_.assign(m.begin(), m.end());
    return s;
  }
  /// From numerator coefficients (length phi) over a common denominator.
  static CycloScalar from_coeffs(const CycloRing& r, std::vector<Integer> num, Integer den = Integer(1)) {
    if (num.size() != r.degree()) throw DomainError("coefficient vector has wrong length");
    CycloScalar s(r);
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
  }

  const CycloRing& ring() const { return *ring_; }
  const CycloRing* ring_ptr() const { return ring_; }
  bool is_zero() const { return num_.empty(); }
  /// Numerator coefficient k (0 past the stored range).
  Integer numerator(std::size_t k) const { return num_.empty() ? Integer(0) : num_[k]; }
  const Integer& denominator() const { return den_; }
  mpq_class coeff(std::size_t k) const {
    mpq_class q(numerator(k).to_mpz(), den_.to_mpz());
    q.canonicalize();
    return q;
  }
  bool is_rational() const {
    for (std::size_t k = 1; k < num_.size(); ++k)
      if (!num_[k].is_zero()) return false;
    return true;
  }

  friend bool operator==(const CycloScalar& a, const CycloScalar& b) {
    return a.ring_ == b.ring_ && a.den_ == b.den_ && a.num_ == b.num_;
  }

  CycloScalar operator-() const {
    CycloScalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    check_ring(a, b);
    CycloScalar r(*a.ring_);
    const std::size_t phi = a.num_.size();
    r.num_.resize(phi);
    if (a.den_ == b.den_) {
      for (std::size_t k = 0; k < phi; ++k) r.num_[k] = a.num_[k] + b.num_[k];
      r.den_ = a.den_;
    } else {
      for (std::size_t k = 0; k < phi; ++k) r.num_[k] = a.num_[k] * b.den_ + b.num_[k] * a.den_;
      r.den_ = a.den_ * b.den_;
    }
    r.normalize();
    return r;
  }
  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) { return a + (-b); }

  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    if (a.is_zero() || b.is_zero()) return CycloScalar(*(a.ring_ ? a.ring_ : b.ring_));
    check_ring(a, b);
    CycloScalar r(*a.ring_);
    if (!mul_fast(a, b, r)) mul_slow(a, b, r);
    r.normalize();
    return r;
  }
  CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
  CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }

  /// Multiply by the integer v.
  CycloScalar scaled(const Integer& v) const {
    if (v.is_zero() || is_zero()) return CycloScalar(*ring_);
    CycloScalar r = *this;
    for (auto& c : r.num_) c *= v;
    r.normalize();
    return r;
  }
  /// Divide by the nonzero integer v.
  CycloScalar divided(const Integer& v) const {
    if (v.is_zero()) throw DomainError("division by zero");
    if (is_zero()) return *this;
    CycloScalar r = *this;
    r.den_ *= v;
    if (r.den_.sign() < 0) {
      r.den_ = -r.den_;
      for (auto& c : r.num_) c = -c;
    }
    r.normalize();
    return r;
  }

  /// Image under zeta -> zeta^{-1}.
  CycloScalar conj() const {
    if (is_zero()) return *this;
    const std::uint32_t m = ring_->conductor();
    std::vector<Integer> acc(num_.size(), Integer(0));
    for (std::size_t k = 0; k < num_.size(); ++k) {
      if (num_[k].is_zero()) continue;
      const auto& mono = ring_->monomial(static_cast<std::int64_t>(m - k));
      for (std::size_t i = 0; i < mono.size(); ++i)
        if (mono[i]) acc[i] += num_[k] * Integer(mono[i]);
    }
    CycloScalar r(*ring_);
    r.num_ = std::move(acc);
    r.den_ = den_;
    r.normalize();
    return r;
  }

  /// Exact inverse via the multiplication matrix; throws on zero.
  CycloScalar inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    const std::size_t phi = ring_->degree();
    // column j = this * zeta^j; solve A c = e_0
    std::vector<std::vector<mpq_class>> a(phi, std::vector<mpq_class>(phi + 1));
    for (std::size_t j = 0; j < phi; ++j) {
      CycloScalar col = *this * zeta(*ring_, static_cast<std::int64_t>(j));
      for (std::size_t i = 0; i < phi; ++i) a[i][j] = col.coeff(i);
    }
    a[0][phi] = 1;
    for (std::size_t c = 0; c < phi; ++c) {
      std::size_t piv = c;
      while (piv < phi && a[piv][c] == 0) ++piv;
      if (piv == phi) throw std::logic_error("singular multiplication matrix");
      std::swap(a[piv], a[c]);
      const mpq_class inv = 1 / a[c][c];
      for (std::size_t j = c; j <= phi; ++j) a[c][j] *= inv;
      for (std::size_t i = 0; i < phi; ++i) {
        if (i == c || a[i][c] == 0) continue;
        const mpq_class f = a[i][c];
        for (std::size_t j = c; j <= phi; ++j) a[i][j] -= f * a[c][j];
      }
    }
    return from_rationals(*ring_, [&](std::size_t i) { return a[i][phi]; });
  }
  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }

  template <class Getter>
  static CycloScalar from_rationals(const CycloRing& r, Getter get) {
    const std::size_t phi = r.degree();
    mpz_class den = 1;
    for (std::size_t i = 0; i < phi; ++i) den = lcm(den, mpq_class(get(i)).get_den());
    std::vector<Integer> num;
    num.reserve(phi);
    for (std::size_t i = 0; i < phi; ++i) {
      mpq_class q = get(i);
      num.emplace_back(mpz_class(q.get_num() * (den / q.get_den())));
    }
    return from_coeffs(r, std::move(num), Integer(den));
  }

  /// Float embedding at zeta = exp(2 pi i / M).
  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    const long double m = ring_->conductor();
    const long double two_pi = 6.283185307179586476925286766559L;
    std::complex<long double> s = 0;
    for (std::size_t k = 0; k < num_.size(); ++k) {
      if (num_[k].is_zero()) continue;
      const long double ang = two_pi * static_cast<long double>(k) / m;
      s += std::complex<long double>(std::cos(ang), std::sin(ang)) * static_cast<long double>(num_[k].to_double());
    }
    s /= static_cast<long double>(den_.to_double());
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
  }

  /// `M:[c0,c1,...]` with fractional coefficients written num/den.
  std::string str() const {
    std::string s = std::to_string(ring_ ? ring_->conductor() : 0) + ":[";
    const std::size_t phi = ring_ ? ring_->degree() : 0;
    for (std::size_t k = 0; k < phi; ++k) {
      if (k) s += ",";
      s += coeff(k).get_str();
    }
    return s + "]";
  }

 private:
  friend class CycloAccumulator;

  static void check_ring(const CycloScalar& a, const CycloScalar& b) {
    if (a.ring_ != b.ring_) throw DomainError("cyclotomic scalars from different rings");
  }

  static bool all_small(const std::vector<Integer>& v) {
    for (const auto& c : v)
      if (!c.is_small()) return false;
    return true;
  }

  // Reduce a length-(2 phi - 1) convolution mod Phi_M, in place.
  template <class T, class MulSub>
  static void reduce_conv(std::vector<T>& conv, const CycloRing& r, MulSub mulsub) {
    const std::size_t phi = r.degree();
    for (std::size_t k = conv.size(); k-- > phi;) {
      if (conv[k] == T(0)) continue;
      const T c = conv[k];
      for (auto [i, coef] : r.tail()) mulsub(conv[k - phi + i], c, coef);
      conv[k] = T(0);
    }
    conv.resize(phi);
  }

  static bool conv_fast(const std::vector<Integer>& a, const std::vector<Integer>& b, std::vector<__int128>& conv) {
    const std::size_t phi = a.size();
    for (std::size_t i = 0; i < phi; ++i) {
      const std::int64_t ai = a[i].small();
      if (ai == 0) continue;
      for (std::size_t j = 0; j < phi; ++j) {
        const std::int64_t bj = b[j].small();
        if (bj == 0) continue;
        const __int128 prod = static_cast<__int128>(ai) * bj;
        if (__builtin_add_overflow(conv[i + j], prod, &conv[i + j])) return false;
      }
    }
    return true;
  }

  static bool reduce_fast(std::vector<__int128>& conv, const CycloRing& r) {
    bool ok = true;
    reduce_conv(conv, r, [&](__int128& slot, __int128 c, std::int64_t coef) {
      __int128 t;
      if (__builtin_mul_overflow(c, static_cast<__int128>(coef), &t) || __builtin_sub_overflow(slot, t, &slot)) ok = false;
    });
    return ok;
  }

  static bool mul_fast(const CycloScalar& a, const CycloScalar& b, CycloScalar& out) {
    if (!all_small(a.num_) || !all_small(b.num_) || !a.den_.is_small() || !b.den_.is_small()) return false;
    std::vector<__int128> conv(2 * a.num_.size() - 1, 0);
    if (!conv_fast(a.num_, b.num_, conv) || !reduce_fast(conv, *a.ring_)) return false;
    out.num_.resize(conv.size());
    for (std::size_t k = 0; k < conv.size(); ++k) out.num_[k] = Integer(conv[k]);
    out.den_ = a.den_ * b.den_;
    return true;
  }

  static void mul_slow(const CycloScalar& a, const CycloScalar& b, CycloScalar& out) {
    const std::size_t phi = a.num_.size();
    std::vector<Integer> conv(2 * phi - 1, Integer(0));
    for (std::size_t i = 0; i < phi; ++i) {
      if (a.num_[i].is_zero()) continue;
      for (std::size_t j = 0; j < phi; ++j)
        if (!b.num_[j].is_zero()) conv[i + j] += a.num_[i] * b.num_[j];
    }
    reduce_conv(conv, *a.ring_, [](Integer& slot, const Integer& c, std::int64_t coef) { slot -= c * Integer(coef); });
    out.num_ = std::move(conv);
    out.den_ = a.den_ * b.den_;
  }

  // Canonical form: zero is an empty numerator with den 1, otherwise
  // gcd(content, den) = 1 and den > 0.
  void normalize() {
    bool zero = true;
    for (const auto& c : num_)
      if (!c.is_zero()) {
        zero = false;
        break;
      }
    if (zero) {
      num_.clear();
      den_ = Integer(1);
      return;
    }
    if (den_.sign() < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    if (den_ == Integer(1)) return;
    Integer g = den_;
    for (const auto& c : num_) {
      if (c.is_zero()) continue;
      g = Integer::gcd(g, c);
      if (g == Integer(1)) return;
    }
    den_ = Integer::exact_div(den_, g);
    for (auto& c : num_)
      if (!c.is_zero()) c = Integer::exact_div(c, g);
  }

  const CycloRing* ring_ = nullptr;
  std::vector<Integer> num_;  // empty for zero
  Integer den_ = Integer(1);
};

/// Running sum of products a_k * b_k with a single reduction at the end.
/// Keeps an unreduced 128-bit convolution while numerators and denominators
/// stay small and compatible, and falls back to plain scalar sums otherwise.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(const CycloRing& r) : ring_(&r), conv_(2 * r.degree() - 1, 0), slow_(r) {}

  void add_product(const CycloScalar& a, const CycloScalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (fast_ && try_fast(a, b)) return;
    spill();
    slow_ += a * b;
  }

  CycloScalar result() {
    spill();
    return slow_;
  }

 private:
  static std::uint64_t max_abs(const std::vector<Integer>& v) {
    std::uint64_t m = 0;
    for (const auto& c : v) {
      const std::int64_t x = c.small();
      const std::uint64_t ax = x < 0 ? 0 - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
      m = std::max(m, ax);
    }
    return m;
  }

  // Either adds a*b to the buffer or leaves every member untouched. A running
  // bound on the buffer's magnitude replaces per-term overflow checks.
  bool try_fast(const CycloScalar& a, const CycloScalar& b) {
    using u128 = unsigned __int128;
    if (!a.den_.is_small() || !b.den_.is_small()) return false;
    if (!CycloScalar::all_small(a.num_) || !CycloScalar::all_small(b.num_)) return false;
    const __int128 pd = static_cast<__int128>(a.den_.small()) * b.den_.small();
    __int128 scale_new = 1, scale_old = 1;
    if (den_ != 0 && pd != den_) {
      if (den_ % pd == 0) {
        scale_new = den_ / pd;
      } else if (pd % den_ == 0) {
        scale_old = pd / den_;
      } else {
        return false;
      }
    }
    const u128 limit = u128(1) << 125;
    const std::size_t phi = a.num_.size();
    u128 term = static_cast<u128>(max_abs(a.num_)) * max_abs(b.num_), bound = bound_;
    if (__builtin_mul_overflow(term, static_cast<u128>(phi), &term) ||
        __builtin_mul_overflow(term, static_cast<u128>(scale_new), &term) ||
        __builtin_mul_overflow(bound, static_cast<u128>(scale_old), &bound) ||
        __builtin_add_overflow(bound, term, &bound) || bound > limit)
      return false;
    if (scale_old != 1)
      for (auto& c : conv_) c *= scale_old;
    if (den_ == 0 || scale_old != 1) den_ = pd;
    bound_ = bound;
    for (std::size_t i = 0; i < phi; ++i) {
      const std::int64_t ai = a.num_[i].small();
      if (ai == 0) continue;
      const __int128 as = static_cast<__int128>(ai) * scale_new;
      for (std::size_t j = 0; j < phi; ++j) {
        const std::int64_t bj = b.num_[j].small();
        if (bj) conv_[i + j] += as * bj;
      }
    }
    return true;
  }

  // Move whatever the fast buffer holds into the exact slow sum.
  void spill() {
    if (den_ != 0) {
      CycloScalar part(*ring_);
      std::vector<__int128> tmp = conv_;
      if (CycloScalar::reduce_fast(tmp, *ring_)) {
        part.num_.resize(tmp.size());
        for (std::size_t k = 0; k < tmp.size(); ++k) part.num_[k] = Integer(tmp[k]);
      } else {
        std::vector<Integer> big;
        big.reserve(conv_.size());
        for (auto c : conv_) big.emplace_back(c);
        CycloScalar::reduce_conv(big, *ring_, [](Integer& slot, const Integer& c, std::int64_t coef) { slot -= c * Integer(coef); });
        part.num_ = std::move(big);
      }
      part.den_ = Integer(den_);
      part.normalize();
      slow_ += part;
    }
    fast_ = false;
    den_ = 0;
    bound_ = 0;
    std::fill(conv_.begin(), conv_.end(), 0);
  }

  const CycloRing* ring_;
  bool fast_ = true;
  __int128 den_ = 0;
  unsigned __int128 bound_ = 0;
  std::vector<__int128> conv_;
  CycloScalar slow_;
};

inline std::uint32_t lcm_u32(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t l = std::lcm(a, b);
  if (l > UINT32_MAX) throw DomainError("conductor too large");
  return static_cast<std::uint32_t>(l);
}

/// Ring with conductor lcm(4, p, extra...), big enough for tau, i and the
/// requested roots of unity.
inline const CycloRing& make_ring_for(std::uint32_t d, const std::vector<std::uint32_t>& extra_orders = {}) {
  std::uint32_t p = 3;
  while (d % p) p += 2;
  std::uint32_t m = lcm_u32(4, p);
  for (auto e : extra_orders) {
    if (e == 0) throw DomainError("root-of-unity order must be positive");
    m = lcm_u32(m, e);
  }
  return CycloRing::get(m);
}

inline CycloScalar root_of_unity(const CycloRing& r, std::uint32_t m, std::int64_t k) {
  if (m == 0 || r.conductor() % m != 0)
    throw DomainError(std::to_string(m) + "-th roots of unity are not in Q(zeta_" + std::to_string(r.conductor()) + ")");
  return CycloScalar::zeta(r, detail::mod(k, m) * (r.conductor() / m));
}

inline CycloScalar i_unit(const CycloRing& r) { return root_of_unity(r, 4, 1); }

/// Field plus cyclotomic ring: everything needed to write operators on C^d.
class Context {
 public:
  Context(const GaloisField& f, const CycloRing& r) : field_(&f), ring_(&r) {
    if (r.conductor() % 4 != 0 || r.conductor() % f.p() != 0)
      throw DomainError("ring conductor must be divisible by 4 and p");
    const std::uint32_t m = r.conductor(), p = f.p();
    tau_step_ = static_cast<std::int64_t>(m / p) * ((p + 1) / 2);
    tau_.reserve(p);
    for (std::uint32_t k = 0; k < p; ++k) tau_.push_back(CycloScalar::zeta(r, tau_step_ * k));
    compute_sqrt_d();
  }
  static Context make(const GaloisField& f, const std::vector<std::uint32_t>& extra_orders = {}) {
    return Context(f, make_ring_for(f.size(), extra_orders));
  }

  const GaloisField& field() const { return *field_; }
  const CycloRing& ring() const { return *ring_; }
  std::uint32_t d() const { return field_->size(); }
  std::uint32_t p() const { return field_->p(); }

  /// tau^k with tau = omega^{(p+1)/2}; tau^2 = omega and tau^p = 1.
  const CycloScalar& tau_pow(std::int64_t k) const { return tau_[static_cast<std::size_t>(detail::mod(k, p()))]; }
  /// Exponent e with tau^k = zeta_M^e.
  std::int64_t tau_exponent(std::int64_t k) const { return detail::mod(k, p()) * tau_step_; }
  CycloScalar omega_pow(std::int64_t k) const { return tau_pow(2 * k); }
  CycloScalar zeta(std::int64_t e) const { return CycloScalar::zeta(*ring_, e); }
  CycloScalar scalar(std::int64_t v) const { return CycloScalar(*ring_, Integer(v)); }
  CycloScalar zero() const { return CycloScalar(*ring_); }

  /// Phase-dressed quadratic character; 1 at zero.
  CycloScalar l_tilde(FieldElement x) const {
    if (x.is_zero()) return scalar(1);
    // -i^{-n(p+3)/2} l(x)
    const std::int64_t e = -static_cast<std::int64_t>(field_->n()) * ((p() + 3) / 2);
    return -root_of_unity(*ring_, 4, e).scaled(Integer(quadratic_character(x)));
  }

  const CycloScalar& sqrt_d() const { return sqrt_d_; }
  const CycloScalar& inv_sqrt_d() const { return inv_sqrt_d_; }

 private:
  void compute_sqrt_d() {
    CycloScalar sum = zero();
    for (const auto& x : field_->elements()) sum += tau_pow(field_trace(x * x));
    sqrt_d_ = l_tilde(field_->one()).inverse() * sum;
    if (sqrt_d_ * sqrt_d_ != scalar(d())) throw std::logic_error("sqrt_d does not square to d");
    const auto z = sqrt_d_.to_complex();
    if (!(z.real() > 0) || std::abs(z.imag()) > 1e-9) throw std::logic_error("sqrt_d is not positive real");
    inv_sqrt_d_ = sqrt_d_.divided(Integer(static_cast<std::int64_t>(d())));
  }

  const GaloisField* field_;
  const CycloRing* ring_;
  std::int64_t tau_step_ = 0;
  std::vector<CycloScalar> tau_;
  CycloScalar sqrt_d_, inv_sqrt_d_;
};

inline const CycloScalar& tau(const Context& ctx) { return ctx.tau_pow(1); }
inline const CycloScalar& sqrt_d(const Context& ctx) { return ctx.sqrt_d(); }
inline CycloScalar l_tilde(const Context& ctx, FieldElement x) { return ctx.l_tilde(x); }

/// Left side of the quadratic Gauss sum, by direct summation over the field.
inline CycloScalar gauss_sum(const Context& ctx, FieldElement a, FieldElement b) {
  if (a.is_zero()) throw DomainError("gauss_sum needs a != 0");
  CycloScalar s = ctx.zero();
  for (const auto& x : ctx.field().elements()) s += ctx.tau_pow(field_trace(a * x * x + b * x));
  return s;
}

}  // namespace gcl
