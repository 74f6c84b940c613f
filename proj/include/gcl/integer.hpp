#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gcl {

/// Signed integer of unbounded size.
///
/// Values that fit in 64 bits live inline; anything larger spills into a
/// GMP integer and is demoted again as soon as it fits. All cyclotomic
/// coefficient arithmetic runs on this type, so the inline path carries
/// almost all of the load.
class Integer {
 public:
  Integer() = default;
  Integer(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(long v) : small_(v) {}       // NOLINT(google-explicit-constructor)
  Integer(int v) : small_(v) {}        // NOLINT(google-explicit-constructor)
  explicit Integer(const mpz_class& v) { assign(v); }
  explicit Integer(__int128 v) {
    if (v >= INT64_MIN && v <= INT64_MAX) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      const bool neg = v < 0;
      unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
      mpz_class hi(static_cast<unsigned long>(mag >> 64));
      mpz_class lo(static_cast<unsigned long>(mag & 0xffffffffffffffffULL));
      mpz_class r = (hi << 64) + lo;
      if (neg) r = -r;
      big_ = std::make_unique<mpz_class>(std::move(r));
    }
  }

  Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  bool is_small() const { return !big_; }
  /// Inline value; only meaningful when is_small().
  std::int64_t small() const { return small_; }

  bool is_zero() const { return !big_ && small_ == 0; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
  }

  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
  double to_double() const { return big_ ? big_->get_d() : static_cast<double>(small_); }
  std::string str() const { return big_ ? big_->get_str() : std::to_string(small_); }

  Integer operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
  }

  friend Integer operator+(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
    return Integer(mpz_class(a.to_mpz() + b.to_mpz()));
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
    return Integer(mpz_class(a.to_mpz() - b.to_mpz()));
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
    return Integer(mpz_class(a.to_mpz() * b.to_mpz()));
  }
  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }

  /// Quotient of a division known to be exact.
  static Integer exact_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("Integer: division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == INT64_MIN && b.small_ == -1)) return Integer(a.small_ / b.small_);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
  }

  /// Non-negative gcd; gcd(0, 0) = 0.
  static Integer gcd(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
      std::uint64_t x = a.small_ < 0 ? -a.small_ : a.small_;
      std::uint64_t y = b.small_ < 0 ? -b.small_ : b.small_;
      if (x == 0) return Integer(static_cast<std::int64_t>(y));
      if (y == 0) return Integer(static_cast<std::int64_t>(x));
      const int shift = __builtin_ctzll(x | y);
      x >>= __builtin_ctzll(x);
      do {
        y >>= __builtin_ctzll(y);
        if (x > y) std::swap(x, y);
        y -= x;
      } while (y != 0);
      return Integer(static_cast<std::int64_t>(x << shift));
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
  }

  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: a big value never fits in 64 bits
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    const int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

 private:
  void assign(const mpz_class& v) {
    if (v.fits_slong_p()) {
      small_ = v.get_si();
      big_.reset();
    } else {
      big_ = std::make_unique<mpz_class>(v);
    }
  }

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace gcl
