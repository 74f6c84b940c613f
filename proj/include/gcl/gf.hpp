#pragma once

// Finite fields GF(p^n) for odd p, and the quadratic extension GF(p^{2n}).
//
// Elements are encoded as integers sum_k c_k p^k over the polynomial basis
// {1, x, ..., x^{n-1}}. Multiplication goes through dense exp/log tables
// built from the field's primitive element; addition works digit-wise.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gcl/conway_table.hpp"

namespace gcl {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Default upper bound on the size of a base field.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;
/// Fields above this size get no built-in modulus.
inline constexpr std::uint64_t kMaxDefaultFieldSize = 2048;
/// The extension GF(d^2) keeps dense tables, so it is capped separately.
inline constexpr std::uint64_t kMaxExtensionSize = detail::kConwayTableLimit;

using Poly = std::vector<std::uint32_t>;  // coefficients c0 .. cn over Z_p

namespace detail {

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t q = 2; q * q <= v; ++q)
    if (v % q == 0) return false;
  return true;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::uint64_t checked_pow(std::uint64_t p, std::uint32_t n, std::uint64_t limit) {
  std::uint64_t d = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    if (d > limit / p) return limit + 1;
    d *= p;
  }
  return d;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// a mod b over Z_p, b monic. Result has degree < deg b.
inline Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead)
      for (std::size_t j = 0; j <= db; ++j)
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - lead) * b[j]) % p);
    a.pop_back();
  }
  return a;
}

inline bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1 .. n/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  if (n == 1) return true;
  if (n <= 2) {
    // no roots means irreducible in degree 2
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (std::size_t k = f.size(); k-- > 0;) v = (v * x + f[k]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  for (std::uint32_t deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = checked_pow(p, deg, UINT64_MAX / 2);
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(deg + 1);
      std::uint64_t c = code;
      for (std::uint32_t k = 0; k < deg; ++k) {
        g[k] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[deg] = 1;
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

inline std::string poly_str(const Poly& f) {
  std::string s;
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(f[k]);
  return s;
}

// Moduli loaded from a user file, keyed by (p, n).
class ModulusOverrides {
 public:
  static ModulusOverrides& instance() {
    static ModulusOverrides inst;
    return inst;
  }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open modulus table '" + path + "'");
    std::string line;
    std::lock_guard<std::mutex> lock(mu_);
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::uint32_t p = 0, n = 0;
      std::string coeffs;
      if (!(ls >> p >> n >> coeffs)) throw DomainError("malformed modulus line: " + line);
      Poly f;
      std::stringstream cs(coeffs);
      std::string tok;
      while (std::getline(cs, tok, ',')) f.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      if (f.size() != n + 1 || f.back() != 1) throw DomainError("modulus must be monic of degree n: " + line);
      table_[{p, n}] = f;
    }
  }

  std::optional<Poly> lookup(std::uint32_t p, std::uint32_t n) {
    std::call_once(env_once_, [this] {
      if (const char* path = std::getenv("CLIFFORD_CONWAY_TABLE"); path && *path) load_file(path);
    });
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find({p, n});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::mutex mu_;
  std::once_flag env_once_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table_;
};

inline std::optional<Poly> builtin_conway(std::uint32_t p, std::uint32_t n) {
  for (const auto& e : kConwayTable)
    if (e.p == p && e.n == n) return Poly(e.coeffs, e.coeffs + n + 1);
  return std::nullopt;
}

}  // namespace detail

/// Load `p n c0,...,cn` lines that take precedence over the built-in table.
inline void load_modulus_table(const std::string& path) { detail::ModulusOverrides::instance().load_file(path); }

class GaloisField;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const GaloisField* f, std::uint32_t code) : f_(f), code_(code) {}

  const GaloisField& field() const { return *f_; }
  const GaloisField* field_ptr() const { return f_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  inline FieldElement operator+(FieldElement o) const;
  inline FieldElement operator-(FieldElement o) const;
  inline FieldElement operator-() const;
  inline FieldElement operator*(FieldElement o) const;
  inline FieldElement operator/(FieldElement o) const;
  FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
  FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
  FieldElement& operator*=(FieldElement o) { return *this = *this * o; }
  inline FieldElement inv() const;
  inline FieldElement pow(std::int64_t e) const;

  friend bool operator==(FieldElement a, FieldElement b) { return a.f_ == b.f_ && a.code_ == b.code_; }
  friend bool operator<(FieldElement a, FieldElement b) { return a.code_ < b.code_; }

 private:
  const GaloisField* f_ = nullptr;
  std::uint32_t code_ = 0;
};

class GaloisField {
 public:
  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t size() const { return d_; }
  const Poly& modulus() const { return modulus_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  /// The primitive element all logarithms are taken against.
  FieldElement theta() const { return {this, gen_}; }
  FieldElement element(std::uint32_t code) const {
    if (code >= d_) throw DomainError("element code " + std::to_string(code) + " out of range for GF(" + std::to_string(d_) + ")");
    return {this, code};
  }
  /// Integer into the prime subfield.
  FieldElement from_int(std::int64_t v) const { return {this, static_cast<std::uint32_t>(detail::mod(v, p_))}; }
  /// Polynomial-basis code; a negative value stands for the additive inverse.
  FieldElement from_signed_code(std::int64_t v) const {
    if (v >= static_cast<std::int64_t>(d_) || -v >= static_cast<std::int64_t>(d_))
      throw DomainError("element code " + std::to_string(v) + " out of range for GF(" + std::to_string(d_) + ")");
    return v < 0 ? -element(static_cast<std::uint32_t>(-v)) : element(static_cast<std::uint32_t>(v));
  }
  FieldElement exp(std::int64_t k) const {
    return {this, exp_[static_cast<std::size_t>(detail::mod(k, d_ - 1))]};
  }
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(d_);
    for (std::uint32_t c = 0; c < d_; ++c) out.push_back({this, c});
    return out;
  }

  std::vector<std::uint32_t> coords(std::uint32_t code) const {
    std::vector<std::uint32_t> c(n_);
    for (std::uint32_t k = 0; k < n_; ++k) {
      c[k] = code % p_;
      code /= p_;
    }
    return c;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
    std::uint32_t code = 0;
    for (std::uint32_t k = n_; k-- > 0;) code = code * p_ + c[k] % p_;
    return code;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (n_ == 1) return (a + b) % p_;
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t k = 0; k < n_; ++k) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (n_ == 1) return a ? p_ - a : 0;
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t k = 0; k < n_; ++k) {
      const std::uint32_t c = a % p_;
      r += (c ? p_ - c : 0) * scale;
      a /= p_;
      scale *= p_;
    }
    return r;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return log_[a] == 0 ? 1 : exp_[d_ - 1 - log_[a]];
  }
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
      if (e < 0) throw DomainError("negative power of zero");
      return e == 0 ? 1 : 0;
    }
    const std::int64_t m = d_ - 1;
    const std::int64_t k = detail::mod(static_cast<std::int64_t>(log_[a]) * detail::mod(e, m), m);
    return exp_[static_cast<std::size_t>(k)];
  }
  /// Discrete log base theta, in [0, d-2].
  std::uint32_t log(std::uint32_t a) const {
    if (a == 0) throw DomainError("discrete log of zero");
    return log_[a];
  }
  /// Field trace to Z_p, as an integer in [0, p-1].
  std::uint32_t trace(std::uint32_t a) const {
    std::uint64_t t = 0;
    for (std::uint32_t k = 0; k < n_; ++k) {
      t += static_cast<std::uint64_t>(a % p_) * trace_basis_[k];
      a /= p_;
    }
    return static_cast<std::uint32_t>(t % p_);
  }

  /// Interned field; the returned reference stays valid for the process lifetime.
  static const GaloisField& make(std::uint32_t p, std::uint32_t n, std::optional<Poly> modulus = std::nullopt,
                                 std::uint64_t max_size = kMaxFieldSize);

  /// Same modulus, different primitive element. Used for GF(d^2) where the
  /// logarithm base has to be compatible with the base field.
  static const GaloisField& make_with_generator(std::uint32_t p, const Poly& modulus, std::uint32_t generator);

  /// Multiplication straight from the polynomial representation; independent
  /// of the tables and used to build and cross-check them.
  std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const {
    const auto ca = coords(a), cb = coords(b);
    Poly prod(2 * n_ - 1, 0);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    Poly r = detail::poly_rem(prod, modulus_, p_);
    r.resize(n_, 0);
    return encode(r);
  }

 private:
  struct Key {
    std::uint32_t p;
    Poly modulus;
    std::uint32_t generator;
    bool operator<(const Key& o) const { return std::tie(p, modulus, generator) < std::tie(o.p, o.modulus, o.generator); }
  };
  static std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
  }
  static std::map<Key, std::unique_ptr<GaloisField>>& registry() {
    static std::map<Key, std::unique_ptr<GaloisField>> r;
    return r;
  }
  static const GaloisField& intern(std::uint32_t p, const Poly& modulus, std::uint32_t generator) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& slot = registry()[Key{p, modulus, generator}];
    if (!slot) slot.reset(new GaloisField(p, modulus, generator));
    return *slot;
  }

  GaloisField(std::uint32_t p, const Poly& modulus, std::uint32_t generator)
      : p_(p), n_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(modulus), gen_(generator) {
    d_ = static_cast<std::uint32_t>(detail::checked_pow(p_, n_, UINT32_MAX));
    exp_.assign(2 * static_cast<std::size_t>(d_ - 1), 0);
    log_.assign(d_, UINT32_MAX);
    std::uint32_t cur = 1;
    for (std::uint32_t k = 0; k < d_ - 1; ++k) {
      if (log_[cur] != UINT32_MAX)
        throw DomainError("element " + std::to_string(gen_) + " is not primitive for modulus " + detail::poly_str(modulus_));
      log_[cur] = k;
      exp_[k] = cur;
      exp_[k + d_ - 1] = cur;
      cur = poly_mul(cur, gen_);
    }
    if (cur != 1) throw DomainError("modulus " + detail::poly_str(modulus_) + " does not define a field");
    trace_basis_.resize(n_);
    std::uint32_t mono = 1;
    for (std::uint32_t k = 0; k < n_; ++k) {
      // sum of the n Frobenius images, read off in the prime subfield
      std::uint32_t s = 0, y = mono;
      for (std::uint32_t r = 0; r < n_; ++r) {
        s = add(s, y);
        y = pow(y, p_);
      }
      if (s >= p_) throw std::logic_error("trace left the prime subfield");
      trace_basis_[k] = s;
      mono = poly_mul(mono, n_ == 1 ? 0 : p_);
    }
  }

  std::uint32_t p_, n_, d_ = 0;
  Poly modulus_;
  std::uint32_t gen_;
  std::vector<std::uint32_t> exp_, log_, trace_basis_;
};

inline FieldElement FieldElement::operator+(FieldElement o) const { return {f_, f_->add(code_, o.code_)}; }
inline FieldElement FieldElement::operator-(FieldElement o) const { return {f_, f_->add(code_, f_->neg(o.code_))}; }
inline FieldElement FieldElement::operator-() const { return {f_, f_->neg(code_)}; }
inline FieldElement FieldElement::operator*(FieldElement o) const { return {f_, f_->mul(code_, o.code_)}; }
inline FieldElement FieldElement::operator/(FieldElement o) const { return {f_, f_->mul(code_, f_->inv(o.code_))}; }
inline FieldElement FieldElement::inv() const { return {f_, f_->inv(code_)}; }
inline FieldElement FieldElement::pow(std::int64_t e) const { return {f_, f_->pow(code_, e)}; }

namespace detail {

// Root of the modulus that serves as primitive element: x for n > 1, -c0 for n = 1.
inline std::uint32_t modulus_root(std::uint32_t p, const Poly& modulus) {
  if (modulus.size() == 2) return modulus[0] ? p - modulus[0] : 0;
  return p;
}

inline void check_modulus(std::uint32_t p, std::uint32_t n, const Poly& f) {
  if (f.size() != n + 1 || f.back() != 1) throw DomainError("modulus must be monic of degree " + std::to_string(n));
  for (auto c : f)
    if (c >= p) throw DomainError("modulus coefficient out of range: " + poly_str(f));
  if (!is_irreducible(f, p)) throw DomainError("modulus " + poly_str(f) + " is reducible over Z_" + std::to_string(p));
}

// First monic polynomial of degree n, in code order, whose root x is primitive.
inline Poly first_primitive_poly(std::uint32_t p, std::uint32_t n) {
  const std::uint64_t d = checked_pow(p, n, UINT32_MAX);
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t m = d - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      prime_factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) prime_factors.push_back(m);
  for (std::uint64_t code = 1; code < d; ++code) {
    Poly f(n + 1);
    std::uint64_t c = code;
    for (std::uint32_t k = 0; k < n; ++k) {
      f[k] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[n] = 1;
    if (f[0] == 0 || !is_irreducible(f, p)) continue;
    // x^e mod f by square-and-multiply on coefficient vectors
    auto mulmod = [&](const Poly& a, const Poly& b) {
      Poly prod(2 * n - 1, 0);
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
      Poly r = poly_rem(prod, f, p);
      r.resize(n, 0);
      return r;
    };
    auto xpow = [&](std::uint64_t e) {
      Poly r(n, 0), b(n, 0);
      r[0] = 1;
      b[1 % n] = 1;
      if (n == 1) b[0] = (p - f[0]) % p;
      while (e) {
        if (e & 1) r = mulmod(r, b);
        b = mulmod(b, b);
        e >>= 1;
      }
      return r;
    };
    bool primitive = true;
    for (auto q : prime_factors) {
      Poly r = xpow((d - 1) / q);
      if (r[0] == 1 && std::all_of(r.begin() + 1, r.end(), [](std::uint32_t v) { return v == 0; })) {
        primitive = false;
        break;
      }
    }
    if (primitive) return f;
  }
  throw std::logic_error("no primitive polynomial found");
}

inline Poly default_modulus(std::uint32_t p, std::uint32_t n, std::uint64_t table_limit) {
  if (auto f = ModulusOverrides::instance().lookup(p, n)) return *f;
  const std::uint64_t d = checked_pow(p, n, UINT32_MAX);
  if (d > table_limit)
    throw DomainError("no default modulus for GF(" + std::to_string(p) + "^" + std::to_string(n) + "); supply one");
  if (auto f = builtin_conway(p, n)) return *f;
  return first_primitive_poly(p, n);
}

}  // namespace detail

inline const GaloisField& GaloisField::make(std::uint32_t p, std::uint32_t n, std::optional<Poly> modulus,
                                            std::uint64_t max_size) {
  if (p == 2) throw DomainError("p must be odd");
  if (!detail::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("n must be positive");
  const std::uint64_t d = detail::checked_pow(p, n, max_size);
  if (d > max_size) throw DomainError("field size exceeds bound " + std::to_string(max_size));
  Poly f = modulus ? *modulus : detail::default_modulus(p, n, max_size <= kMaxDefaultFieldSize ? max_size : kMaxDefaultFieldSize);
  detail::check_modulus(p, n, f);
  return intern(p, f, detail::modulus_root(p, f));
}

inline const GaloisField& GaloisField::make_with_generator(std::uint32_t p, const Poly& modulus, std::uint32_t generator) {
  return intern(p, modulus, generator);
}

/// Field of size d = p^n, with p and n recovered from d.
inline const GaloisField& make_field_of_size(std::uint64_t d, std::optional<Poly> modulus = std::nullopt) {
  if (d < 3 || d % 2 == 0) throw DomainError("d must be an odd prime power, got " + std::to_string(d));
  std::uint64_t p = 3;
  while (d % p) p += 2;
  std::uint32_t n = 0;
  std::uint64_t m = d;
  while (m % p == 0) {
    m /= p;
    ++n;
  }
  if (m != 1) throw DomainError("d must be an odd prime power, got " + std::to_string(d));
  return GaloisField::make(static_cast<std::uint32_t>(p), n, std::move(modulus));
}

inline const GaloisField& make_field(std::uint32_t p, std::uint32_t n, std::optional<Poly> modulus = std::nullopt) {
  return GaloisField::make(p, n, std::move(modulus));
}

inline std::uint32_t field_trace(FieldElement x) { return x.field().trace(x.code()); }

inline std::uint32_t discrete_log(FieldElement x) { return x.field().log(x.code()); }

inline int quadratic_character(FieldElement x) {
  if (x.is_zero()) return 0;
  return x.field().log(x.code()) % 2 == 0 ? 1 : -1;
}

/// Dual basis with respect to the trace form: tr(e_r * dual_s) = delta_rs.
inline std::vector<FieldElement> dual_basis(const std::vector<FieldElement>& basis) {
  if (basis.empty()) throw DomainError("empty basis");
  const GaloisField& f = basis.front().field();
  const std::uint32_t n = f.n(), p = f.p();
  if (basis.size() != n) throw DomainError("basis must have n elements");
  // Gram matrix T[r][j] = tr(e_r x^j); the dual's coordinates solve T * c_s = unit_s.
  std::vector<std::vector<std::int64_t>> aug(n, std::vector<std::int64_t>(2 * n, 0));
  std::uint32_t mono = 1;
  std::vector<std::uint32_t> monos;
  for (std::uint32_t j = 0; j < n; ++j) {
    monos.push_back(mono);
    mono = f.poly_mul(mono, n == 1 ? 0 : p);
  }
  for (std::uint32_t r = 0; r < n; ++r) {
    for (std::uint32_t j = 0; j < n; ++j) aug[r][j] = f.trace(f.mul(basis[r].code(), monos[j]));
    aug[r][n + r] = 1;
  }
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw DomainError("input is not a basis (trace Gram matrix singular)");
    std::swap(aug[piv], aug[col]);
    const std::int64_t inv = static_cast<std::int64_t>(detail::pow_mod(aug[col][col], p - 2, p));
    for (auto& v : aug[col]) v = v * inv % p;
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const std::int64_t factor = aug[r][col];
      for (std::uint32_t j = 0; j < 2 * n; ++j) aug[r][j] = detail::mod(aug[r][j] - factor * aug[col][j], p);
    }
  }
  // Column s of the inverse holds the coordinates of dual_s.
  std::vector<FieldElement> dual;
  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<std::uint32_t> c(n);
    for (std::uint32_t j = 0; j < n; ++j) c[j] = static_cast<std::uint32_t>(aug[j][n + s]);
    dual.push_back(f.element(f.encode(c)));
  }
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t s = 0; s < n; ++s)
      if (field_trace(basis[r] * dual[s]) != (r == s ? 1u : 0u)) throw std::logic_error("dual basis check failed");
  return dual;
}

/// GF(d^2) together with the embedding of GF(d) and the elements theta_bar, eta.
class QuadraticExtension {
 public:
  QuadraticExtension(const QuadraticExtension&) = delete;
  QuadraticExtension& operator=(const QuadraticExtension&) = delete;

  static const QuadraticExtension& of(const GaloisField& base, std::optional<Poly> modulus2 = std::nullopt) {
    static std::mutex mu;
    static std::map<std::pair<const GaloisField*, Poly>, std::unique_ptr<QuadraticExtension>> reg;
    const std::uint32_t p = base.p(), n2 = 2 * base.n();
    const std::uint64_t d2 = static_cast<std::uint64_t>(base.size()) * base.size();
    if (d2 > kMaxExtensionSize) throw DomainError("extension GF(d^2) too large for d = " + std::to_string(base.size()));
    Poly f = modulus2 ? *modulus2 : detail::default_modulus(p, n2, kMaxExtensionSize);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = reg[{&base, f}];
    if (!slot) {
      detail::check_modulus(p, n2, f);
      slot.reset(new QuadraticExtension(base, f));
    }
    return *slot;
  }

  const GaloisField& base() const { return *base_; }
  const GaloisField& ext() const { return *ext_; }
  std::uint32_t d() const { return base_->size(); }
  FieldElement theta_bar() const { return ext_->theta(); }
  FieldElement eta() const { return eta_; }

  FieldElement embed(FieldElement x) const { return {ext_, embed_[x.code()]}; }
  /// Inverse of embed on its image; nullopt when y is not fixed by y -> y^d.
  std::optional<FieldElement> restrict(FieldElement y) const {
    if (y.is_zero()) return base_->zero();
    const std::uint32_t k = ext_->log(y.code());
    if (k % (d() + 1) != 0) return std::nullopt;
    return base_->exp(k / (d() + 1));
  }
  /// Log base theta_bar, in [0, d^2-2].
  std::uint32_t log(FieldElement y) const { return ext_->log(y.code()); }
  /// Frobenius y -> y^d.
  FieldElement conj(FieldElement y) const { return y.pow(d()); }

 private:
  QuadraticExtension(const GaloisField& base, const Poly& f) : base_(&base) {
    const std::uint32_t p = base.p();
    const std::uint64_t d = base.size(), d2 = d * d;
    const GaloisField& raw = GaloisField::make(p, 2 * base.n(), f, kMaxExtensionSize);
    // embedding candidates: roots of the base modulus inside GF(d^2)
    auto eval_base_modulus = [&](std::uint32_t y) {
      std::uint32_t v = 0;
      const Poly& m = base.modulus();
      for (std::size_t k = m.size(); k-- > 0;) v = raw.add(raw.mul(v, y), m[k]);
      return v;
    };
    std::uint32_t chosen = 0;
    for (std::uint32_t c = 2; c < d2 && !chosen; ++c) {
      if (std::gcd<std::uint64_t, std::uint64_t>(raw.log(c), d2 - 1) != 1) continue;
      if (eval_base_modulus(raw.pow(c, static_cast<std::int64_t>(d + 1))) == 0) chosen = c;
    }
    if (!chosen) throw std::logic_error("no compatible primitive element in GF(d^2)");
    ext_ = &GaloisField::make_with_generator(p, f, chosen);
    eta_ = ext_->exp(static_cast<std::int64_t>((d - 1) / 2));
    embed_.assign(d, 0);
    for (std::uint32_t x = 1; x < d; ++x)
      embed_[x] = ext_->exp(static_cast<std::int64_t>(base.log(x)) * static_cast<std::int64_t>(d + 1)).code();
  }

  const GaloisField* base_;
  const GaloisField* ext_ = nullptr;
  FieldElement eta_;
  std::vector<std::uint32_t> embed_;
};

/// Square root of x in GF(d^2): theta_bar^{k(d+1)/2} with k = log x.
/// For residues this is the root inside the embedded base field with the
/// smaller log, since k(d+1)/2 < (d^2-1)/2 whenever k <= d-3.
inline FieldElement sqrt_in_ext(const QuadraticExtension& ext, FieldElement x) {
  if (x.is_zero()) throw DomainError("square root of zero requested (degenerate discriminant)");
  const std::int64_t k = discrete_log(x);
  return ext.ext().exp(k * (static_cast<std::int64_t>(ext.d()) + 1) / 2);
}

}  // namespace gcl
