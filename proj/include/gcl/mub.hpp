#pragma once

// Wootters-Fields MUBs |mu, x> = U_{H_mu}|x>, the action of the extended
// Clifford group on their labels, cycling and half-cycling, the labelling of
// phase space by GF(d^2), and the cycling labels |s, x>_c.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gcl/heisenberg.hpp"
#include "gcl/spectra.hpp"

namespace gcl {

/// mu in F_d or infinity (nullopt).
using MubLabel = std::optional<FieldElement>;

inline std::string mub_label_str(const MubLabel& mu) { return mu ? std::to_string(mu->code()) : "inf"; }

/// All d+1 labels, finite ones first in code order, then infinity.
inline std::vector<MubLabel> all_mub_labels(const GaloisField& f) {
  std::vector<MubLabel> out;
  for (const auto& x : f.elements()) out.emplace_back(x);
  out.emplace_back(std::nullopt);
  return out;
}

/// H_mu = [[1, mu], [0, 1]], H_inf = [[0, 1], [-1, 0]].
inline SympMatrix mub_matrix(const GaloisField& f, const MubLabel& mu) {
  if (mu) return {f.one(), *mu, f.zero(), f.one()};
  return {f.zero(), f.one(), -f.one(), f.zero()};
}

/// |mu, x> as an exact vector.
inline Vector mub_vector(const Context& ctx, const MubLabel& mu, FieldElement x) {
  const Operator U = symplectic_unitary(ctx, mub_matrix(ctx.field(), mu));
  Vector v;
  for (std::uint32_t i = 0; i < ctx.d(); ++i) v.push_back(U.at(i, x.code()));
  return v;
}

struct MubBasis {
  MubLabel mu;
  std::vector<Vector> vectors;  // indexed by x code
};

inline std::vector<MubBasis> mub_bases(const Context& ctx) {
  std::vector<MubBasis> out;
  for (const auto& mu : all_mub_labels(ctx.field())) {
    const Operator U = symplectic_unitary(ctx, mub_matrix(ctx.field(), mu));
    MubBasis b{mu, {}};
    for (std::uint32_t x = 0; x < ctx.d(); ++x) {
      Vector v;
      for (std::uint32_t i = 0; i < ctx.d(); ++i) v.push_back(U.at(i, x));
      b.vectors.push_back(std::move(v));
    }
    out.push_back(std::move(b));
  }
  return out;
}

struct MubImage {
  CycloScalar phase;
  MubLabel mu;
  FieldElement x;
};

/// D_u|mu, x> = phase |mu, x'>.
inline MubImage displacement_action(const Context& ctx, const PhasePoint& u, const MubLabel& mu, FieldElement x) {
  const FieldElement two = ctx.field().from_int(2);
  if (mu) {
    const FieldElement shift = u.u1 - *mu * u.u2;
    return {ctx.tau_pow(field_trace((two * x + shift) * u.u2)), mu, x + shift};
  }
  return {ctx.tau_pow(field_trace((two * x - u.u2) * u.u1)), mu, x - u.u2};
}

/// Mobius action f_F(mu) = (alpha mu + beta) / (gamma mu + delta) on F_d u {inf}.
inline MubLabel mobius(const SympMatrix& F, const MubLabel& mu) {
  if (mu) {
    const FieldElement den = F.gamma() * *mu + F.delta();
    if (den.is_zero()) return std::nullopt;
    return (F.alpha() * *mu + F.beta()) / den;
  }
  if (F.gamma().is_zero()) return std::nullopt;
  return F.alpha() / F.gamma();
}

/// U_F|mu, x> = phase |f_F(mu), x'>, by the four-case formula.
inline MubImage symplectic_mub_action(const Context& ctx, const SympMatrix& F, const MubLabel& mu, FieldElement x) {
  const FieldElement al = F.alpha(), be = F.beta(), ga = F.gamma(), de = F.delta(), D = F.det_element();
  auto l = [&](FieldElement v) { return ctx.scalar(quadratic_character(v)); };
  if (mu) {
    const FieldElement c = ga * *mu + de;
    if (!c.is_zero()) return {l(D / c) * ctx.tau_pow(field_trace(D * ga * x * x / c)), (al * *mu + be) / c, D * x / c};
    return {l(-ga) * ctx.tau_pow(-static_cast<std::int64_t>(field_trace(al * ga * x * x))), std::nullopt, -ga * x};
  }
  if (!ga.is_zero())
    return {l(D / ga) * ctx.tau_pow(-static_cast<std::int64_t>(field_trace(D * de * x * x / ga))), al / ga, D * x / ga};
  return {l(de) * ctx.tau_pow(-static_cast<std::int64_t>(field_trace(be * de * x * x))), std::nullopt, de * x};
}

// ---- cycling ----

/// Orbit length of mu under f_F.
inline std::uint64_t mub_orbit_length(const SympMatrix& F, const MubLabel& mu) {
  MubLabel cur = mobius(F, mu);
  std::uint64_t k = 1;
  while (!(cur == mu)) {
    cur = mobius(F, cur);
    ++k;
  }
  return k;
}

/// c_F: smallest m > 0 with f_F^m(0) = 0.
inline std::uint64_t cycling_index(const SympMatrix& F) { return mub_orbit_length(F, F.field().zero()); }

/// Orbit lengths of f_F, one entry per orbit, sorted.
inline std::vector<std::uint64_t> mub_orbits(const SympMatrix& F) {
  const GaloisField& f = F.field();
  std::vector<bool> seen(f.size() + 1, false);
  auto idx = [&](const MubLabel& mu) { return mu ? mu->code() : f.size(); };
  std::vector<std::uint64_t> out;
  for (const auto& mu : all_mub_labels(f)) {
    if (seen[idx(mu)]) continue;
    std::uint64_t len = 0;
    MubLabel cur = mu;
    do {
      seen[idx(cur)] = true;
      cur = mobius(F, cur);
      ++len;
    } while (!(cur == mu));
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_cycling(const SympMatrix& F) { return mub_orbits(F) == std::vector<std::uint64_t>{F.field().size() + 1ull}; }

inline bool is_half_cycling(const SympMatrix& F) {
  const std::uint64_t h = (F.field().size() + 1ull) / 2;
  return mub_orbits(F) == std::vector<std::uint64_t>{h, h};
}

namespace detail {

/// Does Tr F equal some eta^{k r} + sign eta^{-k r} with r in `rs`?
template <class Pred>
bool trace_matches(const QuadraticExtension& ext, const SympMatrix& F, int k, int sign, std::int64_t range, Pred admissible) {
  const FieldElement t = ext.embed(F.trace()), eta = ext.eta();
  for (std::int64_t r = 0; r < range; ++r) {
    if (!admissible(r)) continue;
    const FieldElement v = sign > 0 ? eta.pow(k * r) + eta.pow(-k * r) : eta.pow(k * r) - eta.pow(-k * r);
    if (v == t) return true;
  }
  return false;
}

}  // namespace detail

/// Cycling by the trace criterion: det -1, d = 3 mod 4, Tr F = eta^r - eta^-r with gcd(r, d+1) = 1.
inline bool is_cycling_by_trace(const QuadraticExtension& ext, const SympMatrix& F) {
  const std::int64_t d = ext.d();
  if (F.det() == 1 || d % 4 == 1) return false;
  return detail::trace_matches(ext, F, 1, -1, 2 * (d + 1), [&](std::int64_t r) { return std::gcd(r, d + 1) == 1; });
}

/// Half-cycling by the trace criteria: det +1 with Tr F = eta^{2r} + eta^{-2r}, gcd(r, (d+1)/2) = 1;
/// det -1 and d = 1 mod 4 with Tr F = eta^r - eta^-r, r odd and gcd(r, d+1) = 1.
inline bool is_half_cycling_by_trace(const QuadraticExtension& ext, const SympMatrix& F) {
  const std::int64_t d = ext.d();
  if (F.det() == 1)
    return detail::trace_matches(ext, F, 2, 1, d + 1, [&](std::int64_t r) { return std::gcd(r, (d + 1) / 2) == 1; });
  if (d % 4 == 3) return false;
  return detail::trace_matches(ext, F, 1, -1, 2 * (d + 1), [&](std::int64_t r) { return r % 2 == 1 && std::gcd(r, d + 1) == 1; });
}

/// A = [[0, 1], [1, eta - eta^-1]], anti-symplectic of order 2(d+1).
inline SympMatrix canonical_A(const QuadraticExtension& ext) { return max_order_antisymplectic(ext); }

// ---- extension-field labelling ----

/// x(u) = eta^{-1} u1 + u2.
inline FieldElement x_of_u(const QuadraticExtension& ext, const PhasePoint& u) {
  return ext.eta().inv() * ext.embed(u.u1) + ext.embed(u.u2);
}

/// u(x) = ((x - x^d), (eta x + eta^-1 x^d)) / (eta + eta^-1).
inline PhasePoint u_of_x(const QuadraticExtension& ext, FieldElement x) {
  const FieldElement eta = ext.eta(), ei = eta.inv(), xd = ext.conj(x), den = (eta + ei).inv();
  const auto u1 = ext.restrict((x - xd) * den), u2 = ext.restrict((eta * x + ei * xd) * den);
  if (!u1 || !u2) throw std::logic_error("u(x) left the base field");
  return {*u1, *u2};
}

struct AbPair {
  FieldElement a, b;
  friend bool operator==(const AbPair& x, const AbPair& y) { return x.a == y.a && x.b == y.b; }
};

/// (a, b) with x(F u) = a x(u) + b x(u)^d; defined for every 2x2 matrix.
inline AbPair ab_of_F(const QuadraticExtension& ext, const Mat2<FieldElement>& F) {
  const FieldElement eta = ext.eta(), ei = eta.inv(), den = (eta + ei).inv();
  const FieldElement al = ext.embed(F.a), be = ext.embed(F.b), ga = ext.embed(F.c), de = ext.embed(F.d);
  return {(ei * al + be + ga + eta * de) * den, (-(ei * al) + ei * ei * be - ga + ei * de) * den};
}

inline AbPair ab_of_F(const QuadraticExtension& ext, const SympMatrix& F) { return ab_of_F(ext, F.mat()); }

inline Mat2<FieldElement> F_of_ab(const QuadraticExtension& ext, const AbPair& ab) {
  const FieldElement eta = ext.eta(), ei = eta.inv(), den = (eta + ei).inv();
  const FieldElement a = ab.a, b = ab.b, ad = ext.conj(a), bd = ext.conj(b);
  const FieldElement p = a - bd, q = ad - b, r = a + ei * ei * bd, s = ad + eta * eta * b;
  const auto al = ext.restrict((ei * p + eta * q) * den), be = ext.restrict((p - q) * den), ga = ext.restrict((r - s) * den),
             de = ext.restrict((eta * r + ei * s) * den);
  if (!al || !be || !ga || !de) throw DomainError("(a, b) does not correspond to a matrix over F_d");
  return {*al, *be, *ga, *de};
}

/// (a, b) o (a', b') = (a a' + b b'^d, a b' + b a'^d).
inline AbPair ab_product(const QuadraticExtension& ext, const AbPair& x, const AbPair& y) {
  return {x.a * y.a + x.b * ext.conj(y.b), x.a * y.b + x.b * ext.conj(y.a)};
}

/// a^{d+1} - b^{d+1}.
inline FieldElement ab_det(const QuadraticExtension& ext, const AbPair& ab) {
  const std::int64_t e = static_cast<std::int64_t>(ext.d()) + 1;
  const auto v = ext.restrict(ab.a.pow(e) - ab.b.pow(e));
  if (!v) throw std::logic_error("a^{d+1} - b^{d+1} left the base field");
  return *v;
}

struct ExtLabel {
  std::int64_t r, s, t;  // r = s + t (d+1)
};

inline ExtLabel ext_label(std::uint32_t d, std::int64_t r) {
  const std::int64_t q = static_cast<std::int64_t>(d) * d - 1;
  if (r < 0 || r >= q) throw DomainError("label r must lie in [0, d^2 - 2]");
  return {r, r % (d + 1), r / (d + 1)};
}

/// u_r = u(theta_bar^{-r}).
inline PhasePoint u_r(const QuadraticExtension& ext, std::int64_t r) { return u_of_x(ext, ext.ext().exp(-r)); }

/// r with u_r = u, u != 0.
inline std::int64_t r_of_u(const QuadraticExtension& ext, const PhasePoint& u) {
  if (u.is_zero()) throw DomainError("the zero vector has no label");
  const std::int64_t q = ext.ext().size() - 1;
  return detail::mod(-static_cast<std::int64_t>(ext.log(x_of_u(ext, u))), q);
}

/// F u_r = u_{r'}, r' = r - log(a + b eta^{-2r}).
inline std::int64_t perm_action(const QuadraticExtension& ext, const SympMatrix& F, std::int64_t r) {
  const AbPair ab = ab_of_F(ext, F);
  const FieldElement v = ab.a + ab.b * ext.eta().pow(-2 * r);
  if (v.is_zero()) throw std::logic_error("a + b eta^{-2r} vanished for an invertible matrix");
  const std::int64_t q = ext.ext().size() - 1;
  return detail::mod(r - ext.log(v), q);
}

// ---- cycling labels ----

/// u_{s,t} = u_{s + t(d+1)}.
inline PhasePoint u_st(const QuadraticExtension& ext, std::int64_t s, std::int64_t t) {
  const std::int64_t d = ext.d();
  return u_r(ext, s + detail::mod(t, d - 1) * (d + 1));
}

/// P_{s,x} = (1/d)(1 + sum_t omega^{-tr(theta^-t x)} D_{u_{s,t}}).
inline Operator cycling_projector(const Context& ctx, const QuadraticExtension& ext, std::int64_t s, FieldElement x) {
  const GaloisField& f = ctx.field();
  const std::int64_t d = f.size();
  Operator acc = Operator::identity(ctx.ring(), d);
  for (std::int64_t t = 0; t <= d - 2; ++t)
    acc = acc + displacement(ctx, u_st(ext, s, t)).scaled(ctx.omega_pow(-static_cast<std::int64_t>(field_trace(f.exp(-t) * x))));
  return acc.scaled(CycloScalar::rational(ctx.ring(), Integer(1), Integer(d)));
}

/// mu_s = (eta^s - eta^-s) / (eta^{s+1} + eta^{-s-1}); infinity at s = (d-1)/2.
inline MubLabel mu_s(const QuadraticExtension& ext, std::int64_t s) {
  const std::int64_t d = ext.d();
  if (s == (d - 1) / 2) return std::nullopt;
  const FieldElement eta = ext.eta();
  const auto v = ext.restrict((eta.pow(s) - eta.pow(-s)) / (eta.pow(s + 1) + eta.pow(-s - 1)));
  if (!v) throw std::logic_error("mu_s left the base field");
  return *v;
}

/// lambda_s = (eta + eta^-1) / (eta theta_bar^-s + eta^-1 theta_bar^{-ds}); 1 at s = (d-1)/2.
inline FieldElement lambda_s(const QuadraticExtension& ext, std::int64_t s) {
  const std::int64_t d = ext.d();
  if (s == (d - 1) / 2) return ext.base().one();
  const FieldElement eta = ext.eta(), ei = eta.inv();
  const FieldElement x = ext.ext().exp(-s);
  const auto v = ext.restrict((eta + ei) / (eta * x + ei * ext.conj(x)));
  if (!v) throw std::logic_error("lambda_s left the base field");
  return *v;
}

/// s_mu = (1/2) log_eta((1 + eta^-1 mu) / (1 - eta mu)); (d-1)/2 at infinity.
/// The halving acts on the even integer log.
inline std::int64_t s_of_mu(const QuadraticExtension& ext, const MubLabel& mu) {
  const std::int64_t d = ext.d();
  if (!mu) return (d - 1) / 2;
  const FieldElement eta = ext.eta(), m = ext.embed(*mu);
  const FieldElement z = (ext.ext().one() + eta.inv() * m) / (ext.ext().one() - eta * m);
  const std::int64_t k = ext.log(z), half = (d - 1) / 2;
  if (k % half != 0) throw std::logic_error("s_mu argument is not a power of eta");
  const std::int64_t e = (k / half) % (2 * (d + 1));
  if (e % 2 != 0) throw std::logic_error("log_eta in s_mu is odd");
  return e / 2;
}

struct CyclingAction {
  std::int64_t f;        // f_F(s)
  FieldElement g;        // g_F(s), from the quotient on division by d+1
  FieldElement x_factor; // U_F|s,x>_c = |f, x_factor x>_c up to phase: g, or -g when det F = -1
};

/// s - log(a + b eta^{-2s}) = f + (d+1) log_theta g.
inline CyclingAction cycling_action(const QuadraticExtension& ext, const SympMatrix& F, std::int64_t s) {
  const std::int64_t d = ext.d(), q = d * d - 1;
  const AbPair ab = ab_of_F(ext, F);
  const FieldElement v = ab.a + ab.b * ext.eta().pow(-2 * s);
  const std::int64_t shifted = detail::mod(s - ext.log(v), q);
  const FieldElement g = ext.base().exp(shifted / (d + 1));
  return {shifted % (d + 1), g, F.det() == 1 ? g : -g};
}

}  // namespace gcl
