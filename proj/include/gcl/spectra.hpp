#pragma once

// Eigenvalues, orders, roots and eigenprojectors of elements of ESL(2, F_d).
//
// Types: 1 if t^2 - 4 det is a nonzero square, 2 if a non-square, 3 if zero.
// Type 1 eigenvalues live in F_d, type 2 in GF(d^2), type 3 matrices are
// +-I or a single Jordan block.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gcl/clifford.hpp"

namespace gcl {

enum class SpectralType { Type1 = 1, Type2 = 2, Type3 = 3 };

inline FieldElement discriminant(const SympMatrix& F) {
  const FieldElement t = F.trace();
  return t * t - F.field().from_int(4) * F.det_element();
}

inline SpectralType classify(const SympMatrix& F) {
  switch (quadratic_character(discriminant(F))) {
    case 1:
      return SpectralType::Type1;
    case -1:
      return SpectralType::Type2;
    default:
      return SpectralType::Type3;
  }
}

using ExtMat = Mat2<FieldElement>;

struct SpectralData {
  SpectralType type;
  FieldElement lambda_plus, lambda_minus;  // in GF(d^2)
  std::int64_t r;                          // log base theta (type 1) or eta (type 2)
  ExtMat diagonalizer;                     // S with S Fbar S^{-1} diagonal, Fbar the companion form
  ExtMat companion;                        // Fbar = [[0, -det], [1, t]] over GF(d^2)
  ExtMat eigenbasis;                       // T with T F T^{-1} = diag(lambda_plus, lambda_minus)
  std::uint64_t order;
};

namespace detail {

inline ExtMat embed_mat(const QuadraticExtension& ext, const SympMatrix& F) {
  return {ext.embed(F.alpha()), ext.embed(F.beta()), ext.embed(F.gamma()), ext.embed(F.delta())};
}

inline ExtMat inverse2(const ExtMat& m) {
  const FieldElement inv = m.det().inv();
  return {m.d * inv, -m.b * inv, -m.c * inv, m.a * inv};
}

inline bool is_diag(const ExtMat& m) { return m.b.is_zero() && m.c.is_zero(); }

inline std::uint64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), static_cast<std::uint64_t>(b < 0 ? -b : b));
}

}  // namespace detail

/// Eigenvalues, log index, diagonalizer and order of a type 1 or 2 matrix.
/// lambda_plus = (t + sqrt(t^2 - 4 det)) / 2.
inline SpectralData eigen_data(const QuadraticExtension& ext, const SympMatrix& F) {
  const SpectralType type = classify(F);
  if (type == SpectralType::Type3) throw DomainError("eigen_data needs a type 1 or type 2 matrix");
  const GaloisField& f = F.field();
  const GaloisField& e = ext.ext();
  const std::int64_t d = f.size();
  const FieldElement t = ext.embed(F.trace()), Delta = ext.embed(F.det_element());
  const FieldElement half = e.from_int(2).inv();
  const FieldElement root = sqrt_in_ext(ext, discriminant(F));
  SpectralData sd{type, (t + root) * half, (t - root) * half, 0, {}, {}, {}, 0};
  const FieldElement one = e.one();
  sd.companion = {e.zero(), -Delta, one, t};
  if (type == SpectralType::Type1) {
    const FieldElement th = ext.embed(f.theta());
    sd.r = discrete_log(*ext.restrict(sd.lambda_plus));
    const FieldElement tr = th.pow(sd.r), tmr = th.pow(-sd.r);
    const FieldElement den = (Delta * tmr - tr).inv();
    sd.diagonalizer = {tmr * den, den, Delta * tr, one};
    const std::int64_t g = static_cast<std::int64_t>(detail::gcd64(sd.r, F.det() == 1 ? d - 1 : (d - 1) / 2));
    sd.order = static_cast<std::uint64_t>((d - 1) / g);
  } else {
    const std::int64_t half_dm1 = (d - 1) / 2;
    const std::int64_t k = ext.log(sd.lambda_plus);
    if (k % half_dm1 != 0) throw std::logic_error("type 2 eigenvalue is not a power of eta");
    sd.r = (k / half_dm1) % (2 * (d + 1));
    const FieldElement eta = ext.eta();
    const FieldElement er = eta.pow(sd.r), sign = sd.r % 2 == 0 ? one : -one;
    const FieldElement den = (sign - er * er).inv();
    sd.diagonalizer = {den, er * den, sign * er, one};
    sd.order = static_cast<std::uint64_t>(2 * (d + 1) / static_cast<std::int64_t>(detail::gcd64(sd.r, 2 * (d + 1))));
  }
  const ExtMat dg = sd.diagonalizer * sd.companion * detail::inverse2(sd.diagonalizer);
  if (!detail::is_diag(dg) || dg.a != sd.lambda_plus || dg.d != sd.lambda_minus)
    throw std::logic_error("diagonalizer check failed for " + F.str());
  // F = C Fbar C^{-1} with C = [v | F v] for a cyclic vector v
  const ExtMat fe = detail::embed_mat(ext, F);
  ExtMat C{};
  bool cyclic = false;
  for (const auto& [v1, v2] : {std::pair{one, e.zero()}, std::pair{e.zero(), one}, std::pair{one, one}}) {
    C = {v1, fe.a * v1 + fe.b * v2, v2, fe.c * v1 + fe.d * v2};
    if (!C.det().is_zero()) {
      cyclic = true;
      break;
    }
  }
  if (!cyclic) throw std::logic_error("no cyclic vector for a non-scalar matrix");
  sd.eigenbasis = sd.diagonalizer * detail::inverse2(C);
  const ExtMat df = sd.eigenbasis * fe * detail::inverse2(sd.eigenbasis);
  if (!detail::is_diag(df) || df.a != sd.lambda_plus || df.d != sd.lambda_minus)
    throw std::logic_error("eigenbasis check failed for " + F.str());
  return sd;
}

/// Fixed square root of -1 in F_d (the one with smaller log); d = 1 mod 4.
inline FieldElement fixed_sqrt_minus_one(const GaloisField& f) {
  if (f.size() % 4 != 1) throw DomainError("-1 is not a square when d = 3 mod 4");
  return f.exp((f.size() - 1) / 4);
}

/// Non-residue with the smallest log, namely theta.
inline FieldElement fixed_nonresidue(const GaloisField& f) { return f.theta(); }

/// One row of the type 3 order tables.
struct Type3Row {
  int det;
  std::string trace_label;  // "2", "-2", "2i", "-2i"
  std::string offdiag;      // "zero", "Q", "N", or "nonzero" when d = 3 mod 4
  SympMatrix representative;
  std::string order_label;  // "1", "2", "4", "p", "2p", "4p"
  std::uint64_t order;
};

inline Type3Row type3_row(const SympMatrix& F) {
  if (classify(F) != SpectralType::Type3) throw DomainError("type3_row needs a type 3 matrix");
  const GaloisField& f = F.field();
  const std::uint64_t p = f.p();
  const bool one_mod_4 = f.size() % 4 == 1;
  const FieldElement x = F.trace() / f.from_int(2);  // the repeated eigenvalue
  std::string tl;
  std::uint64_t base;
  if (x.is_one()) {
    tl = "2";
    base = 1;
  } else if (x == -f.one()) {
    tl = "-2";
    base = 2;
  } else {
    const FieldElement i = fixed_sqrt_minus_one(f);
    tl = x == i ? "2i" : "-2i";
    base = 4;
  }
  const bool scalar = F.beta().is_zero() && F.gamma().is_zero();
  std::string cls;
  FieldElement off = f.one();
  if (scalar) {
    cls = "zero";
  } else if (!one_mod_4) {
    cls = "nonzero";
  } else {
    const FieldElement w = F.beta().is_zero() ? F.gamma() : F.beta();
    cls = quadratic_character(w) == 1 ? "Q" : "N";
    if (cls == "N") off = fixed_nonresidue(f);
  }
  const SympMatrix rep(x, scalar ? f.zero() : off, f.zero(), x);
  std::string ol = scalar ? std::to_string(base) : (base == 1 ? "p" : std::to_string(base) + "p");
  return {F.det(), tl, cls, rep, ol, scalar ? base : base * p};
}

/// Order of F from the closed formulas (types 1, 2) or the type 3 tables.
inline std::uint64_t order(const QuadraticExtension& ext, const SympMatrix& F) {
  if (classify(F) == SpectralType::Type3) return type3_row(F).order;
  return eigen_data(ext, F).order;
}

/// Order by repeated multiplication.
inline std::uint64_t order_oracle(const SympMatrix& F) {
  const std::uint64_t bound = 2 * (static_cast<std::uint64_t>(F.field().size()) + 1) * 2 * F.field().p();
  SympMatrix g = F;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (g.is_identity()) return k;
    g = g * F;
  }
  throw std::logic_error("order_oracle exceeded its bound for " + F.str());
}

/// All G in ESL with G^s = F, by search over the whole group.
inline std::vector<SympMatrix> matrix_roots_exhaustive(const SympMatrix& F, std::uint64_t s) {
  std::vector<SympMatrix> out;
  for (const auto& G : all_esl(F.field()))
    if (G.pow(static_cast<std::int64_t>(s)) == F) out.push_back(G);
  std::sort(out.begin(), out.end());
  return out;
}

/// All G in ESL with G^s = F. For types 1 and 2 a root commutes with F, so
/// it is diagonal in F's eigenbasis with entries among the s-th roots of the
/// eigenvalues; candidates are kept if they land in F_d with det +-1.
/// Type 3 falls back to search.
inline std::vector<SympMatrix> matrix_roots(const QuadraticExtension& ext, const SympMatrix& F, std::uint64_t s) {
  if (s == 0) throw DomainError("root index must be positive");
  if (s == 1) return {F};
  if (classify(F) == SpectralType::Type3) return matrix_roots_exhaustive(F, s);
  const SpectralData sd = eigen_data(ext, F);
  const GaloisField& e = ext.ext();
  const std::int64_t q = static_cast<std::int64_t>(e.size()) - 1;
  auto roots_of = [&](FieldElement lam) {
    // s k = log lam (mod q)
    std::vector<FieldElement> rs;
    const std::int64_t L = ext.log(lam);
    const std::int64_t g = static_cast<std::int64_t>(detail::gcd64(static_cast<std::int64_t>(s), q));
    if (L % g != 0) return rs;
    for (std::int64_t k = 0; k < q; ++k)
      if (detail::mod(static_cast<std::int64_t>(s % static_cast<std::uint64_t>(q)) * k - L, q) == 0) rs.push_back(e.exp(k));
    return rs;
  };
  const ExtMat T = sd.eigenbasis, Tinv = detail::inverse2(T);
  std::set<SympMatrix> found;
  for (const auto& m1 : roots_of(sd.lambda_plus))
    for (const auto& m2 : roots_of(sd.lambda_minus)) {
      const ExtMat G = Tinv * ExtMat{m1, e.zero(), e.zero(), m2} * T;
      const auto a = ext.restrict(G.a), b = ext.restrict(G.b), c = ext.restrict(G.c), dd = ext.restrict(G.d);
      if (!a || !b || !c || !dd) continue;
      const FieldElement det = *a * *dd - *b * *c;
      if (!det.is_one() && det != -det.field().one()) continue;
      const SympMatrix Gm(*a, *b, *c, *dd);
      if (Gm.pow(static_cast<std::int64_t>(s)) != F) throw std::logic_error("root check failed");
      found.insert(Gm);
    }
  return {found.begin(), found.end()};
}

namespace detail {

inline void require_roots(const Context& ctx, std::uint64_t m) {
  if (ctx.ring().conductor() % m != 0)
    throw DomainError("ring conductor " + std::to_string(ctx.ring().conductor()) + " lacks " + std::to_string(m) + "-th roots of unity");
}

inline std::vector<Operator> unitary_powers(const Context& ctx, const SympMatrix& F, std::uint64_t m) {
  std::vector<Operator> out;
  SympMatrix g = SympMatrix::identity(ctx.field());
  for (std::uint64_t s = 0; s < m; ++s) {
    out.push_back(symplectic_unitary(ctx, g));
    g = g * F;
  }
  return out;
}

inline Operator projector_from_powers(const Context& ctx, const std::vector<Operator>& powers, std::int64_t r) {
  const std::uint64_t m = powers.size();
  Operator acc(ctx.ring(), ctx.d());
  for (std::uint64_t s = 0; s < m; ++s)
    acc = acc + powers[s].scaled(root_of_unity(ctx.ring(), static_cast<std::uint32_t>(m), -r * static_cast<std::int64_t>(s)));
  return acc.scaled(CycloScalar::rational(ctx.ring(), Integer(1), Integer(static_cast<std::int64_t>(m))));
}

}  // namespace detail

/// P_r = (1/m) sum_s zeta_m^{-rs} U_{F^s}, m = ord(F), det F = +1.
inline Operator unitary_eigenprojector(const Context& ctx, const SympMatrix& F, std::int64_t r, std::uint64_t m) {
  detail::require_symplectic(F, "unitary_eigenprojector");
  detail::require_roots(ctx, m);
  return detail::projector_from_powers(ctx, detail::unitary_powers(ctx, F, m), r);
}

/// P_0 .. P_{m-1}, sharing the powers of U_F.
inline std::vector<Operator> unitary_eigenprojectors(const Context& ctx, const SympMatrix& F, std::uint64_t m) {
  detail::require_symplectic(F, "unitary_eigenprojectors");
  detail::require_roots(ctx, m);
  const auto powers = detail::unitary_powers(ctx, F, m);
  std::vector<Operator> out;
  for (std::uint64_t r = 0; r < m; ++r) out.push_back(detail::projector_from_powers(ctx, powers, static_cast<std::int64_t>(r)));
  return out;
}

inline Operator unitary_eigenprojector(const Context& ctx, const QuadraticExtension& ext, const SympMatrix& F, std::int64_t r) {
  return unitary_eigenprojector(ctx, F, r, order(ext, F));
}

/// Tr(P_r) for r = 0 .. m-1, from direct traces of U_{F^s}.
inline std::vector<std::int64_t> eigenspace_dims(const Context& ctx, const SympMatrix& F, std::uint64_t m) {
  detail::require_symplectic(F, "eigenspace_dims");
  detail::require_roots(ctx, m);
  std::vector<CycloScalar> traces;
  SympMatrix g = SympMatrix::identity(ctx.field());
  for (std::uint64_t s = 0; s < m; ++s) {
    traces.push_back(direct_trace(ctx, g));
    g = g * F;
  }
  std::vector<std::int64_t> dims;
  for (std::uint64_t r = 0; r < m; ++r) {
    CycloScalar t = ctx.zero();
    for (std::uint64_t s = 0; s < m; ++s)
      t += traces[s] * root_of_unity(ctx.ring(), static_cast<std::uint32_t>(m), -static_cast<std::int64_t>(r * s));
    t = t.divided(Integer(static_cast<std::int64_t>(m)));
    if (!t.is_rational() || !(t.denominator() == Integer(1))) throw std::logic_error("eigenspace trace is not an integer");
    dims.push_back(t.numerator(0).small());
  }
  return dims;
}

inline std::vector<std::int64_t> eigenspace_dims(const Context& ctx, const QuadraticExtension& ext, const SympMatrix& F) {
  return eigenspace_dims(ctx, F, order(ext, F));
}

/// [[0, 1], [-1, eta^2 + eta^-2]] (order d+1) and [[0, 1], [1, eta - eta^-1]] (order 2(d+1)).
inline SympMatrix max_order_symplectic_type2(const QuadraticExtension& ext) {
  const FieldElement eta = ext.eta();
  const GaloisField& f = ext.base();
  return {f.zero(), f.one(), -f.one(), *ext.restrict(eta.pow(2) + eta.pow(-2))};
}

inline SympMatrix max_order_antisymplectic(const QuadraticExtension& ext) {
  const FieldElement eta = ext.eta();
  const GaloisField& f = ext.base();
  return {f.zero(), f.one(), f.one(), *ext.restrict(eta - eta.inv())};
}

}  // namespace gcl
