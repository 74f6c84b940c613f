#pragma once

// The metaplectic map F -> U_F on ESL(2, F_d), its expansion in displacement
// operators, closed-form traces, and general restricted Clifford elements
// phase * U_F * D_chi.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gcl/heisenberg.hpp"

namespace gcl {

namespace detail {

inline void require_symplectic(const SympMatrix& f, const char* what) {
  if (f.det() != 1) throw DomainError(std::string(what) + " needs det F = +1");
}

}  // namespace detail

/// U_F; for det F = -1 the antiunitary U_{FJ} U_J, stored as (U_{FJ}, true).
inline Operator symplectic_unitary(const Context& ctx, const SympMatrix& F) {
  const GaloisField& f = ctx.field();
  if (F.det() == -1) {
    Operator op = symplectic_unitary(ctx, F * SympMatrix::J(f));
    op.set_antiunitary(true);
    return op;
  }
  const FieldElement alpha = F.alpha(), beta = F.beta(), gamma = F.gamma(), delta = F.delta();
  Operator op(ctx.ring(), f.size());
  if (beta.is_zero()) {
    const Integer sign(quadratic_character(alpha));
    for (const auto& x : f.elements())
      op.set((alpha * x).code(), x.code(), ctx.tau_pow(field_trace(alpha * gamma * x * x)).scaled(sign));
    return op;
  }
  // every entry is prefactor * tau^k for some k in Z_p
  const CycloScalar pref = ctx.l_tilde(-beta) * ctx.inv_sqrt_d();
  std::vector<CycloScalar> table;
  for (std::uint32_t k = 0; k < ctx.p(); ++k) table.push_back(pref * ctx.tau_pow(k));
  const FieldElement binv = beta.inv(), two = f.from_int(2);
  for (const auto& x : f.elements())
    for (const auto& y : f.elements())
      op.set(x.code(), y.code(), table[field_trace(binv * (alpha * y * y - two * x * y + delta * x * x))]);
  return op;
}

/// Tr(U_F) summed from the diagonal of the defining formula (det F = +1).
inline CycloScalar direct_trace(const Context& ctx, const SympMatrix& F) {
  detail::require_symplectic(F, "direct_trace");
  const GaloisField& f = ctx.field();
  CycloScalar t = ctx.zero();
  if (F.beta().is_zero()) {
    const Integer sign(quadratic_character(F.alpha()));
    for (const auto& x : f.elements())
      if (F.alpha() * x == x) t += ctx.tau_pow(field_trace(F.alpha() * F.gamma() * x * x)).scaled(sign);
    return t;
  }
  const FieldElement binv = F.beta().inv(), two = f.from_int(2);
  for (const auto& x : f.elements()) t += ctx.tau_pow(field_trace(binv * (F.alpha() - two + F.delta()) * x * x));
  return ctx.l_tilde(-F.beta()) * ctx.inv_sqrt_d() * t;
}

inline bool covariance_check(const Context& ctx, const SympMatrix& F, const PhasePoint& u) {
  const Operator uf = symplectic_unitary(ctx, F);
  return uf * displacement(ctx, u) * uf.adjoint() == displacement(ctx, F.apply(u));
}

using WeylExpansion = std::vector<std::pair<PhasePoint, CycloScalar>>;

/// Nonzero coefficients c_u with U_F = sum_u c_u D_u (det F = +1).
inline WeylExpansion weyl_expansion(const Context& ctx, const SympMatrix& F) {
  detail::require_symplectic(F, "weyl_expansion");
  const GaloisField& f = ctx.field();
  const FieldElement alpha = F.alpha(), beta = F.beta(), gamma = F.gamma();
  const FieldElement t = F.trace(), two = f.from_int(2);
  WeylExpansion out;
  if (t != two) {
    const int lead = beta.is_zero() ? quadratic_character(alpha) : quadratic_character(t - two);
    const CycloScalar pref = CycloScalar::rational(ctx.ring(), Integer(lead), Integer(static_cast<std::int64_t>(f.size())));
    const FieldElement k = (two - t).inv();
    for (const auto& u : all_points(f)) {
      const PhasePoint fu = F.apply(u).scaled(k);
      out.emplace_back(u, pref * ctx.tau_pow(symplectic_form(u, fu)));
    }
  } else if (!beta.is_zero()) {
    const CycloScalar pref = ctx.l_tilde(-beta) * ctx.inv_sqrt_d();
    for (const auto& r : f.elements())
      out.emplace_back(PhasePoint{beta * r, (f.one() - alpha) * r}, pref * ctx.tau_pow(field_trace(beta * r * r)));
  } else if (!gamma.is_zero()) {
    const CycloScalar pref = ctx.l_tilde(gamma) * ctx.inv_sqrt_d();
    for (const auto& r : f.elements())
      out.emplace_back(PhasePoint{f.zero(), gamma * r}, pref * ctx.tau_pow(-static_cast<std::int64_t>(field_trace(gamma * r * r))));
  } else {
    out.emplace_back(PhasePoint{f.zero(), f.zero()}, ctx.scalar(1));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// sum_u c_u D_u.
inline Operator weyl_reconstruct(const Context& ctx, const WeylExpansion& terms) {
  const GaloisField& f = ctx.field();
  const std::size_t d = f.size();
  std::vector<CycloScalar> entries(d * d, ctx.zero());
  const FieldElement two = f.from_int(2);
  for (const auto& [u, c] : terms) {
    if (c.is_zero()) continue;
    for (const auto& y : f.elements()) {
      const FieldElement x = y + u.u1;
      auto& slot = entries[x.code() * d + y.code()];
      slot += c * ctx.tau_pow(field_trace(u.u1 * u.u2 + two * y * u.u2));
    }
  }
  Operator op(ctx.ring(), d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) op.set(i, j, entries[i * d + j]);
  return op;
}

/// Tr(U_F) from the closed formulas (det F = +1).
inline CycloScalar trace_closed_form(const Context& ctx, const SympMatrix& F) {
  detail::require_symplectic(F, "trace_closed_form");
  const GaloisField& f = ctx.field();
  const FieldElement t = F.trace(), two = f.from_int(2);
  if (t != two) return ctx.scalar(F.beta().is_zero() ? quadratic_character(F.alpha()) : quadratic_character(t - two));
  if (!F.beta().is_zero()) return ctx.l_tilde(-F.beta()) * ctx.sqrt_d();
  if (!F.gamma().is_zero()) return ctx.l_tilde(F.gamma()) * ctx.sqrt_d();
  return ctx.scalar(f.size());
}

/// phase * U_F * D_chi.
struct CliffordElement {
  SympMatrix F;
  PhasePoint chi;
  CycloScalar phase;
};

class NotCliffordError : public DomainError {
 public:
  NotCliffordError(const PhasePoint& generator, const std::string& why)
      : DomainError("not a restricted Clifford element: D_(" + std::to_string(generator.u1.code()) + "," +
                    std::to_string(generator.u2.code()) + ") " + why),
        generator_(generator) {}
  const PhasePoint& generator() const { return generator_; }

 private:
  PhasePoint generator_;
};

inline Operator clifford_element(const Context& ctx, const CliffordElement& e) {
  return (symplectic_unitary(ctx, e.F) * displacement(ctx, e.chi)).scaled(e.phase);
}

namespace detail {

// Finds (v, h) with op = omega^h D_v, using Hilbert-Schmidt overlaps with
// every D_v. Returns false if op is not of that form.
inline bool match_displacement(const Context& ctx, const Operator& op, PhasePoint& v, std::uint32_t& h) {
  const GaloisField& f = ctx.field();
  const CycloScalar dd = ctx.scalar(f.size());
  bool found = false;
  for (const auto& cand : all_points(f)) {
    const Operator dv = displacement(ctx, cand);
    CycloAccumulator acc(ctx.ring());
    for (const auto& y : f.elements()) {
      const std::size_t x = (y + cand.u1).code();
      acc.add_product(dv.at(x, y.code()).conj(), op.at(x, y.code()));
    }
    const CycloScalar overlap = acc.result();
    if (overlap.is_zero()) continue;
    if (found) return false;
    found = true;
    v = cand;
    // overlap = d * omega^h for a genuine displacement multiple
    bool matched = false;
    for (std::uint32_t k = 0; k < ctx.p() && !matched; ++k)
      if (overlap == dd * ctx.omega_pow(k)) {
        h = k;
        matched = true;
      }
    if (!matched) return false;
  }
  return found && op == displacement(ctx, v).scaled(ctx.omega_pow(h));
}

}  // namespace detail

/// Recovers (F, chi, phase) from an operator in the restricted extended
/// Clifford group. Probes D_(b,0) and D_(0,b) for b in the polynomial basis
/// {1, x, ..., x^{n-1}}; for n = 1 these are the two generators.
inline CliffordElement identify_clifford(const Context& ctx, const Operator& U) {
  const GaloisField& f = ctx.field();
  if (U.dim() != f.size()) throw DomainError("operator dimension does not match the field");
  const std::uint32_t n = f.n();
  std::vector<FieldElement> basis;
  for (std::uint32_t k = 0; k < n; ++k) basis.push_back(f.element(static_cast<std::uint32_t>(detail::checked_pow(f.p(), k, UINT32_MAX))));
  const Operator Uinv = U.adjoint();
  std::vector<PhasePoint> img1, img2;
  std::vector<std::uint32_t> h1, h2;
  for (int col = 0; col < 2; ++col)
    for (const auto& b : basis) {
      const PhasePoint u = col == 0 ? PhasePoint{b, f.zero()} : PhasePoint{f.zero(), b};
      PhasePoint v;
      std::uint32_t h = 0;
      if (!detail::match_displacement(ctx, U * displacement(ctx, u) * Uinv, v, h))
        throw NotCliffordError(u, "is not mapped to a phased displacement operator");
      (col == 0 ? img1 : img2).push_back(v);
      (col == 0 ? h1 : h2).push_back(h);
    }
  // F must be F_d-linear: F(b, 0) = b F(1, 0) and likewise for the second column
  for (std::uint32_t r = 0; r < n; ++r) {
    if (!(img1[r] == img1[0].scaled(basis[r]))) throw NotCliffordError({basis[r], f.zero()}, "breaks F_d-linearity");
    if (!(img2[r] == img2[0].scaled(basis[r]))) throw NotCliffordError({f.zero(), basis[r]}, "breaks F_d-linearity");
  }
  const FieldElement a = img1[0].u1, c = img1[0].u2, b = img2[0].u1, d = img2[0].u2;
  const FieldElement det = a * d - b * c;
  const bool anti = U.antiunitary();
  if (!(det == (anti ? -f.one() : f.one())))
    throw NotCliffordError({f.one(), f.zero()}, "gives a matrix whose determinant does not match the (anti)linearity");
  const SympMatrix F(a, b, c, d);
  // omega^{h(u)} with h(u) = <chi, u> (negated for antiunitaries):
  // <chi, (b,0)> = tr(chi2 b), <chi, (0,b)> = -tr(chi1 b)
  const std::vector<FieldElement> dual = dual_basis(basis);
  FieldElement chi1 = f.zero(), chi2 = f.zero();
  for (std::uint32_t r = 0; r < n; ++r) {
    const std::int64_t s = anti ? -1 : 1;
    chi2 += f.from_int(s * h1[r]) * dual[r];
    chi1 -= f.from_int(s * h2[r]) * dual[r];
  }
  const PhasePoint chi{chi1, chi2};
  const Operator W = symplectic_unitary(ctx, F) * displacement(ctx, chi);
  for (std::size_t i = 0; i < W.dim(); ++i)
    for (std::size_t j = 0; j < W.dim(); ++j) {
      if (W.at(i, j).is_zero()) continue;
      const CycloScalar phase = U.at(i, j) * W.at(i, j).inverse();
      if (!(W.scaled(phase) == U)) throw NotCliffordError({f.one(), f.zero()}, "leaves a residual that is not a scalar");
      return {F, chi, phase};
    }
  throw std::logic_error("U_F D_chi has no nonzero entry");
}

}  // namespace gcl
