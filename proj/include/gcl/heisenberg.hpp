#pragma once

// Displacement operators D_u on C^d and the symplectic form.

#include <optional>
#include <vector>

#include "gcl/operator.hpp"
#include "gcl/symplectic.hpp"

namespace gcl {

/// <u, v> = tr(u2 v1 - u1 v2), in Z_p.
inline std::uint32_t symplectic_form(const PhasePoint& u, const PhasePoint& v) {
  return field_trace(u.u2 * v.u1 - u.u1 * v.u2);
}

/// <x|D_u|y> = tau^{tr(u1 u2 + 2 y u2)} [x = y + u1].
inline Operator displacement(const Context& ctx, const PhasePoint& u) {
  const GaloisField& f = ctx.field();
  Operator op(ctx.ring(), f.size());
  const FieldElement two = f.from_int(2);
  for (const auto& y : f.elements()) {
    const FieldElement x = y + u.u1;
    op.set(x.code(), y.code(), ctx.tau_pow(field_trace(u.u1 * u.u2 + two * y * u.u2)));
  }
  return op;
}

struct TensorCheckReport {
  bool all_equal = true;
  std::size_t checked = 0;
  std::optional<PhasePoint> first_failure;
};

/// Compares D_u with S^{-1} (D^p ⊗ ... ⊗ D^p) S for every u, where
/// S|x> = |x_1> ⊗ ... ⊗ |x_n>, x_r = tr(x dual_r), and the r-th factor is
/// D^p at (tr(u1 dual_r), tr(u2 e_r)).
inline TensorCheckReport tensor_factorization_check(const Context& ctx, const std::vector<FieldElement>& basis) {
  const GaloisField& f = ctx.field();
  const std::uint32_t n = f.n(), p = f.p(), d = f.size();
  if (n < 2) throw DomainError("tensor factorization needs n >= 2");
  const std::vector<FieldElement> dual = dual_basis(basis);
  const GaloisField& fp = make_field(p, 1);
  const Context ctx_p(fp, ctx.ring());

  // tensor index of |x>: first factor most significant
  auto tensor_index = [&](FieldElement x) {
    std::uint32_t idx = 0;
    for (std::uint32_t r = 0; r < n; ++r) idx = idx * p + field_trace(x * dual[r]);
    return idx;
  };
  Operator s(ctx.ring(), d);
  const CycloScalar one = ctx.scalar(1);
  for (const auto& x : f.elements()) s.set(tensor_index(x), x.code(), one);
  const Operator s_inv = s.adjoint();

  TensorCheckReport report;
  for (const auto& u : all_points(f)) {
    std::vector<Operator> factors;
    for (std::uint32_t r = 0; r < n; ++r)
      factors.push_back(displacement(ctx_p, {fp.from_int(field_trace(u.u1 * dual[r])), fp.from_int(field_trace(u.u2 * basis[r]))}));
    // Kronecker product, factor 0 most significant
    Operator kron(ctx.ring(), d);
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j) {
        CycloScalar v = one;
        std::uint32_t ii = i, jj = j;
        for (std::uint32_t r = n; r-- > 0;) {
          v *= factors[r].at(ii % p, jj % p);
          ii /= p;
          jj /= p;
          if (v.is_zero()) break;
        }
        kron.set(i, j, v);
      }
    ++report.checked;
    if (!(s_inv * kron * s == displacement(ctx, u))) {
      report.all_equal = false;
      if (!report.first_failure) report.first_failure = u;
    }
  }
  return report;
}

}  // namespace gcl
