#pragma once

// Natural eigenbases for the trace -1 symplectic unitary in prime dimension.
// d = 6m + 1: F = diag(theta^{2m}, theta^{-2m}) = G^{2m}, G = diag(theta, theta^{-1}).
// d = 6m - 1: F = [[0, -1], [1, -1]] = G^{2m}, G built from powers of eta.

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "gcl/spectra.hpp"

namespace gcl {

inline SympMatrix zauner_matrix(const GaloisField& f) { return SympMatrix::from_codes(f, 0, -1, 1, -1); }

struct SicEigenvector {
  std::int64_t r;        // U_G eigenvalue sigma^r
  std::int64_t f_label;  // U_F eigenvalue lambda^{f_label}
  std::vector<std::complex<double>> v;
  double residual;  // |U_G v - sigma^r v|
};

struct SicBasisReport {
  std::uint32_t d = 0, m = 0;
  std::string branch;  // "1mod6" or "5mod6"
  SympMatrix F, G;
  std::uint64_t order_G = 0;
  std::vector<std::int64_t> eigen_dims;     // Tr P_r for U_G, r = 0 .. 6m-1
  std::array<std::int64_t, 3> subspace_dims{};  // eigenspaces of U_F for lambda^0, lambda^1, lambda^2
  std::vector<SicEigenvector> eigenvectors;
  bool exact_checks = true;  // every exact identity below held
  std::vector<std::string> failures;
};

namespace detail {

inline const GaloisField& sic_field(std::uint32_t d, std::uint32_t residue) {
  if (!is_prime(d) || d < 5) throw DomainError("SIC bases need a prime d >= 5");
  if (d % 6 != residue) throw DomainError("d = " + std::to_string(d) + " is not " + std::to_string(residue) + " mod 6");
  return make_field(d, 1);
}

inline const CycloRing& sic_ring(std::uint32_t d, std::uint32_t m) { return make_ring_for(d, {6 * m}); }

inline std::vector<std::complex<double>> apply_float(const std::vector<std::complex<double>>& M, const std::vector<std::complex<double>>& v) {
  const std::size_t n = v.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += M[i * n + j] * v[j];
  return out;
}

inline double eigen_residual(const std::vector<std::complex<double>>& M, const std::vector<std::complex<double>>& v, std::complex<double> lam) {
  const auto w = apply_float(M, v);
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += std::norm(w[i] - lam * v[i]);
  return std::sqrt(s);
}

inline std::complex<double> unit_root(std::int64_t k, std::int64_t n) {
  const double a = 2 * M_PI * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(a), std::sin(a)};
}

inline void check(SicBasisReport& rep, bool ok, const std::string& what) {
  if (!ok) {
    rep.exact_checks = false;
    rep.failures.push_back(what);
  }
}

}  // namespace detail

/// d = 1 mod 6. psi_r = sum_{s != 0} sigma^{-r log s}|s>, psi'_0 = |0>.
/// U_G = -sum |theta x><x|, so U_G psi_r = -sigma^r psi_r and U_G psi'_0 = -psi'_0;
/// the sign cancels in U_F = U_G^{2m}.
inline SicBasisReport type1_sic_basis(std::uint32_t d) {
  const GaloisField& f = detail::sic_field(d, 1);
  const std::uint32_t m = (d - 1) / 6, n6 = 6 * m;
  const Context ctx(f, detail::sic_ring(d, m));
  const FieldElement th = f.theta();
  SicBasisReport rep{d, m, "1mod6", SympMatrix::identity(f), SympMatrix(th, f.zero(), f.zero(), th.inv())};
  rep.F = rep.G.pow(2 * m);
  rep.order_G = order_oracle(rep.G);
  detail::check(rep, rep.F.trace() == -f.one(), "Tr F = -1");
  detail::check(rep, rep.order_G == n6, "ord G = 6m");

  const Operator UG = symplectic_unitary(ctx, rep.G), UF = symplectic_unitary(ctx, rep.F);
  Operator perm(ctx.ring(), d);
  for (const auto& x : f.elements()) perm.set((th * x).code(), x.code(), ctx.scalar(-1));
  detail::check(rep, UG == perm, "U_G = -sum |theta x><x|");

  const auto sigma = [&](std::int64_t k) { return root_of_unity(ctx.ring(), n6, k); };
  const CycloScalar one = ctx.scalar(1);
  std::vector<Vector> psi;
  for (std::uint32_t r = 0; r < n6; ++r) {
    Vector v(d, ctx.zero());
    for (const auto& s : f.elements())
      if (!s.is_zero()) v[s.code()] = sigma(-static_cast<std::int64_t>(r) * discrete_log(s));
    psi.push_back(std::move(v));
  }
  Vector psi0p(d, ctx.zero());
  psi0p[0] = one;

  auto scaled = [](const Vector& v, const CycloScalar& c) {
    Vector out = v;
    for (auto& x : out) x = c * x;
    return out;
  };
  for (std::uint32_t r = 0; r < n6; ++r) {
    detail::check(rep, UG.apply(psi[r]) == scaled(psi[r], -sigma(r)), "U_G psi_" + std::to_string(r) + " = -sigma^r psi_r");
    detail::check(rep, UF.apply(psi[r]) == scaled(psi[r], root_of_unity(ctx.ring(), 3, r)), "U_F psi_r = lambda^r psi_r");
  }
  detail::check(rep, UG.apply(psi0p) == scaled(psi0p, ctx.scalar(-1)), "U_G psi'_0 = -psi'_0");
  detail::check(rep, UF.apply(psi0p) == psi0p, "U_F psi'_0 = psi'_0");

  // eigenvalue-1 basis of U_F: psi'_0, psi_0, psi_3, ..., mutually orthogonal
  std::vector<const Vector*> basis{&psi0p};
  for (std::uint32_t r = 0; r < n6; r += 3) basis.push_back(&psi[r]);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) detail::check(rep, inner(*basis[i], *basis[j]).is_zero(), "orthogonality");

  const auto fdims = eigenspace_dims(ctx, rep.F, 3);
  rep.subspace_dims = {fdims[0], fdims[1], fdims[2]};
  detail::check(rep, fdims[0] == static_cast<std::int64_t>(2 * m + 1), "dim of eigenvalue-1 space = 2m+1");
  detail::check(rep, static_cast<std::int64_t>(basis.size()) == fdims[0], "basis size matches dimension");
  rep.eigen_dims = eigenspace_dims(ctx, rep.G, n6);

  const auto ug = to_complex_matrix(UG);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d - 1));
  for (std::uint32_t r = 0; r < n6; ++r) {
    std::vector<std::complex<double>> v(d);
    for (std::uint32_t k = 0; k < d; ++k) v[k] = psi[r][k].to_complex() * norm;
    const std::int64_t g = (r + 3 * m) % n6;
    rep.eigenvectors.push_back({g, static_cast<std::int64_t>(r % 3), v, detail::eigen_residual(ug, v, detail::unit_root(g, n6))});
  }
  std::vector<std::complex<double>> v0(d);
  v0[0] = 1;
  rep.eigenvectors.push_back({3 * m, 0, v0, detail::eigen_residual(ug, v0, -1.0)});
  return rep;
}

/// gamma_r = (eta^{2r} - eta^{-2r}) / (eta^{2m} - eta^{-2m}), restricted to F_d.
inline FieldElement sic_gamma(const QuadraticExtension& ext, std::int64_t r, std::uint32_t m) {
  const FieldElement eta = ext.eta();
  const FieldElement v = (eta.pow(2 * r) - eta.pow(-2 * r)) / (eta.pow(2 * m) - eta.pow(-2 * static_cast<std::int64_t>(m)));
  const auto x = ext.restrict(v);
  if (!x) throw std::logic_error("gamma_r is not in the base field");
  return *x;
}

/// G = [[gamma_{m+1}, -gamma_1], [gamma_1, gamma_{m-1}]] with G^{2m} = Zauner and ord G = 6m.
inline SympMatrix cube_root_symplectic_G(std::uint32_t d) {
  const GaloisField& f = detail::sic_field(d, 5);
  const std::uint32_t m = (d + 1) / 6;
  const QuadraticExtension& ext = QuadraticExtension::of(f);
  const SympMatrix G(sic_gamma(ext, m + 1, m), -sic_gamma(ext, 1, m), sic_gamma(ext, 1, m), sic_gamma(ext, static_cast<std::int64_t>(m) - 1, m));
  if (!(G.pow(2 * m) == zauner_matrix(f))) throw std::logic_error("G^{2m} is not the Zauner matrix");
  if (order_oracle(G) != 6 * m) throw std::logic_error("G does not have order 6m");
  return G;
}

struct Table3Entry {
  std::uint32_t d;
  std::array<std::int64_t, 4> G;
  bool power_ok = false, order_ok = false;
  std::uint64_t order = 0;
  std::string error;
  bool pass() const { return power_ok && order_ok; }
};

inline std::vector<Table3Entry> table3_data() {
  return {{5, {1, -1, 1, 0}},        {11, {-4, 2, -2, -2}},     {17, {6, -8, 8, -2}},      {23, {11, -7, 7, 4}},
          {29, {12, -9, 9, 3}},      {41, {7, 11, -11, 18}},    {47, {-12, -3, 3, -15}},   {53, {-22, 8, -8, -14}},
          {59, {-25, 28, -28, 3}},   {71, {8, 34, -34, -29}},   {83, {18, -25, 25, -7}},   {89, {-25, -12, 12, -37}},
          {101, {9, 42, -42, -50}},  {107, {-47, 31, -31, -16}}, {113, {56, -47, 47, 9}},  {131, {-44, 11, -11, -33}},
          {137, {-58, 20, -20, -38}}, {149, {47, -12, 12, 35}}};
}

/// Checks each listed G: G^{2m} = Zauner and ord G = 6m. Failures are reported, not thrown.
inline std::vector<Table3Entry> verify_table3() {
  auto entries = table3_data();
  for (auto& e : entries) {
    try {
      const GaloisField& f = make_field(e.d, 1);
      const std::uint32_t m = (e.d + 1) / 6;
      const SympMatrix G = SympMatrix::from_codes(f, e.G[0], e.G[1], e.G[2], e.G[3]);
      e.power_ok = G.pow(2 * m) == zauner_matrix(f);
      e.order = order_oracle(G);
      e.order_ok = e.order == 6 * m;
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
  }
  return entries;
}

/// d = 5 mod 6: exact eigenprojector traces of U_G, grouped Zauner subspace
/// dimensions, the trace identities for powers of G, and float eigenvectors
/// extracted from the exact projectors. `exact_projectors` also checks
/// P_r^2 = P_r = P_r^dagger and U_G P_r = sigma^r P_r exactly.
inline SicBasisReport sic_subspace_bases(std::uint32_t d, bool exact_projectors = false) {
  const GaloisField& f = detail::sic_field(d, 5);
  const std::uint32_t m = (d + 1) / 6, n6 = 6 * m;
  const QuadraticExtension& ext = QuadraticExtension::of(f);
  const Context ctx(f, detail::sic_ring(d, m));
  SicBasisReport rep{d, m, "5mod6", zauner_matrix(f), cube_root_symplectic_G(d)};
  rep.order_G = order(ext, rep.G);
  detail::check(rep, rep.order_G == n6, "ord G = 6m");
  detail::check(rep, rep.G.pow(3 * m) == SympMatrix(-f.one(), f.zero(), f.zero(), -f.one()), "G^{3m} = -I");

  // t_s - 2 = (eta^s - eta^-s)^2, l(t_s - 2) = (-1)^{s+1}, Tr U_G^s = -sigma^{3ms}
  const FieldElement eta = ext.eta();
  SympMatrix Gs = rep.G;
  for (std::uint32_t s = 1; s < n6; ++s, Gs = Gs * rep.G) {
    const FieldElement tm2 = Gs.trace() - f.from_int(2);
    const FieldElement diff = eta.pow(s) - eta.pow(-static_cast<std::int64_t>(s));
    detail::check(rep, ext.embed(tm2) == diff * diff, "t_s - 2 = (eta^s - eta^-s)^2 at s = " + std::to_string(s));
    detail::check(rep, quadratic_character(tm2) == (s % 2 == 1 ? 1 : -1), "l(t_s - 2) = (-1)^{s+1} at s = " + std::to_string(s));
    detail::check(rep, direct_trace(ctx, Gs) == -root_of_unity(ctx.ring(), n6, 3 * m * s), "Tr U_G^s = -sigma^{3ms} at s = " + std::to_string(s));
  }

  rep.eigen_dims = eigenspace_dims(ctx, rep.G, n6);
  for (std::uint32_t r = 0; r < n6; ++r) {
    detail::check(rep, rep.eigen_dims[r] == (r == 3 * m ? 0 : 1), "Tr P_r = 1 - delta_{r,3m} at r = " + std::to_string(r));
    rep.subspace_dims[r % 3] += rep.eigen_dims[r];
  }
  detail::check(rep, rep.subspace_dims == std::array<std::int64_t, 3>{2 * m - 1, 2 * m, 2 * m}, "grouped dims (2m-1, 2m, 2m)");

  const auto projectors = unitary_eigenprojectors(ctx, rep.G, n6);
  const Operator UG = symplectic_unitary(ctx, rep.G);
  const auto ug = to_complex_matrix(UG);
  for (std::uint32_t r = 0; r < n6; ++r) {
    const Operator& P = projectors[r];
    if (exact_projectors) {
      detail::check(rep, P * P == P, "P_r^2 = P_r");
      detail::check(rep, P.adjoint() == P, "P_r hermitian");
      detail::check(rep, UG * P == P.scaled(root_of_unity(ctx.ring(), n6, r)), "U_G P_r = sigma^r P_r");
    }
    if (rep.eigen_dims[r] == 0) continue;
    // largest column of the rank-1 projector, normalized
    const auto pm = to_complex_matrix(P);
    std::size_t best = 0;
    double best_norm = -1;
    for (std::size_t j = 0; j < d; ++j) {
      double s = 0;
      for (std::size_t i = 0; i < d; ++i) s += std::norm(pm[i * d + j]);
      if (s > best_norm) {
        best_norm = s;
        best = j;
      }
    }
    std::vector<std::complex<double>> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = pm[i * d + best] / std::sqrt(best_norm);
    rep.eigenvectors.push_back({r, static_cast<std::int64_t>(r % 3), v, detail::eigen_residual(ug, v, detail::unit_root(r, n6))});
  }
  return rep;
}

}  // namespace gcl
