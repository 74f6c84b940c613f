#pragma once

// Exact verification suites over one field. Small groups are swept
// exhaustively; larger ones are sampled with a seeded generator.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gcl/mub.hpp"

namespace gcl {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::string counterexample;  // first failure, empty on pass

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (!ok && pass) {
      pass = false;
      counterexample = describe();
    }
  }
};

struct VerifyOptions {
  std::uint64_t exhaustive_limit = 60000;  // largest number of cases swept exhaustively
  std::uint64_t samples = 2000;            // sample size above the limit
  std::uint64_t seed = 20240601;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"faithful", "covariance", "orders", "gauss", "traces", "weyl", "mubs", "perm"};
  return names;
}

namespace detail {

inline std::string pt_str(const PhasePoint& u) { return "(" + std::to_string(u.u1.code()) + "," + std::to_string(u.u2.code()) + ")"; }

}  // namespace detail

/// U_{F1} U_{F2} = U_{F1 F2}.
inline SuiteResult verify_faithful(const Context& ctx, const VerifyOptions& opt = {}) {
  SuiteResult res{"faithful"};
  const auto group = all_esl(ctx.field());
  const std::uint64_t n = group.size();
  auto check = [&](const SympMatrix& a, const SympMatrix& b, const Operator& ua, const Operator& ub) {
    res.record(ua * ub == symplectic_unitary(ctx, a * b), [&] { return "F1=" + a.str() + " F2=" + b.str(); });
  };
  std::vector<Operator> us;
  for (const auto& F : group) us.push_back(symplectic_unitary(ctx, F));
  if (n * n <= opt.exhaustive_limit) {
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) check(group[i], group[j], us[i], us[j]);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (std::uint64_t k = 0; k < opt.samples; ++k) {
      const std::uint64_t i = pick(rng), j = pick(rng);
      check(group[i], group[j], us[i], us[j]);
    }
  }
  return res;
}

/// U_F D_u U_F^dagger = D_{Fu}.
inline SuiteResult verify_covariance(const Context& ctx, const VerifyOptions& opt = {}) {
  SuiteResult res{"covariance"};
  const GaloisField& f = ctx.field();
  const auto group = all_esl(f);
  const auto points = all_points(f);
  std::vector<Operator> ds;
  for (const auto& u : points) ds.push_back(displacement(ctx, u));
  auto index = [&](const PhasePoint& u) { return static_cast<std::size_t>(u.u1.code()) * f.size() + u.u2.code(); };
  auto check = [&](const SympMatrix& F, const Operator& U, const Operator& Ui, std::size_t k) {
    const PhasePoint& u = points[k];
    res.record(U * ds[k] * Ui == ds[index(F.apply(u))], [&] { return "F=" + F.str() + " u=" + detail::pt_str(u); });
  };
  if (static_cast<std::uint64_t>(group.size()) * points.size() <= opt.exhaustive_limit * 8) {
    for (const auto& F : group) {
      const Operator U = symplectic_unitary(ctx, F), Ui = U.adjoint();
      for (std::size_t k = 0; k < points.size(); ++k) check(F, U, Ui, k);
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pf(0, group.size() - 1), pu(0, points.size() - 1);
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      const SympMatrix& F = group[pf(rng)];
      const Operator U = symplectic_unitary(ctx, F);
      check(F, U, U.adjoint(), pu(rng));
    }
  }
  return res;
}

/// Closed-form order equals the brute-force order on all of ESL.
inline SuiteResult verify_orders(const Context& ctx, const VerifyOptions& = {}) {
  SuiteResult res{"orders"};
  const QuadraticExtension& ext = QuadraticExtension::of(ctx.field());
  for (const auto& F : all_esl(ctx.field())) {
    const auto o = order(ext, F), oo = order_oracle(F);
    res.record(o == oo, [&] { return "F=" + F.str() + " formula=" + std::to_string(o) + " oracle=" + std::to_string(oo); });
  }
  return res;
}

/// sum_x tau^{tr(a x^2 + b x)} = sqrt(d) l~(a) tau^{-tr(b^2 / 4a)}.
inline SuiteResult verify_gauss(const Context& ctx, const VerifyOptions& = {}) {
  SuiteResult res{"gauss"};
  const GaloisField& f = ctx.field();
  const FieldElement four = f.from_int(4);
  for (const auto& a : f.elements()) {
    if (a.is_zero()) continue;
    for (const auto& b : f.elements()) {
      const CycloScalar closed = ctx.sqrt_d() * ctx.l_tilde(a) * ctx.tau_pow(-static_cast<std::int64_t>(field_trace(b * b / (four * a))));
      res.record(gauss_sum(ctx, a, b) == closed, [&] { return "a=" + std::to_string(a.code()) + " b=" + std::to_string(b.code()); });
    }
  }
  return res;
}

/// Closed-form trace = diagonal sum = trace of the full matrix, all of SL.
inline SuiteResult verify_traces(const Context& ctx, const VerifyOptions& = {}) {
  SuiteResult res{"traces"};
  for (const auto& F : all_sl(ctx.field())) {
    const CycloScalar c = trace_closed_form(ctx, F);
    res.record(c == direct_trace(ctx, F) && c == symplectic_unitary(ctx, F).trace(), [&] { return "F=" + F.str(); });
  }
  return res;
}

/// sum_u c_u D_u = U_F on all of SL.
inline SuiteResult verify_weyl(const Context& ctx, const VerifyOptions& = {}) {
  SuiteResult res{"weyl"};
  for (const auto& F : all_sl(ctx.field()))
    res.record(weyl_reconstruct(ctx, weyl_expansion(ctx, F)) == symplectic_unitary(ctx, F), [&] { return "F=" + F.str(); });
  return res;
}

/// |<mu,x|mu',x'>|^2 = 1/d across bases and delta within a basis.
inline SuiteResult verify_mubs(const Context& ctx, const VerifyOptions& = {}) {
  SuiteResult res{"mubs"};
  const auto bases = mub_bases(ctx);
  const std::uint32_t d = ctx.d();
  const CycloScalar inv_d = CycloScalar::rational(ctx.ring(), Integer(1), Integer(static_cast<std::int64_t>(d)));
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i; j < bases.size(); ++j)
      for (std::uint32_t x = 0; x < d; ++x)
        for (std::uint32_t y = 0; y < d; ++y) {
          const CycloScalar z = inner(bases[i].vectors[x], bases[j].vectors[y]);
          const CycloScalar want = i != j ? inv_d : ctx.scalar(x == y ? 1 : 0);
          res.record(z * z.conj() == want, [&] {
            return "mu=" + mub_label_str(bases[i].mu) + " x=" + std::to_string(x) + " mu'=" + mub_label_str(bases[j].mu) + " x'=" + std::to_string(y);
          });
        }
  return res;
}

/// F u_r = u_{perm_action(F, r)} for every F and r.
inline SuiteResult verify_perm(const Context& ctx, const VerifyOptions& = {}) {
  SuiteResult res{"perm"};
  const QuadraticExtension& ext = QuadraticExtension::of(ctx.field());
  const std::int64_t q = static_cast<std::int64_t>(ctx.d()) * ctx.d() - 1;
  std::vector<PhasePoint> labels;
  for (std::int64_t r = 0; r < q; ++r) labels.push_back(u_r(ext, r));
  for (const auto& F : all_esl(ctx.field()))
    for (std::int64_t r = 0; r < q; ++r) {
      const std::int64_t r2 = perm_action(ext, F, r);
      res.record(F.apply(labels[r]) == labels[r2], [&] { return "F=" + F.str() + " r=" + std::to_string(r); });
    }
  return res;
}

inline SuiteResult run_suite(const std::string& name, const Context& ctx, const VerifyOptions& opt = {}) {
  if (name == "faithful") return verify_faithful(ctx, opt);
  if (name == "covariance") return verify_covariance(ctx, opt);
  if (name == "orders") return verify_orders(ctx, opt);
  if (name == "gauss") return verify_gauss(ctx, opt);
  if (name == "traces") return verify_traces(ctx, opt);
  if (name == "weyl") return verify_weyl(ctx, opt);
  if (name == "mubs") return verify_mubs(ctx, opt);
  if (name == "perm") return verify_perm(ctx, opt);
  throw DomainError("unknown suite: " + name);
}

}  // namespace gcl
