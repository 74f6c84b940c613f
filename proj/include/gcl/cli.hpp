#pragma once

// Command-line surface. run() parses arguments and returns a JSON payload
// with an exit code: 0 ok, 1 verification failure, 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "gcl/sic.hpp"
#include "gcl/verify.hpp"

namespace gcl::cli {

using nlohmann::json;

enum class Status { ok, fail, error };

struct CommandResult {
  Status status = Status::ok;
  json payload = json::object();
  int exit_code = 0;
  bool pretty = false;
  std::string help;  // non-empty when help was requested

  std::string text() const {
    if (!help.empty()) return help;
    return (pretty ? payload.dump(2) : payload.dump()) + "\n";
  }
};

inline constexpr std::uint32_t kMaxOperatorDim = 128;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<std::int64_t> parse_ints(const std::string& s, std::size_t count, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + " must be comma-separated integers");
    }
  }
  if (out.size() != count) throw UsageError(std::string(what) + " needs exactly " + std::to_string(count) + " integers");
  return out;
}

inline const GaloisField& field_arg(std::int64_t d) {
  if (d < 3) throw DomainError("d must be an odd prime power >= 3");
  return make_field_of_size(static_cast<std::uint64_t>(d));
}

inline SympMatrix matrix_arg(const GaloisField& f, const std::string& s) {
  const auto v = parse_ints(s, 4, "--F");
  return SympMatrix::from_codes(f, v[0], v[1], v[2], v[3]);
}

inline json codes(const SympMatrix& F) {
  const auto [a, b, c, d] = F.codes();
  return json::array({a, b, c, d});
}

inline json cplx(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

inline json scalar(const CycloScalar& c) { return {{"exact", c.str()}, {"float", cplx(c.to_complex())}}; }

inline json mub_label(const MubLabel& mu) { return mu ? json(mu->code()) : json("inf"); }

inline void require_dim(const GaloisField& f) {
  if (f.size() > kMaxOperatorDim) throw DomainError("operator output limited to d <= " + std::to_string(kMaxOperatorDim));
}

inline json field_json(const GaloisField& f) {
  json j{{"p", f.p()}, {"n", f.n()}, {"d", f.size()}, {"modulus", f.modulus()}, {"theta", f.theta().code()}};
  std::uint32_t residues = 0;
  for (const auto& x : f.elements()) residues += quadratic_character(x) == 1;
  j["residues"] = residues;
  j["nonresidues"] = f.size() - 1 - residues;
  j["theta_order"] = f.size() - 1;
  std::vector<std::uint32_t> traces;
  for (std::uint32_t k = 0, c = 1; k < f.n(); ++k, c *= f.p()) traces.push_back(field_trace(f.element(c)));
  j["trace_of_basis"] = traces;
  if (static_cast<std::uint64_t>(f.size()) * f.size() <= kMaxExtensionSize) {
    const QuadraticExtension& ext = QuadraticExtension::of(f);
    j["extension"] = {{"modulus", ext.ext().modulus()}, {"theta_bar", ext.theta_bar().code()}, {"eta", ext.eta().code()},
                      {"embed_theta", ext.embed(f.theta()).code()}};
  }
  return j;
}

inline json spectral_json(const QuadraticExtension& ext, const SympMatrix& F) {
  const SpectralType type = classify(F);
  json j{{"F", codes(F)}, {"det", F.det()}, {"type", static_cast<int>(type)}, {"order", order(ext, F)}};
  if (type == SpectralType::Type3) {
    const Type3Row row = type3_row(F);
    j["type3_row"] = {{"trace", row.trace_label}, {"offdiag", row.offdiag}, {"representative", codes(row.representative)}, {"order", row.order_label}};
  } else {
    const SpectralData sd = eigen_data(ext, F);
    j["eigenvalues"] = json::array({sd.lambda_plus.code(), sd.lambda_minus.code()});
    j["r"] = sd.r;
    j["log_base"] = type == SpectralType::Type1 ? "theta" : "eta";
  }
  return j;
}

inline json sic_json(const SicBasisReport& r) {
  json vecs = json::array();
  for (const auto& e : r.eigenvectors) {
    json v = json::array();
    for (const auto& z : e.v) v.push_back(cplx(z));
    vecs.push_back({{"r", e.r}, {"f_label", e.f_label}, {"residual", e.residual}, {"vector", v}});
  }
  return {{"d", r.d},
          {"m", r.m},
          {"branch", r.branch},
          {"F", codes(r.F)},
          {"G", codes(r.G)},
          {"order_G", r.order_G},
          {"eigen_dims", r.eigen_dims},
          {"subspace_dims", r.subspace_dims},
          {"exact_checks", r.exact_checks},
          {"failures", r.failures},
          {"eigenvectors", vecs}};
}

}  // namespace detail

inline CommandResult run(std::vector<std::string> args) {
  CommandResult res;
  CLI::App app{"clifford: exact extended Clifford group tools", "clifford"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json", conway;
  app.add_option("--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("--conway-table", conway, "modulus override file (p n c0,...,cn per line)");

  std::int64_t d = 0, s = 1, r = 0;
  std::string Fs, act, suite = "all";
  bool table = false, cycle_class = false, table3 = false, exact = false;
  std::uint64_t samples = 2000, seed = 20240601;

  auto* field = app.add_subcommand("field", "field descriptor");
  auto* op = app.add_subcommand("op", "U_F entries, trace and Weyl coefficients");
  auto* ord = app.add_subcommand("order", "type, eigenvalues and order");
  auto* roots = app.add_subcommand("roots", "all G in ESL with G^s = F");
  auto* eigs = app.add_subcommand("eigs", "eigenspace dimensions of U_F");
  auto* sic = app.add_subcommand("sic", "Zauner eigenspace bases");
  auto* mub = app.add_subcommand("mub", "MUB tables, cycling classes and label actions");
  auto* label = app.add_subcommand("label", "extension-field labels");
  auto* verify = app.add_subcommand("verify", "exact verification suites");
  for (auto* sc : {field, op, ord, roots, eigs, mub, label, verify}) sc->add_option("--d", d, "dimension")->required();
  sic->add_option("--d", d, "prime dimension >= 5");
  for (auto* sc : {op, ord, roots, eigs}) sc->add_option("--F", Fs, "matrix as a,b,c,d codes")->required();
  roots->add_option("--s", s, "root index")->required();
  sic->add_flag("--table3", table3, "verify the listed G matrices");
  sic->add_flag("--exact", exact, "also check projector identities exactly");
  auto* mt = mub->add_flag("--table", table, "all bases");
  auto* mc = mub->add_flag("--cycle-class", cycle_class, "classify all ESL elements");
  auto* ma = mub->add_option("--act", act, "label action of F = a,b,c,d");
  mt->excludes(mc)->excludes(ma);
  mc->excludes(ma);
  label->add_option("--r", r, "label in [0, d^2 - 2]")->required();
  verify->add_option("--suite", suite, "faithful|covariance|orders|gauss|traces|weyl|mubs|perm|all");
  verify->add_option("--samples", samples, "sample size for large groups");
  verify->add_option("--seed", seed, "sampling seed");

  auto error = [&](int code, const std::string& msg) {
    res.status = Status::error;
    res.exit_code = code;
    res.payload = {{"error", msg}};
    return res;
  };

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    res.help = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    return error(2, e.what());
  }
  res.pretty = format == "pretty";

  try {
    if (!conway.empty()) load_modulus_table(conway);
    json& out = res.payload;
    if (field->parsed()) {
      out = detail::field_json(detail::field_arg(d));
    } else if (op->parsed()) {
      const GaloisField& f = detail::field_arg(d);
      detail::require_dim(f);
      const Context ctx = Context::make(f);
      const SympMatrix F = detail::matrix_arg(f, Fs);
      const Operator U = symplectic_unitary(ctx, F);
      json entries = json::array();
      for (std::size_t i = 0; i < U.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < U.dim(); ++j) row.push_back(detail::scalar(U.at(i, j)));
        entries.push_back(row);
      }
      out = {{"d", f.size()}, {"F", detail::codes(F)}, {"antiunitary", U.antiunitary()}, {"conductor", ctx.ring().conductor()}, {"entries", entries}};
      if (F.det() == 1) {
        out["trace"] = detail::scalar(trace_closed_form(ctx, F));
        json weyl = json::array();
        for (const auto& [u, c] : weyl_expansion(ctx, F)) weyl.push_back({{"u", {u.u1.code(), u.u2.code()}}, {"c", c.str()}});
        out["weyl"] = weyl;
      }
    } else if (ord->parsed()) {
      const GaloisField& f = detail::field_arg(d);
      out = detail::spectral_json(QuadraticExtension::of(f), detail::matrix_arg(f, Fs));
    } else if (roots->parsed()) {
      const GaloisField& f = detail::field_arg(d);
      if (s < 1) throw DomainError("--s must be positive");
      const SympMatrix F = detail::matrix_arg(f, Fs);
      json list = json::array();
      for (const auto& G : matrix_roots(QuadraticExtension::of(f), F, static_cast<std::uint64_t>(s))) list.push_back(detail::codes(G));
      out = {{"F", detail::codes(F)}, {"s", s}, {"roots", list}};
    } else if (eigs->parsed()) {
      const GaloisField& f = detail::field_arg(d);
      detail::require_dim(f);
      const SympMatrix F = detail::matrix_arg(f, Fs);
      if (F.det() != 1) throw DomainError("eigenprojectors are only defined here for det F = +1");
      const std::uint64_t m = order(QuadraticExtension::of(f), F);
      const Context ctx = Context::make(f, {static_cast<std::uint32_t>(m)});
      out = {{"F", detail::codes(F)}, {"order", m}, {"dims", eigenspace_dims(ctx, F, m)}};
    } else if (sic->parsed()) {
      if (table3) {
        json list = json::array();
        bool all = true;
        for (const auto& e : verify_table3()) {
          all = all && e.pass();
          list.push_back({{"d", e.d}, {"G", e.G}, {"power_ok", e.power_ok}, {"order", e.order}, {"order_ok", e.order_ok}, {"pass", e.pass()}, {"error", e.error}});
        }
        out = {{"entries", list}, {"pass", all}};
        if (!all) res.status = Status::fail, res.exit_code = 1;
      } else {
        if (d == 0) throw detail::UsageError("sic needs --d or --table3");
        if (d < 5 || d > 1000) throw DomainError("sic needs a prime d in [5, 1000]");
        const auto rep = d % 6 == 1 ? type1_sic_basis(static_cast<std::uint32_t>(d)) : sic_subspace_bases(static_cast<std::uint32_t>(d), exact);
        out = detail::sic_json(rep);
        if (!rep.exact_checks) res.status = Status::fail, res.exit_code = 1;
      }
    } else if (mub->parsed()) {
      const GaloisField& f = detail::field_arg(d);
      const QuadraticExtension& ext = QuadraticExtension::of(f);
      if (table) {
        detail::require_dim(f);
        const Context ctx = Context::make(f);
        json bases = json::array();
        for (const auto& b : mub_bases(ctx)) {
          json vecs = json::array();
          for (const auto& v : b.vectors) {
            json vj = json::array();
            for (const auto& c : v) vj.push_back(detail::scalar(c));
            vecs.push_back(vj);
          }
          bases.push_back({{"mu", detail::mub_label(b.mu)}, {"vectors", vecs}});
        }
        out = {{"d", f.size()}, {"bases", bases}};
      } else if (cycle_class) {
        json list = json::array();
        std::uint64_t cyc = 0, half = 0, sym_cyc = 0, disagree = 0;
        for (const auto& F : all_esl(f)) {
          const bool c = is_cycling(F), h = is_half_cycling(F);
          const bool agree = c == is_cycling_by_trace(ext, F) && h == is_half_cycling_by_trace(ext, F);
          cyc += c;
          half += h;
          sym_cyc += c && F.det() == 1;
          disagree += !agree;
          list.push_back({{"F", detail::codes(F)}, {"det", F.det()}, {"orbits", mub_orbits(F)}, {"cycling", c}, {"half_cycling", h}, {"trace_criteria_agree", agree}});
        }
        out = {{"d", f.size()}, {"cycling", cyc}, {"half_cycling", half}, {"symplectic_cycling", sym_cyc}, {"disagreements", disagree}, {"elements", list}};
        if (disagree != 0 || sym_cyc != 0) res.status = Status::fail, res.exit_code = 1;
      } else if (!act.empty()) {
        const Context ctx = Context::make(f);
        const SympMatrix F = detail::matrix_arg(f, act);
        json list = json::array();
        for (const auto& mu : all_mub_labels(f))
          for (const auto& x : f.elements()) {
            const MubImage im = symplectic_mub_action(ctx, F, mu, x);
            list.push_back({{"mu", detail::mub_label(mu)}, {"x", x.code()}, {"mu_image", detail::mub_label(im.mu)}, {"x_image", im.x.code()}, {"phase", im.phase.str()}});
          }
        out = {{"F", detail::codes(F)}, {"cycling_index", cycling_index(F)}, {"orbits", mub_orbits(F)}, {"action", list}};
      } else {
        throw detail::UsageError("mub needs one of --table, --cycle-class, --act");
      }
    } else if (label->parsed()) {
      const GaloisField& f = detail::field_arg(d);
      const QuadraticExtension& ext = QuadraticExtension::of(f);
      const ExtLabel L = ext_label(f.size(), r);
      const FieldElement x = ext.ext().exp(-r);
      const PhasePoint u = u_of_x(ext, x);
      out = {{"r", L.r}, {"s", L.s}, {"t", L.t}, {"x", x.code()}, {"u", {u.u1.code(), u.u2.code()}}};
    } else if (verify->parsed()) {
      const GaloisField& f = detail::field_arg(d);
      detail::require_dim(f);
      const Context ctx = Context::make(f);
      VerifyOptions opt;
      opt.samples = samples;
      opt.seed = seed;
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
          throw detail::UsageError("unknown suite: " + suite);
        names = {suite};
      }
      json list = json::array();
      bool all = true;
      for (const auto& name : names) {
        const SuiteResult sr = run_suite(name, ctx, opt);
        all = all && sr.pass;
        json j{{"suite", sr.name}, {"pass", sr.pass}, {"checked", sr.checked}};
        if (!sr.pass) j["counterexample"] = sr.counterexample;
        list.push_back(j);
      }
      out = {{"d", f.size()}, {"suites", list}, {"pass", all}};
      if (!all) res.status = Status::fail, res.exit_code = 1;
    }
  } catch (const detail::UsageError& e) {
    return error(2, e.what());
  } catch (const DomainError& e) {
    return error(2, e.what());
  }
  return res;
}

}  // namespace gcl::cli
