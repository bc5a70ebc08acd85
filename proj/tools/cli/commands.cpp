#include "commands.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "mcc/hirzebruch.hpp"
#include "mcc/motives.hpp"
#include "mcc/pontrjagin.hpp"
#include "model_file.hpp"
#include "verify.hpp"

namespace mcc::cli {

std::size_t max_order() {
  const char* env = std::getenv("MOTIVIC_CC_MAX_ORDER");
  if (env == nullptr || *env == '\0') return 12;
  try {
    const long v = std::stol(env);
    if (v < 0) throw InputError("MOTIVIC_CC_MAX_ORDER must be nonnegative");
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw InputError("MOTIVIC_CC_MAX_ORDER is not an integer");
  }
}

namespace {

void check_order(std::size_t order) {
  if (order > max_order()) {
    throw UnsupportedRangeError("order " + std::to_string(order) + " exceeds the cap " +
                                std::to_string(max_order()) + " (MOTIVIC_CC_MAX_ORDER)");
  }
}

const char* status(bool ok) { return ok ? "ok" : "fail"; }

Json check(const std::string& name, bool ok) { return Json{{"name", name}, {"status", status(ok)}}; }
Json skipped(const std::string& name) { return Json{{"name", name}, {"status", "skipped"}}; }

template <class R>
Json series_strings(const TSeries<R>& s) {
  Json arr = Json::array();
  for (const auto& c : s.coeffs()) arr.push_back(ring_text(c));
  return arr;
}

Json pont_terms(const PontSeries& s) {
  Json arr = Json::array();
  for (std::size_t n = 0; n <= s.order(); ++n) {
    Json comp = Json::array();
    for (const auto& [m, c] : s[n].terms()) {
      comp.push_back(Json{{"monomial", atom_text(s.model(), m)}, {"coefficient", c.to_string()}});
    }
    arr.push_back(comp);
  }
  return arr;
}

Json base_report(const std::string& command, Json params, std::size_t order) {
  Json r;
  r["command"] = command;
  r["params"] = std::move(params);
  r["order"] = order;
  return r;
}

// ---------------------------------------------------------------------------
// Plain-text rendering

std::string pretty(const Json& r) {
  std::ostringstream os;
  os << "command: " << r.value("command", std::string()) << "\n";
  if (r.contains("params")) {
    os << "params:";
    for (const auto& [k, v] : r["params"].items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
  }
  // Euler exponents are indexed from k = 1.
  const std::size_t base = r.value("command", std::string()) == "exponents" ? 1 : 0;
  auto table = [&](const char* title, const Json& coeffs) {
    os << title << ":\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const std::size_t n = i + base;
      const Json& c = coeffs[i];
      if (c.is_string()) {
        os << "  " << n << "  " << c.get<std::string>() << "\n";
      } else if (c.empty()) {
        os << "  " << n << "  0\n";
      } else {
        for (const auto& t : c) {
          os << "  " << n << "  " << t["monomial"].get<std::string>() << "  " << t["coefficient"].get<std::string>() << "\n";
        }
      }
    }
  };
  for (const char* key : {"coefficients", "neg_t_form", "degree_series", "euler_characteristics"}) {
    if (r.contains(key)) table(key, r[key]);
  }
  if (r.contains("checks")) {
    os << "checks:\n";
    for (const auto& c : r["checks"]) {
      os << "  " << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
      if (c.contains("instances")) os << "  (" << c["instances"].get<std::size_t>() << " instances)";
      os << "\n";
      if (c.contains("counterexample")) os << "      counterexample: " << c["counterexample"].get<std::string>() << "\n";
    }
  }
  if (r.contains("notes")) {
    for (const auto& n : r["notes"]) os << "note: " << n.get<std::string>() << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands

struct ModelArgs {
  std::string builtin;
  std::string file;

  [[nodiscard]] Json params() const {
    Json p;
    if (!builtin.empty()) p["builtin"] = builtin;
    if (!file.empty()) p["model"] = file;
    return p;
  }
};

Json cmd_zeta(const ModelArgs& ma, std::size_t order, const std::string& spec) {
  check_order(order);
  const HomologyModel model = resolve_model(ma.builtin, ma.file);
  Json params = ma.params();
  params["order"] = order;
  params["spec"] = spec;
  Json r = base_report("zeta", params, order);
  Json checks = Json::array();
  if (spec == "uv") {
    const PSeries z = kapranov_zeta(model.e_poly, order);
    r["coefficients"] = series_strings(z);
    checks.push_back(check("polyring_vs_adams_exp", z == pre_lambda(model.e_poly, order)));
  } else if (spec == "chi-y") {
    const LPoly chi_y = hodge_to_chi_minus_y(model.e_poly);
    const PSeries z = kapranov_zeta(chi_y, order);
    r["coefficients"] = series_strings(z);
    checks.push_back(check("polyring_vs_adams_exp", z == pre_lambda(chi_y, order)));
    if (model.proper) {
      const ModelPtr mp = share(model);
      checks.push_back(check("degree_vs_class_route", pont_degree(sym_prod_class_series(mp, order)) == z));
    } else {
      checks.push_back(skipped("degree_vs_class_route"));
    }
  } else {
    const Rational chi = hodge_to_chi(model.e_poly);
    const RSeries z = pre_lambda(chi, order);
    r["coefficients"] = series_strings(z);
    bool ok = true;
    for (std::size_t n = 0; n <= order; ++n) {
      ok = ok && z[n] == binomial(chi + Rational(static_cast<long>(n)) - Rational(1), static_cast<long>(n));
    }
    checks.push_back(check("binomial", ok));
  }
  r["checks"] = checks;
  return r;
}

Json cmd_exponents(int dim, const std::string& series_file, std::size_t order) {
  check_order(order);
  Json params;
  Json checks = Json::array();
  PSeries a = PSeries::one(0, LPoly(vars::motive()));
  EulerExponents<LPoly> alpha(0, LPoly(vars::motive()));
  if (!series_file.empty()) {
    params["series"] = series_file;
    a = series_from_json(read_json_file(series_file));
    if (a.order() < order) throw InputError("series file has order " + std::to_string(a.order()) + " < requested order");
    a = a.truncated(order);
    alpha = euler_log(a);
  } else {
    if (dim < 1) throw InputError("--dim must be at least 1");
    params["dim"] = dim;
    alpha = punctual_exponents(dim, order);
    a = punctual_series(dim, order);
    if (order <= 3) {
      const auto closed = punctual_exponents_closed_form(dim);
      bool ok = true;
      for (std::size_t k = 1; k <= order; ++k) ok = ok && alpha[k] == closed[k];
      checks.push_back(check("closed_form", ok));
    }
  }
  params["order"] = order;
  Json r = base_report("exponents", params, order);
  Json coeffs = Json::array();
  for (const auto& b : alpha.values()) coeffs.push_back(b.to_string());
  r["coefficients"] = coeffs;
  if (a[0].vars() == vars::motive()) {
    Json chis = Json::array();
    for (const auto& b : alpha.values()) chis.push_back(spec_chi(b).to_string());
    r["euler_characteristics"] = chis;
  }
  checks.push_back(check("euler_round_trip", euler_exp(alpha) == a));
  r["checks"] = checks;
  r["notes"] = Json::array({"coefficients[k-1] is the Euler exponent alpha_k in A(t) = prod_k (1 - t^k)^(-alpha_k)"});
  return r;
}

Json cmd_classes(const ModelArgs& ma, int dim, std::size_t order, const std::string& kind) {
  check_order(order);
  if (dim < 1) throw InputError("--dim must be at least 1");
  if ((kind == "virtual" || kind == "aluffi") && dim != 3) {
    throw InputError("--kind " + kind + " is defined for threefolds only (--dim 3)");
  }
  const ModelPtr model = share(resolve_model(ma.builtin, ma.file));
  Json params = ma.params();
  params["dim"] = dim;
  params["kind"] = kind;
  params["order"] = order;
  Json r = base_report("classes", params, order);
  Json checks = Json::array();
  Json notes = Json::array();
  const bool proper = model->proper;
  const LPoly chi_y_x = hodge_to_chi_minus_y(model->e_poly);
  auto degree_check = [&](const std::string& name, const std::function<bool()>& f) {
    checks.push_back(proper ? check(name, f()) : skipped(name));
  };

  PontSeries result(model, order);
  if (kind == "sym") {
    result = sym_prod_class_series(model, order);
    degree_check("degree_vs_kapranov", [&] { return pont_degree(result) == kapranov_zeta(chi_y_x, order); });
  } else if (kind == "hilb") {
    result = hilb_class_series(model, dim, order);
    checks.push_back(check("mt2_route", result == mt2_series(model, punctual_series(dim, order))));
    if (dim == 1) checks.push_back(check("equals_sym", result == sym_prod_class_series(model, order)));
    degree_check("degree_vs_motivic_hilbert",
                 [&] { return pont_degree(result) == hilb_motive_series(chi_y_x, dim, order); });
  } else if (kind == "config") {
    result = config_class_series(model, order);
    PSeries one_plus_t = PSeries::one(order, LPoly(vars::motive()));
    if (order >= 1) one_plus_t.set(1, LPoly(vars::motive(), Rational(1)));
    checks.push_back(check("mt2_route", result == mt2_series(model, one_plus_t)));
    degree_check("degree_vs_motivic_config", [&] { return pont_degree(result) == config_space_series(chi_y_x, order); });
  } else if (kind == "chern") {
    result = chern_class_series(model, dim, order);
    if (dim <= 2 || order <= 3) {
      checks.push_back(check("normalized_limit_of_hilb", normalized_y_to_1(hilb_class_series(model, dim, order)) == result));
    } else {
      checks.push_back(skipped("normalized_limit_of_hilb"));
    }
    degree_check("degree_vs_euler_product", [&] {
      const Rational chi = hodge_to_chi(model->e_poly);
      EulerExponents<Rational> b(order, Rational(0));
      for (std::size_t k = 1; k <= order; ++k) b.set(k, chi_punctual_exponent(dim, k) * chi);
      const RSeries expected = euler_exp(b);
      const PSeries deg = pont_degree(result);
      for (std::size_t n = 0; n <= order; ++n) {
        if (!(deg[n] == LPoly(vars::genus(), expected[n]))) return false;
      }
      return true;
    });
  } else if (kind == "virtual") {
    auto v = virtual_class_series(model, order);
    result = v.t_form;
    r["neg_t_form"] = pont_terms(v.neg_t_form);
    checks.push_back(check("t_to_minus_t_agreement", pont_neg_t(v.t_form) == v.neg_t_form));
    degree_check("degree_vs_motivic_virtual",
                 [&] { return pont_degree(result) == hilb_motive_series(chi_y_x, virtual_punctual_series(order)); });
    notes.push_back("coefficients: (1 + sum chi_{-y}(virtual punctual class) t^n d^n)^T; neg_t_form: prod_k (1 - t^k d^k)^(-chi_{-y}(alpha_k) T)");
    notes.push_back("t_to_minus_t_agreement compares coefficients at t -> -t with neg_t_form; the algebraic power structure does not satisfy this sign rule in general");
  } else if (kind == "aluffi") {
    result = aluffi_series(model, order);
    checks.push_back(check("sign_relation_vs_chern", pont_neg_t(result) == chern_class_series(model, 3, order)));
    degree_check("degree_vs_macmahon", [&] {
      const RSeries expected = power(macmahon_series(order), hodge_to_chi(model->e_poly));
      const PSeries deg = pont_degree(pont_neg_t(result));
      for (std::size_t n = 0; n <= order; ++n) {
        if (!(deg[n] == LPoly(vars::genus(), expected[n]))) return false;
      }
      return true;
    });
    notes.push_back("coefficient n is pi_* c^A(X^[n]); sum_n coefficient_n (-t)^n = prod_k (1 - t^k d^k)^(-k c(X)); degree_series uses the (-t)^n convention");
  } else {
    throw InputError("unknown --kind '" + kind + "'");
  }
  r["coefficients"] = pont_terms(result);
  if (proper) {
    r["degree_series"] = series_strings(kind == "aluffi" ? pont_degree(pont_neg_t(result)) : pont_degree(result));
  }
  r["checks"] = checks;
  if (!notes.empty()) r["notes"] = notes;
  return r;
}

Json cmd_verify(const std::string& suite, std::size_t order, std::uint64_t seed, bool& all_ok) {
  check_order(order);
  Json params;
  params["suite"] = suite;
  params["order"] = order;
  params["seed"] = seed;
  Json r = base_report("verify", params, order);
  Json checks = Json::array();
  all_ok = true;
  for (const auto& c : run_suite(suite, order, seed)) {
    Json j{{"name", c.name}, {"status", status(c.ok)}, {"instances", c.instances}};
    if (!c.ok) j["counterexample"] = c.counterexample;
    all_ok = all_ok && c.ok;
    checks.push_back(j);
  }
  r["checks"] = checks;
  return r;
}

std::string render(const Json& r, bool as_text) { return as_text ? pretty(r) : r.dump(2) + "\n"; }

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  CliResult result;
  CLI::App app{"Exact generating series for Hilbert schemes, symmetric products and their characteristic classes",
               "motivic-cc"};
  app.require_subcommand(1);

  ModelArgs model_args;
  std::size_t zeta_order = 4, exps_order = 3, classes_order = 3, verify_order = 6;
  bool pretty_out = false;
  auto model_opts = [&](CLI::App* sub) {
    sub->add_option("--builtin", model_args.builtin, "Built-in model: point, P1..P4, PaxPb");
    sub->add_option("--model", model_args.file, "Model JSON file");
    sub->add_flag("--pretty", pretty_out, "Plain-text table instead of JSON");
  };

  std::string spec = "uv";
  auto* zeta = app.add_subcommand("zeta", "Symmetric-product (Kapranov zeta) series");
  model_opts(zeta);
  zeta->add_option("--order", zeta_order, "Truncation order")->default_val(4);
  zeta->add_option("--spec", spec, "Specialization")->check(CLI::IsMember({"uv", "chi-y", "chi"}))->default_val("uv");

  int dim = 0;
  std::string series_file;
  auto* exps = app.add_subcommand("exponents", "Euler exponents alpha_k of a punctual or user series");
  auto* dim_opt = exps->add_option("--dim", dim, "Dimension d of C^d");
  auto* series_opt = exps->add_option("--series", series_file, "Series JSON file");
  dim_opt->excludes(series_opt);
  exps->add_option("--order", exps_order, "Truncation order")->default_val(3);
  exps->add_flag("--pretty", pretty_out, "Plain-text table instead of JSON");

  std::string kind;
  auto* classes = app.add_subcommand("classes", "Class-level generating series in the free Pontrjagin ring");
  model_opts(classes);
  classes->add_option("--dim", dim, "Dimension d of the punctual data")->required();
  classes->add_option("--order", classes_order, "Truncation order")->default_val(3);
  classes->add_option("--kind", kind, "Series kind")
      ->required()
      ->check(CLI::IsMember({"hilb", "sym", "config", "chern", "virtual", "aluffi"}));

  std::string suite = "all";
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", suite, "Suite")
      ->check(CLI::IsMember({"algebra", "lambda", "motives", "hirzebruch", "pontrjagin", "all"}))
      ->default_val("all");
  verify->add_option("--order", verify_order, "Truncation order")->default_val(6);
  verify->add_option("--seed", seed, "Random seed")->default_val(1);
  verify->add_flag("--pretty", pretty_out, "Plain-text table instead of JSON");

  auto* exporter = app.add_subcommand("export-model", "Print a model as a model JSON file");
  exporter->add_option("--builtin", model_args.builtin, "Built-in model");
  exporter->add_option("--model", model_args.file, "Model JSON file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kInputError;
    return result;
  }

  try {
    if (zeta->parsed()) {
      result.out = render(cmd_zeta(model_args, zeta_order, spec), pretty_out);
    } else if (exps->parsed()) {
      if (series_file.empty() && dim_opt->count() == 0) throw InputError("give --dim or --series");
      result.out = render(cmd_exponents(dim, series_file, exps_order), pretty_out);
    } else if (classes->parsed()) {
      result.out = render(cmd_classes(model_args, dim, classes_order, kind), pretty_out);
    } else if (verify->parsed()) {
      bool ok = true;
      result.out = render(cmd_verify(suite, verify_order, seed, ok), pretty_out);
      if (!ok) result.exit_code = kCheckFailed;
    } else if (exporter->parsed()) {
      result.out = model_to_json(resolve_model(model_args.builtin, model_args.file)).dump(2) + "\n";
    }
  } catch (const UnsupportedRangeError& e) {
    result.err = std::string("unsupported range: ") + e.what() + "\n";
    result.exit_code = kUnsupportedRange;
  } catch (const InputError& e) {
    result.err = std::string("input error: ") + e.what() + "\n";
    result.exit_code = kInputError;
  } catch (const IntegralityError& e) {
    result.err = std::string("integrality check failed: ") + e.what() + "\n";
    result.exit_code = kCheckFailed;
  } catch (const InternalCheckError& e) {
    result.err = std::string("internal check failed: ") + e.what() + "\n";
    result.exit_code = kCheckFailed;
  } catch (const Error& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kInputError;
  }
  return result;
}

}  // namespace mcc::cli
