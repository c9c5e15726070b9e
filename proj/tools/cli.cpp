#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "cubic_orbit/closed_form.hpp"
#include "cubic_orbit/errors.hpp"
#include "cubic_orbit/linearization.hpp"
#include "cubic_orbit/matrix_power.hpp"
#include "cubic_orbit/zero_sets.hpp"

namespace cubic_orbit::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kMinDigitBudget = 1000;
constexpr std::uint64_t kIterateCheckDepth = 6;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RawOptions {
  std::string a, b, c, d;
  std::string x0, y0;
  std::uint64_t n = 0;
  std::uint64_t horizon = kDefaultHorizon;
  std::optional<std::uint64_t> digit_budget;
  bool json = false;
  bool factored = false;
};

struct RunConfig {
  SystemParams params;
  std::optional<InitialPair> init;
  std::uint64_t n = 0;
  std::uint64_t horizon = kDefaultHorizon;
  std::uint64_t digit_budget = kDefaultDigitBudget;
  bool json = false;
  bool factored = false;
};

Rational parse_value(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::uint64_t resolve_budget(const RawOptions& raw, const std::optional<std::string>& env_budget) {
  std::uint64_t budget = kDefaultDigitBudget;
  std::string source = "--digit-budget";
  if (raw.digit_budget) {
    budget = *raw.digit_budget;
  } else if (env_budget && !env_budget->empty()) {
    source = kBudgetEnvVar;
    try {
      std::size_t used = 0;
      budget = std::stoull(*env_budget, &used);
      if (used != env_budget->size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw UsageError(source + ": not a positive integer: '" + *env_budget + "'");
    }
  }
  if (budget < kMinDigitBudget) {
    throw UsageError(source + ": digit budget must be at least " + std::to_string(kMinDigitBudget));
  }
  return budget;
}

RunConfig make_config(const RawOptions& raw, bool needs_init, const std::optional<std::string>& env_budget) {
  RunConfig cfg;
  cfg.params = {parse_value("-a", raw.a), parse_value("-b", raw.b), parse_value("-c", raw.c),
                parse_value("-d", raw.d)};
  if (needs_init) cfg.init = InitialPair{parse_value("--x0", raw.x0), parse_value("--y0", raw.y0)};
  cfg.n = raw.n;
  cfg.horizon = raw.horizon;
  cfg.digit_budget = resolve_budget(raw, env_budget);
  cfg.json = raw.json;
  cfg.factored = raw.factored;
  return cfg;
}

json header(const char* command, const SystemParams& p) {
  json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  doc["case"] = std::string(to_string(classify(p)));
  return doc;
}

json value_json(const RunConfig& cfg, const FactoredValue& v) {
  if (!cfg.factored) return v.expand(cfg.digit_budget).to_string();
  if (cfg.json) return factored_to_json(v);
  return v.normalized().to_string();
}

json scalar_json(const EigenScalar& s) {
  if (const auto* r = std::get_if<Rational>(&s)) return r->to_string();
  const auto& q = std::get<QuadScalar>(s);
  json out;
  out["p"] = q.p().to_string();
  out["q"] = q.q().to_string();
  out["radicand"] = q.radicand().to_string();
  return out;
}

json verdict_json(const ZeroSetVerdict& v) {
  json out;
  out["member"] = v.member();
  out["status"] = std::string(to_string(v.status));
  if (v.witness) out["witness"] = *v.witness;
  if (v.horizon) out["horizon"] = *v.horizon;
  return out;
}

// Human rendering: one "key: value" line per field, nested objects indented.
std::string inline_text(const json& v, bool nested = false) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, item] : v.items()) {
      if (!out.empty()) out += ' ';
      out += key + "=" + inline_text(item, true);
    }
    return nested ? "{" + out + "}" : out;
  }
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) out += ", ";
      out += inline_text(v[i], true);
    }
    return out + "]";
  }
  return v.dump();
}

void emit(std::ostream& out, const RunConfig& cfg, const json& doc) {
  if (cfg.json) {
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "schema") continue;
    if (value.is_object()) {
      out << key << ":\n";
      for (const auto& [sub, item] : value.items()) out << "  " << sub << ": " << inline_text(item) << '\n';
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      for (const auto& item : value) out << "  - " << inline_text(item) << '\n';
    } else {
      out << key << ": " << inline_text(value) << '\n';
    }
  }
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  emit(out, cfg, header("classify", cfg.params));
  return kOk;
}

int cmd_eigen(const RunConfig& cfg, std::ostream& out) {
  json doc = header("eigen", cfg.params);
  const Eigenpair eig = eigenvalues(cfg.params);
  doc["discriminant"] = eig.discriminant.to_string();
  doc["rational"] = eig.rational();
  doc["informational"] = eig.informational;
  doc["lambda1"] = scalar_json(eig.lambda1);
  doc["lambda2"] = scalar_json(eig.lambda2);
  emit(out, cfg, doc);
  return kOk;
}

int cmd_power(const RunConfig& cfg, std::ostream& out) {
  json doc = header("power", cfg.params);
  const Mat2 m = power(cfg.params, cfg.n);
  doc["n"] = cfg.n;
  doc["matrix"] = json::array({json::array({m.m11.to_string(), m.m12.to_string()}),
                               json::array({m.m21.to_string(), m.m22.to_string()})});
  emit(out, cfg, doc);
  return kOk;
}

int cmd_orbit(const RunConfig& cfg, std::ostream& out) {
  json doc = header("orbit", cfg.params);
  const LinearState s = linear_orbit(cfg.params, *cfg.init, cfg.n);
  doc["n"] = cfg.n;
  doc["u"] = s.u.to_string();
  doc["v"] = s.v.to_string();
  emit(out, cfg, doc);
  return kOk;
}

int cmd_zeroset(const RunConfig& cfg, std::ostream& out) {
  json doc = header("zeroset", cfg.params);
  const ZeroSetVerdict v = zero_set_member(cfg.params, *cfg.init, cfg.horizon);
  doc["trivial"] = verdict_json(v);
  emit(out, cfg, doc);
  return v.status == ZeroSetStatus::UnknownWithinHorizon ? kUnknown : kOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  json doc = header("solve", cfg.params);
  doc["n"] = cfg.n;
  const SolveResult result = solve(cfg.params, *cfg.init, cfg.n, cfg.horizon);
  if (const auto* report = std::get_if<TrivialReport>(&result)) {
    doc["trivial"] = verdict_json(report->verdict);
    emit(out, cfg, doc);
    err << "eventually trivial: x_m = y_m = 0 for m > " << report->witness << " (witness " << report->witness
        << ")\n";
    return kTrivial;
  }
  const auto& term = std::get<OrbitTerm>(result);
  const ZeroSetVerdict verdict = zero_set_member(cfg.params, *cfg.init, cfg.horizon);

  json x = value_json(cfg, term.x);
  json y = value_json(cfg, term.y);
  doc["x"] = std::move(x);
  doc["y"] = std::move(y);
  doc["trivial"] = verdict_json(verdict);

  json paths;
  paths["closed_form"] = true;
  try {
    const OrbitTerm recon = reconstruct_general(cfg.params, *cfg.init, cfg.n);
    paths["reconstruct"] = factored_equal(recon.x, term.x) && factored_equal(recon.y, term.y);
  } catch (const TrivialSolutionEncountered&) {
    paths["reconstruct"] = false;
  }
  if (cfg.n <= kIterateCheckDepth) {
    try {
      const auto direct = iterate_direct(cfg.params, *cfg.init, cfg.n, cfg.digit_budget);
      const auto& last = direct.back();
      paths["iterate"] = factored_equal(last.x, term.x) && factored_equal(last.y, term.y);
    } catch (const DigitBudgetExceeded&) {
    }
  }
  doc["paths"] = std::move(paths);
  emit(out, cfg, doc);
  return kOk;
}

int cmd_iterate(const RunConfig& cfg, std::ostream& out) {
  json doc = header("iterate", cfg.params);
  doc["n"] = cfg.n;
  json terms = json::array();
  for (const auto& t : iterate_direct(cfg.params, *cfg.init, cfg.n, cfg.digit_budget)) {
    json item;
    item["n"] = t.n;
    item["x"] = value_json(cfg, t.x);
    item["y"] = value_json(cfg, t.y);
    terms.push_back(std::move(item));
  }
  doc["terms"] = std::move(terms);
  emit(out, cfg, doc);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.horizon = cfg.horizon;
  options.digit_budget = cfg.digit_budget;
  const VerificationReport report = verify(cfg.params, *cfg.init, cfg.n, options);

  json doc = header("verify", cfg.params);
  doc["N"] = cfg.n;
  if (report.degenerate) doc["degenerate"] = true;
  if (report.verdict) doc["trivial"] = verdict_json(*report.verdict);
  json rows = json::array();
  for (const auto& row : report.rows) {
    json item;
    item["n"] = row.n;
    item["expanded"] = row.expanded;
    json paths = json::object();
    if (row.closed_form) paths["closed_form"] = *row.closed_form;
    if (row.reconstruct) paths["reconstruct"] = *row.reconstruct;
    if (row.iterate) paths["iterate"] = *row.iterate;
    item["paths"] = std::move(paths);
    rows.push_back(std::move(item));
  }
  doc["rows"] = std::move(rows);
  if (report.first_divergence) doc["first_divergence"] = *report.first_divergence;
  doc["agree"] = report.all_agree();
  emit(out, cfg, doc);
  return report.all_agree() ? kOk : kFailure;
}

CLI::App* add_subcommand(CLI::App& app, RawOptions& raw, const char* name, const char* description,
                         bool needs_init, const char* n_flag) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("-a", raw.a, "coefficient a (rational literal)")->required();
  sub->add_option("-b", raw.b, "coefficient b")->required();
  sub->add_option("-c", raw.c, "coefficient c")->required();
  sub->add_option("-d", raw.d, "coefficient d")->required();
  if (needs_init) {
    sub->add_option("--x0", raw.x0, "initial x")->required();
    sub->add_option("--y0", raw.y0, "initial y")->required();
  }
  if (n_flag != nullptr) {
    auto* opt = sub->add_option(n_flag, raw.n, "index");
    if (std::string_view(name) != "verify") opt->required();
  }
  sub->add_option("--horizon", raw.horizon, "zero-set scan horizon")->check(CLI::PositiveNumber);
  sub->add_option("--digit-budget", raw.digit_budget, "maximum decimal digits per expansion");
  sub->add_flag("--json", raw.json, "emit JSON");
  sub->add_flag("--factored", raw.factored, "print orbit values in factored form");
  return sub;
}

}  // namespace

nlohmann::ordered_json factored_to_json(const FactoredValue& value) {
  const FactoredValue v = value.normalized();
  json out;
  out["sign"] = v.sign();
  json terms = json::array();
  for (const auto& f : v.factors()) {
    const std::string base = f.base.to_string();
    terms.push_back((f.base.is_integer() ? base : "(" + base + ")") + "^" + f.exp.to_string());
  }
  out["terms"] = std::move(terms);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_budget) {
  if (!env_budget) {
    if (const char* env = std::getenv(kBudgetEnvVar)) env_budget = std::string(env);
  }

  CLI::App app{"Closed-form solver for x' = a x^2 y + b x y^2, y' = c x^2 y + d x y^2", "cubic-orbit"};
  app.require_subcommand(1);
  RawOptions raw;
  struct Entry {
    CLI::App* app;
    bool needs_init;
  };
  const std::vector<Entry> entries{
      {add_subcommand(app, raw, "classify", "print the case of the coefficient matrix", false, nullptr), false},
      {add_subcommand(app, raw, "eigen", "print the discriminant and eigenvalues", false, nullptr), false},
      {add_subcommand(app, raw, "power", "print A^n", false, "-n,-N"), false},
      {add_subcommand(app, raw, "orbit", "print (u_n, v_n) = A^n (x0, y0)", true, "-n,-N"), true},
      {add_subcommand(app, raw, "zeroset", "decide zero-set membership", true, nullptr), true},
      {add_subcommand(app, raw, "solve", "closed-form term n", true, "-n,-N"), true},
      {add_subcommand(app, raw, "iterate", "terms 0..n by direct iteration", true, "-n,-N"), true},
      {add_subcommand(app, raw, "verify", "compare all solution paths for n <= N", true, "-N,-n"), true},
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const Entry* chosen = nullptr;
  for (const auto& entry : entries) {
    if (entry.app->parsed()) chosen = &entry;
  }
  const std::string name = chosen->app->get_name();
  if (name == "verify" && chosen->app->count("-N") == 0) raw.n = 6;

  try {
    const RunConfig cfg = make_config(raw, chosen->needs_init, env_budget);
    if (name == "classify") return cmd_classify(cfg, out);
    if (name == "eigen") return cmd_eigen(cfg, out);
    if (name == "power") return cmd_power(cfg, out);
    if (name == "orbit") return cmd_orbit(cfg, out);
    if (name == "zeroset") return cmd_zeroset(cfg, out);
    if (name == "solve") return cmd_solve(cfg, out, err);
    if (name == "iterate") return cmd_iterate(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateParameters& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const TrivialSolutionEncountered& e) {
    err << "error: " << e.what() << "\nwitness: " << e.witness() << '\n';
    return kTrivial;
  } catch (const DigitBudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const UnknownWithinHorizon& e) {
    err << "error: " << e.what() << '\n';
    return kUnknown;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace cubic_orbit::cli
