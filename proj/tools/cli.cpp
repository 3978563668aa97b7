#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "twokind/bigpoly.hpp"
#include "twokind/identities.hpp"
#include "twokind/partition_count.hpp"
#include "twokind/qbinomial.hpp"

namespace twokind::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  bool format_given = false;
  bool quiet = false;
};

// Parameters shared by count, enumerate and table.
struct CountParams {
  std::string function;
  std::int64_t r = 1;
  std::int64_t n1 = 0, n2 = 0, k1 = 0, k2 = 0;
  std::int64_t N = 0, k = 0;
  std::int64_t n = 0;
  std::map<std::string, CLI::Option*> opts;

  bool given(const std::string& name) const {
    auto it = opts.find(name);
    return it != opts.end() && it->second->count() > 0;
  }
};

void add_param_options(CLI::App& cmd, CountParams& params, bool with_n) {
  params.opts["r"] = cmd.add_option("--r", params.r, "Divisibility step r");
  params.opts["n1"] = cmd.add_option("--n1", params.n1, "First-kind bound N1");
  params.opts["n2"] = cmd.add_option("--n2", params.n2, "Second-kind bound N2");
  params.opts["k1"] = cmd.add_option("--k1", params.k1, "First-kind part count");
  params.opts["k2"] = cmd.add_option("--k2", params.k2, "Second-kind part count");
  params.opts["N"] = cmd.add_option("--N", params.N, "Largest part (p)");
  params.opts["k"] = cmd.add_option("--k", params.k, "Number of parts (p)");
  if (with_n) params.opts["n"] = cmd.add_option("--n", params.n, "Target n");
}

// Names of the flags each function reads, excluding --n.
std::vector<std::string> required_flags(const std::string& function) {
  if (function == "p") return {"N", "k"};
  if (function == "partition") return {};
  return {"n1", "n2", "k1", "k2"};
}

void validate(const CountParams& params, bool with_n) {
  auto flags = required_flags(params.function);
  if (with_n) flags.push_back("n");
  for (const auto& flag : flags) {
    if (!params.given(flag)) {
      throw UsageError("missing --" + flag + " for " + params.function);
    }
  }
  for (const auto& [name, opt] : params.opts) {
    if (opt->count() == 0 || name == "r" || name == "n") continue;
    if (std::find(flags.begin(), flags.end(), name) == flags.end()) {
      throw UsageError("--" + name + " does not apply to " + params.function);
    }
  }
  if (params.given("r") && params.function != "pbar" &&
      params.function != "qbar") {
    throw UsageError("--r does not apply to " + params.function);
  }
  if (params.r < 1) throw UsageError("--r must be >= 1");
  for (auto v : {params.n1, params.n2, params.k1, params.k2, params.N, params.k,
                 params.n}) {
    if (v < 0) throw UsageError("parameters must be nonnegative");
  }
}

TwoKindQuery to_query(const CountParams& params, std::int64_t n) {
  if (params.function == "p") return {1, 0, params.N, 0, params.k, n};
  if (params.function == "partition") return {1, 0, n, 0, n, n};
  return {params.r, params.n1, params.n2, params.k1, params.k2, n};
}

json params_json(const CountParams& params, std::optional<std::int64_t> n) {
  json out = json::object();
  auto put = [&out](const char* key, std::int64_t v) {
    out[key] = std::to_string(v);
  };
  if (params.function == "p") {
    put("N", params.N);
    put("k", params.k);
  } else if (params.function == "pbar" || params.function == "qbar") {
    put("r", params.r);
    put("N1", params.n1);
    put("N2", params.n2);
    put("k1", params.k1);
    put("k2", params.k2);
  }
  if (n) put("n", *n);
  return out;
}

BigInt count_by(const CountParams& params, const std::string& method,
                std::int64_t n) {
  const std::string& f = params.function;
  if (method == "enumerate") {
    const TwoKindQuery q = to_query(params, n);
    return f == "qbar" ? BigInt(qbar_enumerate_count(q))
                       : BigInt(pbar_enumerate_count(q));
  }
  if (method == "convolution") return pbar_convolution(to_query(params, n));
  if (f == "p") return p(params.N, params.k, n);
  if (f == "partition") return partition_p(n);
  if (f == "pbar") return pbar_genfun(to_query(params, n));
  return qbar_genfun(to_query(params, n));
}

std::vector<std::string> methods_for(const std::string& function) {
  if (function == "pbar") return {"genfun", "convolution", "enumerate"};
  return {"genfun", "enumerate"};
}

void reject_csv(const Globals& g, const std::string& command) {
  if (g.format == "csv") {
    throw UsageError("--format csv is only valid for table, not " + command);
  }
}

int cmd_gauss(const Globals& g, std::int64_t top, std::int64_t bottom,
              std::int64_t step, std::ostream& out) {
  reject_csv(g, "gauss");
  if (top < 0) throw UsageError("--top must be nonnegative");
  if (step < 1) throw UsageError("--step must be >= 1");
  const IntPolynomial poly = gaussian({top, bottom, step});
  if (g.format == "json") {
    out << json{{"top", std::to_string(top)},
                {"bottom", std::to_string(bottom)},
                {"step", std::to_string(step)},
                {"polynomial", to_string(poly)},
                {"coefficients", coefficient_strings(poly)}}
               .dump()
        << '\n';
  } else {
    out << to_string(poly) << '\n';
  }
  return kExitOk;
}

int cmd_count(const Globals& g, const CountParams& params,
              const std::string& method, std::ostream& out,
              std::ostream& err) {
  reject_csv(g, "count");
  validate(params, true);
  const auto available = methods_for(params.function);
  std::vector<std::string> methods;
  if (method == "all") {
    methods = available;
  } else if (std::find(available.begin(), available.end(), method) !=
             available.end()) {
    methods = {method};
  } else {
    throw UsageError("method " + method + " is not available for " +
                     params.function);
  }

  std::vector<BigInt> counts;
  for (const auto& m : methods) counts.push_back(count_by(params, m, params.n));
  const bool agree = std::all_of(counts.begin(), counts.end(),
                                 [&](const BigInt& c) { return c == counts[0]; });

  if (g.format == "json") {
    json doc{{"function", params.function},
             {"params", params_json(params, params.n)},
             {"method", method}};
    if (method == "all") {
      json by_method = json::object();
      for (std::size_t i = 0; i < methods.size(); ++i) {
        by_method[methods[i]] = counts[i].get_str();
      }
      doc["counts"] = by_method;
      doc["agree"] = agree;
    } else {
      doc["count"] = counts[0].get_str();
    }
    out << doc.dump() << '\n';
  } else if (method == "all") {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      out << methods[i] << ' ' << counts[i].get_str() << '\n';
    }
  } else {
    out << counts[0].get_str() << '\n';
  }

  if (!agree) {
    if (!g.quiet) err << "error: counting routes disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_enumerate(const Globals& g, const CountParams& params,
                  std::ostream& out) {
  reject_csv(g, "enumerate");
  validate(params, true);
  const TwoKindQuery q = to_query(params, params.n);
  const auto partitions =
      params.function == "qbar" ? qbar_enumerate(q) : pbar_enumerate(q);
  if (g.format == "json") {
    json list = json::array();
    auto strings = [](const std::vector<std::int64_t>& parts) {
      std::vector<std::string> s;
      for (auto v : parts) s.push_back(std::to_string(v));
      return s;
    };
    for (const auto& part : partitions) {
      list.push_back({{"first", strings(part.first_kind)},
                      {"second", strings(part.second_kind)}});
    }
    out << json{{"function", params.function},
                {"params", params_json(params, params.n)},
                {"count", std::to_string(partitions.size())},
                {"partitions", list}}
               .dump()
        << '\n';
  } else {
    for (const auto& part : partitions) out << to_string(part) << '\n';
  }
  return kExitOk;
}

void print_report(const VerificationReport& report, const Globals& g,
                  std::ostream& out) {
  out << report.identity_id << ": " << (report.passed() ? "PASS" : "FAIL")
      << " (checked " << report.checked << ", failures "
      << report.failures.size() << "; " << report.grid << ")\n";
  if (g.quiet) return;
  for (const auto& failure : report.failures) {
    out << "  ";
    for (const auto& [name, value] : failure.params) {
      out << name << '=' << value << ' ';
    }
    out << "lhs=" << failure.lhs << " rhs=" << failure.rhs << '\n';
  }
}

int cmd_verify(const Globals& g, const std::string& id,
               const GridOverrides& overrides, bool serial,
               std::ostream& out) {
  reject_csv(g, "verify");
  const auto& ids = identity_ids();
  std::vector<std::string> selected;
  if (id == "all") {
    selected = ids;
  } else if (std::find(ids.begin(), ids.end(), id) != ids.end()) {
    selected = {id};
  } else {
    throw UsageError("unknown identity id: " + id);
  }
  for (auto v : {overrides.N_max, overrides.k_max, overrides.m_max,
                 overrides.n_max, overrides.param_max}) {
    if (v < -1) throw UsageError("grid bounds must be nonnegative");
  }
  if (overrides.r_max == 0 || overrides.r_max < -1) {
    throw UsageError("--r-max must be >= 1");
  }

  const Execution exec = serial ? Execution::serial : Execution::parallel;
  bool all_passed = true;
  json reports = json::array();
  for (const auto& each : selected) {
    const VerificationReport report = run_verifier(each, overrides, exec);
    all_passed = all_passed && report.passed();
    if (g.format == "json") {
      reports.push_back(to_json(report));
    } else {
      print_report(report, g, out);
    }
  }
  if (g.format == "json") {
    out << (id == "all" ? reports : reports[0]).dump() << '\n';
  }
  return all_passed ? kExitOk : kExitFailure;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  static const std::regex pattern(R"((\d+)\.\.(\d+))");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw UsageError("--n expects an inclusive range A..B, got '" + text + "'");
  }
  const std::int64_t lo = std::stoll(match[1]);
  const std::int64_t hi = std::stoll(match[2]);
  if (hi < lo) throw UsageError("empty range " + text);
  return {lo, hi};
}

int cmd_table(const Globals& g, const CountParams& params,
              const std::string& range, std::ostream& out) {
  validate(params, false);
  const auto [lo, hi] = parse_range(range);
  const std::string format = g.format_given ? g.format : "csv";

  std::vector<std::pair<std::int64_t, BigInt>> rows;
  for (std::int64_t n = lo; n <= hi; ++n) {
    rows.emplace_back(n, count_by(params, "genfun", n));
  }

  if (format == "json") {
    json list = json::array();
    for (const auto& [n, c] : rows) {
      list.push_back({{"n", std::to_string(n)}, {"count", c.get_str()}});
    }
    out << json{{"function", params.function},
                {"params", params_json(params, std::nullopt)},
                {"rows", list}}
               .dump()
        << '\n';
  } else {
    const char sep = format == "csv" ? ',' : '\t';
    out << 'n' << sep << "count\n";
    for (const auto& [n, c] : rows) out << n << sep << c.get_str() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Restricted two-kind partition counts and identity checks",
               "twokind"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* format_opt = app.add_option("--format", g.format, "Output format")
                         ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--quiet", g.quiet, "Suppress detail lines and diagnostics");

  auto* gauss = app.add_subcommand("gauss", "Print the Gaussian polynomial [top, bottom] at q^step");
  std::int64_t top = 0, bottom = 0, step = 1;
  gauss->add_option("--top", top, "Upper index")->required();
  gauss->add_option("--bottom", bottom, "Lower index")->required();
  gauss->add_option("--step", step, "Evaluate at q^step");

  const std::vector<std::string> count_functions = {"p", "pbar", "qbar",
                                                    "partition"};
  auto* count = app.add_subcommand("count", "Count partitions");
  CountParams count_params;
  std::string method = "genfun";
  count->add_option("function", count_params.function, "p | pbar | qbar | partition")
      ->required()
      ->check(CLI::IsMember(count_functions));
  add_param_options(*count, count_params, true);
  count->add_option("--method", method, "genfun | convolution | enumerate | all")
      ->check(CLI::IsMember({"genfun", "convolution", "enumerate", "all"}));

  auto* enumerate = app.add_subcommand("enumerate", "List partitions in canonical order");
  CountParams enum_params;
  enumerate->add_option("function", enum_params.function, "pbar | qbar")
      ->required()
      ->check(CLI::IsMember({"pbar", "qbar"}));
  add_param_options(*enumerate, enum_params, true);

  auto* verify = app.add_subcommand("verify", "Verify an identity over a parameter grid");
  std::string identity;
  GridOverrides overrides;
  bool serial = false;
  verify->add_option("identity", identity, "Identity id or 'all'")->required();
  verify->add_option("--m-max", overrides.m_max, "Largest m (eq2, eq3)");
  verify->add_option("--n-max", overrides.n_max, "Largest n (eq2, eq3, cor3.2)");
  verify->add_option("--N-max", overrides.N_max, "Largest N (thm3.1, thm3.3)");
  verify->add_option("--k-max", overrides.k_max, "Largest k (thm3.1, thm3.3)");
  verify->add_option("--r-max", overrides.r_max, "Largest r (thm2.x)");
  verify->add_option("--param-max", overrides.param_max,
                     "Largest N1, N2, k1, k2 (thm2.x)");
  verify->add_flag("--serial", serial, "Use the serial reference sweep");

  auto* table = app.add_subcommand("table", "Tabulate a count over a range of n");
  CountParams table_params;
  std::string range;
  table->add_option("function", table_params.function, "p | pbar | qbar | partition")
      ->required()
      ->check(CLI::IsMember(count_functions));
  add_param_options(*table, table_params, false);
  table->add_option("--n", range, "Inclusive range A..B")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  g.format_given = format_opt->count() > 0;

  try {
    if (*gauss) return cmd_gauss(g, top, bottom, step, out);
    if (*count) return cmd_count(g, count_params, method, out, err);
    if (*enumerate) return cmd_enumerate(g, enum_params, out);
    if (*verify) return cmd_verify(g, identity, overrides, serial, out);
    if (*table) return cmd_table(g, table_params, range, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace twokind::cli
