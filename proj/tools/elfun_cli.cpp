// elfun: command-line front end to the elliptic function library.

#include <fmt/core.h>
#include <fmt/os.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "elfun/demos.hpp"
#include "elfun/numeric.hpp"
#include "elfun/oracle.hpp"
#include "elfun/registry.hpp"
#include "elfun/selftest.hpp"

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

double parse_number(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') throw UsageError("not a number: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

const elfun::FunctionDescriptor& find(const std::string& name, std::optional<int> arity) {
  try {
    return elfun::lookup(name, arity);
  } catch (const elfun::NotFoundError& e) {
    std::string msg = e.what();
    if (!e.near_matches.empty()) {
      msg += "; did you mean:";
      for (const auto& m : e.near_matches) msg += " " + m;
    }
    throw UsageError(msg);
  }
}

// Column names from argument roles; repeated roles get an index.
std::vector<std::string> arg_columns(const elfun::FunctionDescriptor& f) {
  std::vector<std::string> cols;
  for (std::size_t i = 0; i < f.arg_roles.size(); ++i) {
    const std::string role(elfun::to_string(f.arg_roles[i]));
    int same = 0;
    for (auto r : f.arg_roles) same += r == f.arg_roles[i];
    cols.push_back(same > 1 ? role + std::to_string(i + 1) : role);
  }
  return cols;
}

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// ---- eval -------------------------------------------------------------------

struct EvalOptions {
  std::string name;
  std::vector<std::string> args;
  bool json = false;
  bool csv = false;
};

int cmd_eval(const EvalOptions& o) {
  const auto& f = find(o.name, static_cast<int>(o.args.size()));
  // Each argument is a number or a comma-separated list; lists broadcast.
  std::vector<elfun::Tensor> tensors;
  for (const auto& a : o.args) {
    std::vector<double> values;
    for (const auto& part : split(a, ',')) values.push_back(parse_number(part));
    tensors.push_back(values.size() == 1 ? elfun::Tensor::scalar(values[0])
                                         : elfun::Tensor::vector(std::move(values)));
  }
  elfun::Tensor result;
  try {
    result = elfun::broadcast_apply(f, tensors);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (o.json) {
    nlohmann::json j;
    j["function"] = f.name;
    j["arity"] = f.arity;
    auto to_json = [](double v) -> nlohmann::json {
      if (std::isfinite(v)) return v;
      return num(v);
    };
    nlohmann::json args = nlohmann::json::array();
    for (const auto& t : tensors) {
      nlohmann::json col = nlohmann::json::array();
      for (double v : t.data) col.push_back(to_json(v));
      args.push_back(t.is_scalar() ? col[0] : col);
    }
    j["args"] = args;
    nlohmann::json values = nlohmann::json::array();
    for (double v : result.data) values.push_back(to_json(v));
    j["value"] = result.is_scalar() ? values[0] : values;
    fmt::print("{}\n", j.dump());
    return 0;
  }
  if (o.csv) {
    const auto cols = arg_columns(f);
    std::string out;
    for (const auto& c : cols) out += c + ",";
    out += "value\n";
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (const auto& t : tensors) out += num(t.is_scalar() ? t.data[0] : t.data[i]) + ",";
      out += num(result.data[i]) + "\n";
    }
    fmt::print("{}", out);
    return 0;
  }
  for (double v : result.data) fmt::print("{}\n", num(v));
  return 0;
}

// ---- table ------------------------------------------------------------------

struct TableOptions {
  std::string name;
  std::vector<std::string> ranges;
  std::string out;
};

// "a:b:n" gives n equally spaced points; "a" gives one point.
std::vector<double> parse_range(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 1) return {parse_number(parts[0])};
  if (parts.size() != 3) throw UsageError("range must be a:b:n, got '" + spec + "'");
  const double a = parse_number(parts[0]);
  const double b = parse_number(parts[1]);
  const double n = parse_number(parts[2]);
  if (!(n >= 1) || n != std::floor(n) || n > 1e7)
    throw UsageError("range count must be a positive integer, got '" + parts[2] + "'");
  const int count = static_cast<int>(n);
  std::vector<double> pts(count);
  for (int i = 0; i < count; ++i)
    pts[i] = count == 1 ? a : i == count - 1 ? b : a + (b - a) * i / (count - 1);
  return pts;
}

int cmd_table(const TableOptions& o) {
  const auto& f = find(o.name, static_cast<int>(o.ranges.size()));
  std::vector<std::vector<double>> axes;
  for (const auto& r : o.ranges) axes.push_back(parse_range(r));

  std::string text;
  for (const auto& c : arg_columns(f)) text += c + ",";
  text += "value\n";
  // Cartesian product, last argument varying fastest.
  std::vector<std::size_t> idx(axes.size(), 0);
  std::vector<double> args(axes.size());
  for (;;) {
    for (std::size_t j = 0; j < axes.size(); ++j) {
      args[j] = axes[j][idx[j]];
      text += num(args[j]) + ",";
    }
    text += num(f(args)) + "\n";
    std::size_t j = axes.size();
    while (j > 0 && ++idx[j - 1] == axes[j - 1].size()) idx[--j] = 0;
    if (j == 0) break;
  }
  emit(o.out, text);
  return 0;
}

// ---- selftest ---------------------------------------------------------------

struct SelftestOptions {
  std::uint64_t seed = 20180101;
  std::string report;
  std::vector<int> only;
};

int cmd_selftest(const SelftestOptions& o) {
  elfun::SelftestReport report;
  std::vector<int> ids = o.only;
  if (ids.empty())
    for (int i = 1; i <= elfun::kCriterionCount; ++i) ids.push_back(i);
  for (int id : ids) {
    if (id < 1 || id > elfun::kCriterionCount)
      throw UsageError(fmt::format("criterion must be 1..{}", elfun::kCriterionCount));
    const auto r = elfun::run_criterion(id, o.seed, &report);
    fmt::print("[{}] {:2d} {} ({:.2f} s): {}\n", r.pass ? "PASS" : "FAIL", r.id, r.title,
               r.seconds, r.detail);
    std::fflush(stdout);
    report.criteria.push_back(r);
  }
  if (!o.report.empty()) {
    if (report.error_rows.empty()) elfun::run_criterion(4, o.seed, &report);
    emit(o.report, elfun::oracle::report_csv(report.error_rows));
  }
  const bool ok = report.all_pass();
  fmt::print("{}\n", ok ? "all checks passed" : "some checks FAILED");
  return ok ? 0 : 1;
}

// ---- demos ------------------------------------------------------------------

std::vector<double> uniform_grid(int steps) {
  std::vector<double> s(steps + 1);
  for (int i = 0; i <= steps; ++i) s[i] = static_cast<double>(i) / steps;
  return s;
}

std::string curve_csv(const std::vector<elfun::CurveSample>& samples, std::optional<double> k) {
  std::string text;
  for (const auto& p : samples) {
    if (k) text += num(*k) + ",";
    text += num(p.s) + "," + num(p.x) + "," + num(p.y) + "," + num(p.phi) + "\n";
  }
  return text;
}

struct ElasticaOptions {
  elfun::ElasticaConfig cfg;
  int steps = 100;
  std::string out;
};

int cmd_elastica(ElasticaOptions o) {
  o.cfg.s_grid = uniform_grid(o.steps);
  if (const auto why = o.cfg.validate(); !why.empty()) throw UsageError(why);
  std::string text = "k,s,x,y,phi\n";
  for (const auto& c : elfun::elastica_curve(o.cfg)) text += curve_csv(c.samples, c.k);
  emit(o.out, text);
  return 0;
}

struct CantileverOptions {
  elfun::CantileverConfig cfg;
  std::optional<double> psi1_deg;
  int steps = 100;
  std::string out;
};

int cmd_cantilever(CantileverOptions o) {
  if (o.psi1_deg) o.cfg.psi1 = *o.psi1_deg * elfun::kPi / 180;
  o.cfg.s_grid = uniform_grid(o.steps);
  if (const auto why = o.cfg.validate(); !why.empty()) throw UsageError(why);
  const auto r = elfun::cantilever_solve(o.cfg);
  // Summary goes to stderr when the curve itself is written to stdout.
  std::FILE* summary = o.out == "-" ? stderr : stdout;
  fmt::print(summary, "C = {}\nalpha = {}\nL = {}\nX = {}\nY = {}\n", num(r.C), num(r.alpha),
             num(r.L), num(r.samples.back().x), num(r.samples.back().y));
  if (!r.diagnostic.empty()) fmt::print(stderr, "warning: {}\n", r.diagnostic);
  if (!o.out.empty()) emit(o.out == "-" ? "" : o.out, "s,x,y,phi\n" + curve_csv(r.samples, {}));
  return 0;
}

// ---- list -------------------------------------------------------------------

int cmd_list(bool csv) {
  if (csv) {
    fmt::print("{}", elfun::registry_manifest_csv());
    return 0;
  }
  for (const auto& f : elfun::registry()) {
    std::string roles;
    for (auto r : f.arg_roles) roles += (roles.empty() ? "" : ", ") + std::string(to_string(r));
    fmt::print("{:<12} ({})  {}\n", f.name, roles, f.domain_note);
  }
  return 0;
}

// Reorders `eval` tokens to "eval [flags] -- name args..." so that values such
// as -inf or -1e3 are never taken for options.
std::vector<std::string> normalize_eval(int argc, char** argv) {
  std::vector<std::string> out(argv, argv + argc);
  if (argc < 2 || out[1] != "eval") return out;
  std::vector<std::string> flags, rest;
  for (int i = 2; i < argc; ++i) {
    const std::string t = argv[i];
    if (t == "--") continue;
    const bool flag = t == "--json" || t == "--csv" || t == "-h" || t == "--help";
    (flag ? flags : rest).push_back(t);
  }
  out.resize(2);
  out.insert(out.end(), flags.begin(), flags.end());
  out.push_back("--");
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real elliptic integrals, Jacobian elliptic functions and theta functions"};
  app.name("elfun");
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one function; list arguments broadcast");
  eval_cmd->add_option("name", eval.name, "Function name or alias")->required();
  eval_cmd->add_option("args", eval.args, "Numeric arguments (a or a,b,c)");
  auto* json_flag = eval_cmd->add_flag("--json", eval.json, "Print a JSON object");
  eval_cmd->add_flag("--csv", eval.csv, "Print CSV with a header row")->excludes(json_flag);

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Tabulate a function on a grid as CSV");
  table_cmd->add_option("name", table.name, "Function name or alias")->required();
  table_cmd->add_option("--range,-r", table.ranges, "Per-argument grid a:b:n (or a single value)")
      ->required();
  table_cmd->add_option("--out,-o", table.out, "Output file (default stdout)");

  SelftestOptions self;
  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance checks");
  self_cmd->add_option("--seed", self.seed, "Random seed")->capture_default_str();
  self_cmd->add_option("--report", self.report, "Write the accuracy table as CSV");
  self_cmd->add_option("--criterion,-c", self.only, "Run only these checks (1..10)");

  ElasticaOptions el;
  auto* el_cmd = app.add_subcommand("elastica", "Euler elastica curves as CSV");
  el_cmd->add_option("--omega", el.cfg.omega, "Load parameter")->capture_default_str();
  el_cmd->add_option("--C", el.cfg.C, "Integration constant")->capture_default_str();
  el_cmd->add_option("--k", el.cfg.k_list, "Moduli in (0, 1)");
  el_cmd->add_option("--steps", el.steps, "Arclength steps on [0, 1]")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  el_cmd->add_option("--out,-o", el.out, "Output file (default stdout)");

  CantileverOptions cl;
  auto* cl_cmd = app.add_subcommand("cantilever", "Cantilever under a follower force");
  auto* rad = cl_cmd->add_option("--psi1", cl.cfg.psi1, "End angle in radians");
  cl_cmd->add_option("--psi1-deg", cl.psi1_deg, "End angle in degrees")->excludes(rad);
  cl_cmd->add_option("--lambda", cl.cfg.lambda, "Slenderness")->capture_default_str();
  cl_cmd->add_option("--nu", cl.cfg.nu, "Stiffness ratio in [-1, 1]")->capture_default_str();
  cl_cmd->add_option("--omega", cl.cfg.omega, "Load factor")->capture_default_str();
  cl_cmd->add_option("--steps", cl.steps, "Arclength steps on [0, 1]")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  cl_cmd->add_option("--out,-o", cl.out, "Write the curve as CSV ('-' for stdout)");

  bool list_csv = false;
  auto* list_cmd = app.add_subcommand("list", "List registered functions");
  list_cmd->add_flag("--csv", list_csv, "Print the registry manifest");

  try {
    std::vector<std::string> tokens = normalize_eval(argc, argv);
    std::reverse(tokens.begin(), tokens.end());
    tokens.pop_back();  // program name
    app.parse(tokens);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*eval_cmd) return cmd_eval(eval);
    if (*table_cmd) return cmd_table(table);
    if (*self_cmd) return cmd_selftest(self);
    if (*el_cmd) return cmd_elastica(el);
    if (*cl_cmd) return cmd_cantilever(cl);
    if (*list_cmd) return cmd_list(list_csv);
  } catch (const UsageError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsageError;
  }
  return kUsageError;
}
