#include "solvpot/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "solvpot/bose.hpp"
#include "solvpot/coordmap.hpp"
#include "solvpot/params.hpp"
#include "solvpot/spec_io.hpp"
#include "solvpot/verify.hpp"

namespace solvpot::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMaxGridPoints = 10'000'000;

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::vector<double> parse_range(const std::string& text) {
  double lo, hi, step;
  char tail;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &tail) != 3)
    throw InvalidSpec("range must look like start:end:step, got '" + text + "'");
  if (!(step > 0.0) || !(hi >= lo)) throw InvalidSpec("range needs end >= start and step > 0");
  const double count = std::round((hi - lo) / step);
  if (count + 1 > kMaxGridPoints) throw InvalidSpec("range has too many points");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = lo + static_cast<double>(i) * step;
  return out;
}

struct SolveArg {
  double x0, y0;
  int branch;
};

using MapArg = std::variant<ClosedFormMap, SolveArg>;

std::map<std::string, double> parse_kv(const std::string& body) {
  std::map<std::string, double> kv;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidSpec("map parameter '" + item + "' is not name=value");
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      kv[item.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw InvalidSpec("map parameter '" + item + "' has a non-numeric value");
    }
  }
  return kv;
}

double take(std::map<std::string, double>& kv, const std::string& name, double fallback) {
  auto it = kv.find(name);
  if (it == kv.end()) return fallback;
  const double v = it->second;
  kv.erase(it);
  return v;
}

MapArg parse_map(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "solve") {
    double x0, y0, branch;
    char tail;
    if (std::sscanf(body.c_str(), "%lf,%lf,%lf%c", &x0, &y0, &branch, &tail) != 3 ||
        (branch != 1.0 && branch != -1.0))
      throw InvalidSpec("solve map must look like solve:x0,y0,branch with branch = 1 or -1");
    return SolveArg{x0, y0, static_cast<int>(branch)};
  }
  auto kv = parse_kv(body);
  ClosedFormMap m;
  if (kind == "cosh2") {
    m = Cosh2Map{take(kv, "alpha", 1.0)};
  } else if (kind == "expshift") {
    ExpShiftMap e;
    e.c = take(kv, "C", take(kv, "c", 1.0));
    e.kappa = take(kv, "kappa", 0.25);
    const double sign = take(kv, "sign", 1.0);
    if (sign != 1.0 && sign != -1.0) throw InvalidSpec("expshift sign must be 1 or -1");
    e.sign = static_cast<int>(sign);
    m = e;
  } else if (kind == "logistic") {
    m = LogisticMap{take(kv, "y0", 0.5)};
  } else {
    throw InvalidSpec("unknown map kind '" + kind + "' (cosh2, expshift, logistic, solve)");
  }
  if (!kv.empty()) throw InvalidSpec("unknown map parameter '" + kv.begin()->first + "'");
  closed_form_map(m, 0.0);  // validates parameters
  return m;
}

/// Point evaluation of either map flavour over a fixed x grid. Solved maps are
/// integrated from x0 towards both ends of the grid; points not reached give nullopt.
class GridMap {
 public:
  GridMap(const FamilySpec& spec, const MapArg& arg, const std::vector<double>& xs) : arg_(arg) {
    if (const auto* s = std::get_if<SolveArg>(&arg)) {
      if (xs.back() > s->x0) right_ = solve_map(spec, s->x0, s->y0, s->branch, xs.back());
      if (xs.front() < s->x0) left_ = solve_map(spec, s->x0, s->y0, s->branch, xs.front());
      if (!right_ && !left_) right_ = solve_map(spec, s->x0, s->y0, s->branch, s->x0);
    }
  }

  std::optional<MapPoint> operator()(double x) const {
    if (const auto* m = std::get_if<ClosedFormMap>(&arg_)) return closed_form_map(*m, x);
    for (const auto* map : {&right_, &left_})
      if (*map && (*map)->contains(x)) return map_eval(**map, x);
    return std::nullopt;
  }

 private:
  MapArg arg_;
  std::optional<CoordinateMap> right_, left_;
};

double safe_potential(const FamilySpec& spec, double y) {
  try {
    return potential_closed_form(spec, y);
  } catch (const NearPole&) {
    return kNaN;
  }
}

double safe_j_residual(const FamilySpec& spec, double k, double y, double v) {
  if (std::isnan(v)) return kNaN;
  try {
    return std::abs(j_value(spec, k, y) - (k * k - v));
  } catch (const NearPole&) {
    return kNaN;
  }
}

struct Options {
  std::string spec_path, map, x_range, y_range, out_path, suite = "all", klass, template_kind;
  std::optional<double> k;
  double heun_a = 2.0;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

FamilySpec load_spec(const Options& o) {
  if (o.spec_path.empty()) throw InvalidSpec("--spec is required");
  return read_spec_file(o.spec_path);
}

int do_eval(const Options& o, std::ostream& out) {
  const FamilySpec spec = load_spec(o);
  const bool with_residual = o.k.has_value();
  const double k = o.k.value_or(0.0);
  if (!o.map.empty()) {
    if (o.x_range.empty()) throw InvalidSpec("eval with --map needs --x start:end:step");
    const auto xs = parse_range(o.x_range);
    const GridMap map(spec, parse_map(o.map), xs);
    out << "x,y,V" << (with_residual ? ",residual" : "") << '\n';
    for (double x : xs) {
      const auto m = map(x);
      const double y = m ? m->y : kNaN;
      const double v = m ? safe_potential(spec, y) : kNaN;
      out << fmt(x) << ',' << fmt(y) << ',' << fmt(v);
      if (with_residual) out << ',' << fmt(m ? safe_j_residual(spec, k, y, v) : kNaN);
      out << '\n';
    }
    return kExitOk;
  }
  if (o.y_range.empty()) throw InvalidSpec("eval needs --map with --x, or --y");
  out << "y,V" << (with_residual ? ",residual" : "") << '\n';
  for (double y : parse_range(o.y_range)) {
    const double v = safe_potential(spec, y);
    out << fmt(y) << ',' << fmt(v);
    if (with_residual) out << ',' << fmt(safe_j_residual(spec, k, y, v));
    out << '\n';
  }
  return kExitOk;
}

int do_map(const Options& o, std::ostream& out) {
  const FamilySpec spec = load_spec(o);
  if (o.map.empty() || o.x_range.empty()) throw InvalidSpec("map needs --map and --x start:end:step");
  const auto xs = parse_range(o.x_range);
  const GridMap map(spec, parse_map(o.map), xs);
  out << "x,y,dy\n";
  for (double x : xs) {
    const auto m = map(x);
    out << fmt(x) << ',' << fmt(m ? m->y : kNaN) << ',' << fmt(m ? m->dy : kNaN) << '\n';
  }
  return kExitOk;
}

const std::vector<double> kSweepK = {0.0, 0.7, 1.0, 2.5};

void run_suite(const FamilySpec& spec, const Options& o, std::mt19937_64& rng, const std::string& note,
               std::vector<VerificationReport>& reports) {
  const std::string& suite = o.suite;
  const auto ys = regular_samples(spec, -3.0, 3.0, 200, rng);
  auto tag = [&](VerificationReport r) {
    if (!note.empty()) r.notes = r.notes.empty() ? note : note + "; " + r.notes;
    reports.push_back(std::move(r));
  };
  if (suite == "all" || suite == "decomposition") tag(check_decomposition(spec, ys, kSweepK, o.tolerance));
  if (suite == "all" || suite == "master") tag(check_master_vs_closed(spec, ys, o.tolerance));
}

int do_verify(const Options& o, std::ostream& out) {
  if (o.suite != "all" && o.suite != "decomposition" && o.suite != "master")
    throw InvalidSpec("--suite must be all, decomposition or master");
  if (o.spec_path.empty() && o.random == 0) throw InvalidSpec("verify needs --spec or --random N");
  std::vector<VerificationReport> reports;
  std::mt19937_64 rng(o.seed);
  if (!o.spec_path.empty()) run_suite(load_spec(o), o, rng, "seed=" + std::to_string(o.seed), reports);
  for (FamilyKind kind : kAllKinds)
    for (std::size_t i = 0; i < o.random; ++i)
      run_suite(random_spec(kind, rng), o, rng,
                "seed=" + std::to_string(o.seed) + " draw=" + std::to_string(i), reports);
  bool ok = true;
  for (const auto& r : reports) {
    out << to_json_line(r) << '\n';
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

std::string complex_json(cplx z) { return "[" + fmt(z.real()) + "," + fmt(z.imag()) + "]"; }

std::string poly_json(const ComplexPolynomial& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? "," : "") + complex_json(p.coeffs()[i]);
  return s + "]";
}

int do_params(const Options& o, std::ostream& out) {
  const FamilySpec spec = load_spec(o);
  const std::string klass = o.klass.empty() ? "canonical" : o.klass;
  const double k = o.k.value_or(0.0);
  if (klass == "iwata1" || klass == "iwata2" || klass == "iwata3") {
    if (spec.kind() != kind_from_name(klass))
      throw InvalidSpec("--class " + klass + " does not match spec kind " + std::string(kind_name(spec.kind())));
    if (!o.k) throw InvalidSpec("--k is required for hypergeometric parameters");
    const auto t = hypergeometric_params(spec, k);
    out << "{\"a\":" << complex_json(t.a) << ",\"b\":" << complex_json(t.b) << ",\"c\":" << complex_json(t.c)
        << "}\n";
  } else if (klass == "natanzon") {
    out << spec_to_json(embed_iwata_to_natanzon(spec)) << '\n';
  } else if (klass == "heun") {
    const FamilySpec nat = spec.kind() == FamilyKind::Natanzon ? spec : embed_iwata_to_natanzon(spec);
    out << spec_to_json(embed_natanzon_to_heun(nat, o.heun_a)) << '\n';
  } else if (klass == "canonical") {
    if (!o.k) throw InvalidSpec("--k is required for the canonical equation");
    const auto eq = canonical_equation(spec, k);
    out << "{\"a\":" << poly_json(eq.a) << ",\"b\":" << poly_json(eq.b) << ",\"c\":" << poly_json(eq.c) << "}\n";
  } else {
    throw InvalidSpec("--class must be iwata1, iwata2, iwata3, natanzon, heun or canonical");
  }
  return kExitOk;
}

int do_families(const Options& o, std::ostream& out) {
  if (!o.template_kind.empty()) {
    out << spec_to_json(template_spec(kind_from_name(o.template_kind))) << '\n';
    return kExitOk;
  }
  for (FamilyKind kind : kAllKinds) {
    out << kind_name(kind) << ':';
    for (auto name : parameter_names(kind)) out << ' ' << name;
    out << '\n';
  }
  return kExitOk;
}

// "--x -3:3:0.01" would be read as a short flag; glue such values to their option.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued = {"--x", "--y", "--map", "--k", "--seed"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i + 1 < args.size() && std::find(valued.begin(), valued.end(), args[i]) != valued.end() &&
        args[i + 1].size() > 1 && args[i + 1][0] == '-' && args[i + 1][1] != '-') {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exactly solvable potentials from Heun-class equations", "solvpot"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate V on a y grid or along a coordinate map (CSV)");
  auto* map = app.add_subcommand("map", "Sample a coordinate map y(x) (CSV x,y,dy)");
  auto* verify = app.add_subcommand("verify", "Run verification checks (JSON lines)");
  auto* params = app.add_subcommand("params", "Parameter maps: hypergeometric triples, embeddings, canonical equations");
  auto* families = app.add_subcommand("families", "List family kinds or print a template spec");

  for (auto* sub : {eval, map, verify, params}) sub->add_option("--spec", o.spec_path, "FamilySpec JSON file");
  for (auto* sub : {eval, map}) {
    sub->add_option("--map", o.map, "cosh2:alpha=..|expshift:C=..,kappa=..,sign=..|logistic:y0=..|solve:x0,y0,branch");
    sub->add_option("--x", o.x_range, "x grid start:end:step");
  }
  eval->add_option("--y", o.y_range, "y grid start:end:step");
  for (auto* sub : {eval, params}) sub->add_option("--k", o.k, "wavenumber");
  verify->add_option("--suite", o.suite, "all|decomposition|master");
  verify->add_option("--random", o.random, "random specs per family kind");
  verify->add_option("--seed", o.seed, "seed for sample and spec generation");
  verify->add_option("--tolerance", o.tolerance, "relative tolerance for every check");
  params->add_option("--class", o.klass, "iwata1|iwata2|iwata3|natanzon|heun|canonical");
  params->add_option("--heun-a", o.heun_a, "singular point a of the target Heun equation");
  families->add_option("--template", o.template_kind, "print a template spec for this kind");
  for (auto* sub : {eval, map, verify, params, families}) sub->add_option("--out", o.out_path, "output file");

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "solvpot: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code;
  try {
    if (eval->parsed()) code = do_eval(o, buffer);
    else if (map->parsed()) code = do_map(o, buffer);
    else if (verify->parsed()) code = do_verify(o, buffer);
    else if (params->parsed()) code = do_params(o, buffer);
    else code = do_families(o, buffer);
  } catch (const Error& e) {
    err << "solvpot: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!(file << buffer.str())) {
      err << "solvpot: cannot write '" << o.out_path << "'\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace solvpot::cli
