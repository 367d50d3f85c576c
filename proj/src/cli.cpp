#include "tjurina/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tjurina/errors.hpp"
#include "tjurina/expr.hpp"
#include "tjurina/family.hpp"
#include "tjurina/report.hpp"
#include "tjurina/singularity.hpp"
#include "tjurina/zerodim.hpp"

namespace tjurina {

namespace {

using nlohmann::json;

struct GlobalOptions {
  bool json = false;
  bool trace = false;
  unsigned threads = 0;
};

/// Output of one unit of work, buffered so that parallel runs print in order.
struct Outcome {
  int code = kExitOk;
  std::string out;
  std::string err;
  json doc;
};

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

std::vector<Scalar> parse_point(const std::string& text, std::size_t dims) {
  const std::vector<std::string> parts = split_commas(text);
  if (parts.size() != dims) {
    throw ArgumentError("point must have " + std::to_string(dims) + " comma-separated rational coordinates, got '" +
                        text + "'");
  }
  std::vector<Scalar> out;
  for (const std::string& part : parts) {
    try {
      out.push_back(parse_scalar(part));
    } catch (const ExprSyntaxError& e) {
      throw ArgumentError("bad point coordinate '" + part + "': " + e.message());
    }
  }
  return out;
}

std::string syntax_message(const std::string& text, const ExprSyntaxError& e) {
  std::ostringstream os;
  os << "syntax error at offset " << e.offset() << ": " << e.message();
  if (!e.expected().empty()) os << " (expected " << e.expected() << ")";
  os << "\n  " << text << "\n  " << std::string(e.offset(), ' ') << "^\n";
  return os.str();
}

std::string trace_text(const TruncationTrace& t) {
  std::string s;
  for (const auto& [r, alpha] : t.steps) {
    if (!s.empty()) s += ", ";
    s += "alpha_" + std::to_string(r) + " = " + std::to_string(alpha);
  }
  return s.empty() ? "(none)" : s;
}

template <typename T>
std::string optional_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "unavailable";
}

std::vector<std::string> read_curves_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open curves file '" + path + "'");
  std::vector<std::string> curves;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    curves.push_back(line.substr(first, last - first + 1));
  }
  return curves;
}

Outcome analyze_one(const std::string& curve, const std::vector<Scalar>& point, const GlobalOptions& opts) {
  Outcome o;
  Polynomial f;
  try {
    f = parse_poly(curve, Ambient::Affine2);
  } catch (const ExprSyntaxError& e) {
    o.code = kExitUsage;
    o.err = syntax_message(curve, e);
    return o;
  }
  if (f.is_zero()) {
    o.code = kExitUsage;
    o.err = "the zero polynomial does not define a curve\n";
    return o;
  }
  const AffinePoint p{point[0], point[1]};
  const auto start = std::chrono::steady_clock::now();
  const SingularityReport report = analyze(f, p);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const ReportDocument doc = make_report(curve, report, static_cast<long>(elapsed));
  o.doc = to_json(doc);
  if (!report.errors.empty()) {
    o.code = kExitAnalysis;
    for (const std::string& e : report.errors) o.err += "analysis error: " + e + "\n";
  }

  std::ostringstream os;
  os << "curve: " << curve << "\n";
  os << "point: (" << doc.point[0] << "," << doc.point[1] << ")\n";
  os << "multiplicity: " << doc.multiplicity << "\n";
  if (doc.ordinary) os << "ordinary: " << (*doc.ordinary ? "yes" : "no") << "\n";
  os << "tjurina: " << optional_text(doc.tjurina) << "\n";
  os << "milnor: " << optional_text(doc.milnor) << "\n";
  if (report.multiplicity >= 2) os << "symmetry order: " << (doc.symmetry_order ? std::to_string(*doc.symmetry_order) : "none") << "\n";
  os << "classification: " << classification_line(f, report) << "\n";
  if (opts.trace) {
    os << "tjurina trace: " << trace_text(report.trace_tjurina) << "\n";
    os << "milnor trace: " << trace_text(report.trace_milnor) << "\n";
  }
  o.out = os.str();
  return o;
}

int emit(const std::vector<Outcome>& outcomes, bool as_json, bool batch, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  json docs = json::array();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    code = std::max(code, o.code);
    err << o.err;
    if (as_json) {
      docs.push_back(o.doc);
    } else {
      if (batch && i > 0) out << "\n";
      out << o.out;
    }
  }
  if (as_json) {
    if (batch) {
      out << docs.dump(2) << "\n";
    } else if (!docs.empty() && !docs[0].is_null()) {
      out << docs[0].dump(2) << "\n";
    }
  }
  return code;
}

struct CurveArgs {
  std::string curve;
  std::string curves_file;
  std::string point = "0,0";
};

int cmd_analyze(const CurveArgs& args, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  const std::vector<Scalar> point = parse_point(args.point, 2);
  const bool batch = !args.curves_file.empty();
  const std::vector<std::string> curves = batch ? read_curves_file(args.curves_file) : std::vector{args.curve};
  std::vector<Outcome> outcomes(curves.size());
  parallel_for(curves.size(), opts.threads, [&](std::size_t i) {
    try {
      outcomes[i] = analyze_one(curves[i], point, opts);
    } catch (const std::exception& e) {
      outcomes[i].code = kExitAnalysis;
      outcomes[i].err = std::string("analysis error: ") + e.what() + "\n";
    }
  });
  return emit(outcomes, opts.json, batch, out, err);
}

/// Moves a projective point to the chart x_k = 1 (k = 2 when possible) and
/// returns the dehomogenized curve and the affine point.
std::pair<Polynomial, AffinePoint> dehomogenize(const Polynomial& f, const std::vector<Scalar>& p) {
  int k = 2;
  while (k >= 0 && sgn(p[static_cast<std::size_t>(k)]) == 0) --k;
  if (k < 0) throw ArgumentError("[0:0:0] is not a projective point");
  std::vector<Polynomial> images;
  std::vector<Scalar> affine;
  int next = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == k) {
      images.push_back(Polynomial::constant(2, 1));
    } else {
      images.push_back(Polynomial::variable(2, next++));
      affine.push_back(p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(k)]);
    }
  }
  return {substitute(f, images), AffinePoint{affine[0], affine[1]}};
}

int cmd_classify(const CurveArgs& args, bool projective, const GlobalOptions& opts, std::ostream& out,
                 std::ostream& err) {
  Polynomial f;
  try {
    f = parse_poly(args.curve, projective ? Ambient::Projective3 : Ambient::Affine2);
  } catch (const ExprSyntaxError& e) {
    err << syntax_message(args.curve, e);
    return kExitUsage;
  }
  if (f.is_zero()) {
    err << "the zero polynomial does not define a curve\n";
    return kExitUsage;
  }
  const std::vector<Scalar> coords = parse_point(args.point, projective ? 3 : 2);
  AffinePoint p;
  if (projective) {
    if (!f.is_homogeneous()) {
      err << "projective curve must be homogeneous\n";
      return kExitUsage;
    }
    if (sgn(f.evaluate(coords)) != 0) {
      err << "point [" << args.point << "] is not on the curve\n";
      return kExitNotOnCurve;
    }
    std::tie(f, p) = dehomogenize(f, coords);
  } else {
    p = AffinePoint{coords[0], coords[1]};
    if (sgn(f.evaluate(coords)) != 0) {
      err << "point (" << args.point << ") is not on the curve\n";
      return kExitNotOnCurve;
    }
  }
  const ClassificationOutcome outcome = classify_double_point(f, p);
  if (opts.json) {
    json doc{{"curve", args.curve}, {"verdict", to_string(outcome)}};
    json steps = json::array();
    for (const auto& [r, alpha] : outcome.trace.steps) steps.push_back({r, alpha});
    doc["trace"] = steps;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << to_string(outcome) << "\n";
  if (opts.trace) {
    if (projective) out << "affine chart: " << render_poly(f) << " at (" << to_string(p.x) << "," << to_string(p.y) << ")\n";
    out << "trace: " << trace_text(outcome.trace) << "\n";
  }
  return kExitOk;
}

int cmd_global_tjurina(const std::string& curve, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  Polynomial f;
  try {
    f = parse_poly(curve, Ambient::Projective3);
  } catch (const ExprSyntaxError& e) {
    err << syntax_message(curve, e);
    return kExitUsage;
  }
  if (f.is_zero() || !f.is_homogeneous()) {
    err << "global-tjurina: a nonzero homogeneous polynomial in x0, x1, x2 is required\n";
    return kExitUsage;
  }
  const GlobalTjurina result = global_tjurina_detailed(f);
  for (const std::string& w : result.warnings) err << "warning: " << w << "\n";
  if (opts.json) {
    json doc{{"curve", curve},
             {"global_tjurina", result.length.is_finite() ? json(result.length.value()) : json(nullptr)},
             {"hilbert_values", result.hilbert_values},
             {"warnings", result.warnings}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << to_string(result.length) << "\n";
  if (opts.trace) {
    out << "hilbert function:";
    for (long v : result.hilbert_values) out << " " << v;
    out << "\n";
  }
  return kExitOk;
}

struct FamilyArgs {
  std::optional<int> a;
  std::optional<int> b;
  std::optional<int> c;
  std::optional<int> a_max;
  std::optional<int> b_max;
  bool scan = false;
  bool verify_gb = false;
};

struct TupleCheck {
  FamilyParams params;
  FamilyCase cell = FamilyCase::BigB;
  long formula = 0;
  long live = 0;
  std::optional<bool> gb_match;
  std::string error;

  [[nodiscard]] bool ok() const { return error.empty() && formula == live && gb_match.value_or(true); }
};

std::vector<Polynomial> jacobian_basis(const FamilyParams& p) {
  const Polynomial f = p.curve();
  const std::vector<Polynomial> gens{f, partial_derivative(f, 0), partial_derivative(f, 1)};
  return buchberger(gens, MonomialOrder::grlex(2)).generators();
}

TupleCheck check_tuple(const FamilyParams& p, bool verify_gb) {
  TupleCheck t{p, FamilyCase::BigB, 0, 0, std::nullopt, {}};
  try {
    t.cell = family_case(p);
    t.formula = tjurina_formula(p);
    t.live = local_tjurina(p.curve(), AffinePoint{}).length.value();
    if (verify_gb) {
      t.gb_match = jacobian_basis(p) == predicted_gb(p);
    }
  } catch (const std::exception& e) {
    t.error = e.what();
  }
  return t;
}

std::string params_text(const FamilyParams& p) {
  return "(" + std::to_string(p.a()) + "," + std::to_string(p.b()) + "," + std::to_string(p.c()) + ")";
}

json tuple_json(const TupleCheck& t) {
  return {{"a", t.params.a()},
          {"b", t.params.b()},
          {"c", t.params.c()},
          {"case", to_string(t.cell)},
          {"tau_formula", t.formula},
          {"tau_live", t.live},
          {"gb_match", t.gb_match ? json(*t.gb_match) : json(nullptr)},
          {"ok", t.ok()}};
}

int family_single(const FamilyArgs& args, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  const FamilyParams p(*args.a, *args.b, *args.c);
  const TupleCheck t = check_tuple(p, args.verify_gb);
  if (!t.error.empty()) {
    err << "family " << params_text(p) << ": " << t.error << "\n";
    return kExitMismatch;
  }
  std::vector<std::string> gb;
  for (const Polynomial& g : predicted_gb(p)) gb.push_back(render_poly(g));
  if (opts.json) {
    json doc = tuple_json(t);
    doc["predicted_gb"] = gb;
    out << doc.dump(2) << "\n";
  } else {
    out << "params: a=" << p.a() << " b=" << p.b() << " c=" << p.c() << (p.swapped() ? " (b and c exchanged)" : "")
        << "\n";
    out << "case: " << to_string(t.cell) << "\n";
    out << "predicted gb:";
    for (const std::string& g : gb) out << " [" << g << "]";
    out << "\n";
    out << "tau formula: " << t.formula << "\n";
    out << "tau live: " << t.live << "\n";
    if (t.gb_match) out << "gb match: " << (*t.gb_match ? "yes" : "NO") << "\n";
  }
  if (!t.ok()) {
    err << "family " << params_text(p) << ": verification failed\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int family_scan(const FamilyArgs& args, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<int> as;
  if (args.a) {
    as.push_back(*args.a);
  } else {
    const int a_max = args.a_max.value_or(12);
    if (a_max < 2) throw ArgumentError("--a-max must be at least 2");
    for (int a = 2; a <= a_max; ++a) as.push_back(a);
  }
  std::vector<FamilyParams> tuples;
  for (int a : as) {
    if (a < 2) throw ArgumentError("family: a must be at least 2");
    const int b_max = args.b_max.value_or(a + 2);
    for (const FamilyParams& p : family_scan_params(a, b_max)) tuples.push_back(p);
  }
  std::vector<std::optional<TupleCheck>> results(tuples.size());
  parallel_for(tuples.size(), opts.threads,
               [&](std::size_t i) { results[i] = check_tuple(tuples[i], args.verify_gb); });

  long mismatches = 0;
  json per_a = json::array();
  json tuple_docs = json::array();
  std::ostringstream os;
  std::size_t index = 0;
  for (int a : as) {
    long count = 0;
    std::optional<long> min_tau;
    std::optional<FamilyParams> argmin;
    for (; index < results.size() && results[index]->params.a() == a; ++index) {
      const TupleCheck& t = *results[index];
      ++count;
      tuple_docs.push_back(tuple_json(t));
      if (!t.ok()) {
        ++mismatches;
        os << "mismatch " << params_text(t.params) << ": ";
        if (!t.error.empty()) {
          os << t.error;
        } else {
          os << "formula " << t.formula << ", live " << t.live;
          if (t.gb_match && !*t.gb_match) os << ", gb differs";
        }
        os << "\n";
      }
      if (!min_tau || t.live < *min_tau) {
        min_tau = t.live;
        argmin = t.params;
      }
    }
    const long expected = min_tjurina(a).value;
    const bool min_ok = min_tau == expected;
    if (!min_ok) ++mismatches;
    os << "a=" << a << ": " << count << " tuples, min tau = " << optional_text(min_tau);
    if (argmin) os << " at " << params_text(*argmin);
    os << ", expected " << expected << (min_ok ? "" : " MISMATCH") << "\n";
    per_a.push_back({{"a", a},
                     {"tuples", count},
                     {"min_tau", min_tau ? json(*min_tau) : json(nullptr)},
                     {"expected_min_tau", expected}});
  }
  if (opts.json) {
    json doc{{"tuples_checked", tuples.size()}, {"mismatches", mismatches}, {"per_a", per_a}};
    if (opts.trace) doc["tuples"] = tuple_docs;
    out << doc.dump(2) << "\n";
  } else {
    out << os.str();
    out << "tuples checked: " << tuples.size() << "\n";
    out << "mismatches: " << mismatches << "\n";
  }
  if (mismatches > 0) {
    err << "family scan: " << mismatches << " mismatch(es)\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_family(const FamilyArgs& args, const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  if (args.scan) return family_scan(args, opts, out, err);
  if (!args.a || !args.b || !args.c) throw ArgumentError("family: give --a, --b and --c, or --scan");
  return family_single(args, opts, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tjurina and Milnor numbers of plane curve singularities", "tjurina"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_flag("--json", opts.json, "Machine-readable JSON output");
  app.add_flag("--trace", opts.trace, "Print intermediate values (truncation traces, Hilbert function)");
  app.add_option("--threads", opts.threads, "Worker threads for batch work (0 = all cores)")
      ->check(CLI::Range(0u, 1024u));

  CurveArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Local invariants of an affine curve at a point");
  auto* curve_opt = analyze_cmd->add_option("--curve", analyze_args.curve, "Polynomial in x, y");
  auto* file_opt = analyze_cmd->add_option("--curves-file", analyze_args.curves_file,
                                           "File with one curve per line ('#' comments)");
  curve_opt->excludes(file_opt);
  analyze_cmd->add_option("--point", analyze_args.point, "Point as x,y with rational coordinates")
      ->capture_default_str();

  CurveArgs classify_args;
  bool projective = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a point of a curve as simple, A_n or multiplicity >= 3");
  classify_cmd->add_option("--curve", classify_args.curve, "Polynomial in x, y (or x0, x1, x2 with --projective)")
      ->required();
  classify_cmd->add_option("--point", classify_args.point, "Point x,y (or x0,x1,x2 with --projective)")
      ->capture_default_str();
  classify_cmd->add_flag("--projective", projective, "Homogeneous curve and projective point");

  std::string global_curve;
  auto* global_cmd = app.add_subcommand("global-tjurina", "Global Tjurina number of a projective plane curve");
  global_cmd->add_option("--curve", global_curve, "Homogeneous polynomial in x0, x1, x2")->required();

  FamilyArgs family_args;
  auto* family_cmd = app.add_subcommand("family", "Verify the x^a + y^a + x^b*y^c family");
  family_cmd->add_option("--a", family_args.a, "Degree a");
  family_cmd->add_option("--b", family_args.b, "Exponent b");
  family_cmd->add_option("--c", family_args.c, "Exponent c");
  family_cmd->add_flag("--scan", family_args.scan, "Verify every tuple (for --a, or for a = 2..--a-max)");
  family_cmd->add_option("--a-max", family_args.a_max, "Largest a in a scan (default 12)");
  family_cmd->add_option("--b-max", family_args.b_max, "Largest b in a scan (default a + 2)");
  family_cmd->add_flag("--verify-gb", family_args.verify_gb, "Cross-check the predicted Groebner basis");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (analyze_cmd->parsed() && analyze_args.curve.empty() && analyze_args.curves_file.empty()) {
    err << "analyze: --curve or --curves-file is required\n";
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_args, opts, out, err);
    if (classify_cmd->parsed()) return cmd_classify(classify_args, projective, opts, out, err);
    if (global_cmd->parsed()) return cmd_global_tjurina(global_curve, opts, out, err);
    if (family_cmd->parsed()) return cmd_family(family_args, opts, out, err);
  } catch (const ArgumentError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const AnalysisError& e) {
    err << "analysis error: " << e.what() << "\n";
    return kExitAnalysis;
  } catch (const ConsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace tjurina
