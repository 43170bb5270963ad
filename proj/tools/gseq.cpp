// Command-line surface for G-sequential convergence computations: method
// evaluation, closures and derived predicates, density formulas, regularity,
// and the finite-model verification suite. All numeric I/O is exact rational
// text; json mode emits machine-readable documents for scripting.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gseq/json_io.hpp"
#include "gseq/verifier.hpp"

namespace {

using nlohmann::json;

struct Io {
  std::string output = "human";
  bool json() const { return output == "json"; }
};

void add_output_flag(CLI::App* cmd, Io& io) {
  cmd->add_option("--output", io.output, "Output format: human or json")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
}

json load_input(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  json doc;
  in >> doc;
  return doc;
}

gseq::MethodDescriptor parse_method_text(const std::string& text) {
  if (!text.empty() && text.front() == '{') return gseq::method_from_json(json::parse(text));
  return gseq::MethodDescriptor::parse(text);
}

gseq::MethodDescriptor resolve_method(const std::string& flag, const json& input) {
  if (!flag.empty()) return parse_method_text(flag);
  if (input.contains("method")) return gseq::method_from_json(input.at("method"));
  throw std::invalid_argument("no method given (use --method or --input)");
}

gseq::PointSet parse_set_text(const std::string& text, const gseq::GroupModel& model) {
  if (!text.empty() && text.front() == '[') return gseq::set_from_json(json::parse(text), model);
  std::vector<gseq::GroupElement> elems;
  std::string_view body(text);
  while (!body.empty()) {
    const auto comma = body.find(',');
    elems.push_back(model.parse_element(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return gseq::PointSet(model, std::move(elems));
}

gseq::PointSet resolve_set(const std::string& flag, const json& input, const gseq::GroupModel& model) {
  if (!flag.empty()) return parse_set_text(flag, model);
  if (input.contains("set")) return gseq::set_from_json(input.at("set"), model);
  throw std::invalid_argument("no point set given (use --set or --input)");
}

std::vector<gseq::GroupElement> parse_terms(const std::string& text, const gseq::GroupModel& model) {
  std::vector<gseq::GroupElement> elems;
  std::string_view body(text);
  while (!body.empty()) {
    const auto comma = body.find(',');
    elems.push_back(model.parse_element(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return elems;
}

void emit(const Io& io, const json& doc, const std::string& human) {
  if (io.json())
    std::cout << doc.dump() << "\n";
  else
    std::cout << human << "\n";
}

std::string flag_text(bool value) { return value ? "true" : "false"; }

// ---------------------------------------------------------------------------

int cmd_eval(const Io& io, const std::string& method_flag, const std::string& universe,
             const std::string& seq_text, const std::string& input_path) {
  const json input = load_input(input_path);
  const auto model = gseq::GroupModel::parse(universe);
  const auto method = resolve_method(method_flag, input);
  const std::string text = !seq_text.empty()
                               ? seq_text
                               : input.value("sequence", std::string());
  if (text.empty()) throw std::invalid_argument("no sequence given (use --seq or --input)");
  const auto x = gseq::EvPerSeq::parse(text, model);
  const auto value = gseq::evaluate(method, x);
  json doc;
  doc["defined"] = value.has_value();
  if (value) doc["value"] = value->str();
  emit(io, doc, value ? value->str() : "undefined");
  return 0;
}

int cmd_closure(const Io& io, const std::string& method_flag, const std::string& universe,
                const std::string& set_flag, std::size_t cesaro_bound, const std::string& input_path) {
  const json input = load_input(input_path);
  const auto model = gseq::GroupModel::parse(universe);
  const auto method = resolve_method(method_flag, input);
  const auto set = resolve_set(set_flag, input, model);
  gseq::TopologyOptions topt;
  topt.cesaro_cycle_bound = cesaro_bound;
  const auto result = gseq::closure(method, set, topt);
  json doc;
  doc["closure"] = gseq::set_to_json(result.points);
  doc["complete"] = result.complete;
  emit(io, doc,
       result.points.str() + (result.complete ? "" : "  (lower approximation)"));
  return 0;
}

int cmd_iterate(const Io& io, const std::string& method_flag, const std::string& universe,
                const std::string& set_flag, std::size_t k, std::size_t cesaro_bound,
                const std::string& input_path) {
  const json input = load_input(input_path);
  const auto model = gseq::GroupModel::parse(universe);
  const auto method = resolve_method(method_flag, input);
  const auto set = resolve_set(set_flag, input, model);
  gseq::TopologyOptions topt;
  topt.cesaro_cycle_bound = cesaro_bound;
  const auto steps = gseq::closure_iterate(method, set, k, topt);
  json arr = json::array();
  bool complete = true;
  std::string human;
  for (const auto& step : steps) {
    arr.push_back(gseq::set_to_json(step.points));
    complete = complete && step.complete;
    if (!human.empty()) human += "\n";
    human += step.points.str();
  }
  json doc;
  doc["iterates"] = std::move(arr);
  doc["complete"] = complete;
  emit(io, doc, human);
  return 0;
}

int cmd_predicate(const Io& io, const std::string& which, const std::string& method_flag,
                  const std::string& universe, const std::string& set_flag, std::size_t cap) {
  const auto model = gseq::GroupModel::parse(universe);
  const auto method = resolve_method(method_flag, json::object());
  const auto set = parse_set_text(set_flag, model);
  gseq::TopologyOptions topt;
  topt.universe_cap = cap;
  json doc;
  std::string human;
  if (which == "check-closed") {
    const bool closed = gseq::is_closed(method, set, topt);
    doc["closed"] = closed;
    human = flag_text(closed);
  } else if (which == "check-open") {
    const bool open = gseq::is_open(method, set, topt);
    doc["open"] = open;
    human = flag_text(open);
  } else if (which == "interior") {
    const auto inside = gseq::interior(method, set, topt);
    doc["interior"] = gseq::set_to_json(inside);
    human = inside.str();
  } else if (which == "boundary") {
    const auto edge = gseq::boundary(method, set, topt);
    doc["boundary"] = gseq::set_to_json(edge);
    human = edge.str();
  } else {  // dense
    const bool dense = gseq::is_dense(method, set, topt);
    doc["dense"] = dense;
    human = flag_text(dense);
  }
  emit(io, doc, human);
  return 0;
}

int cmd_regular(const Io& io, const std::string& method_flag) {
  const auto method = resolve_method(method_flag, json::object());
  const bool regular = gseq::is_regular(method);
  json doc;
  doc["regular"] = regular;
  emit(io, doc, flag_text(regular));
  return 0;
}

std::vector<gseq::GroupElement> resolve_prefix(const std::string& terms_flag,
                                               const std::string& seq_flag, std::size_t n,
                                               const json& input, const gseq::GroupModel& model) {
  if (!terms_flag.empty()) return parse_terms(terms_flag, model);
  std::string seq_text = seq_flag;
  if (seq_text.empty()) seq_text = input.value("sequence", std::string());
  if (!seq_text.empty()) {
    if (n == 0) throw std::invalid_argument("--n must be positive when sampling a sequence");
    const auto x = gseq::EvPerSeq::parse(seq_text, model);
    std::vector<gseq::GroupElement> prefix;
    prefix.reserve(n);
    for (std::size_t i = 0; i < n; ++i) prefix.push_back(x.term(i));
    return prefix;
  }
  if (input.contains("terms")) {
    std::vector<gseq::GroupElement> prefix;
    for (const auto& item : input.at("terms"))
      prefix.push_back(model.parse_element(item.get<std::string>()));
    return prefix;
  }
  throw std::invalid_argument("no prefix given (use --terms, --seq with --n, or --input)");
}

std::optional<gseq::Rational> resolve_radius(const std::string& radius_flag) {
  if (radius_flag.empty()) return std::nullopt;
  return gseq::Rational::parse(radius_flag);
}

int cmd_stat_density(const Io& io, const std::string& universe, const std::string& terms_flag,
                     const std::string& seq_flag, std::size_t n, const std::string& point_flag,
                     const std::string& radius_flag, const std::string& input_path) {
  const json input = load_input(input_path);
  const auto model = gseq::GroupModel::parse(universe);
  const auto prefix = resolve_prefix(terms_flag, seq_flag, n, input, model);
  const auto center = model.parse_element(point_flag);
  const auto density = gseq::statistical_density(prefix, center, resolve_radius(radius_flag));
  json doc;
  doc["density"] = density.str();
  emit(io, doc, density.str());
  return 0;
}

gseq::LacunaryScheme resolve_scheme(const std::string& breakpoints_flag,
                                    const std::string& geometric_flag, const json& input) {
  if (!breakpoints_flag.empty()) {
    std::vector<std::uint64_t> ks;
    std::string_view body(breakpoints_flag);
    while (!body.empty()) {
      const auto comma = body.find(',');
      const auto v = gseq::Rational::parse(body.substr(0, comma));
      if (!v.is_integer() || v.numerator() <= 0)
        throw std::invalid_argument("breakpoints must be positive integers");
      ks.push_back(static_cast<std::uint64_t>(v.numerator()));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return gseq::LacunaryScheme(std::move(ks));
  }
  if (!geometric_flag.empty()) {
    const auto x = geometric_flag.find('x');
    if (x == std::string::npos)
      throw std::invalid_argument("geometric scheme syntax is RATIOxCOUNT, e.g. 2x12");
    const auto ratio = gseq::Rational::parse(geometric_flag.substr(0, x));
    const auto count = gseq::Rational::parse(geometric_flag.substr(x + 1));
    return gseq::LacunaryScheme::geometric(static_cast<std::uint64_t>(ratio.numerator()),
                                           static_cast<std::size_t>(count.numerator()));
  }
  if (input.contains("scheme")) return gseq::scheme_from_json(input.at("scheme"));
  throw std::invalid_argument("no lacunary scheme given (use --breakpoints or --geometric)");
}

int cmd_lacunary_density(const Io& io, const std::string& universe, const std::string& terms_flag,
                         const std::string& seq_flag, std::size_t n, const std::string& point_flag,
                         const std::string& radius_flag, const std::string& breakpoints_flag,
                         const std::string& geometric_flag, std::size_t r,
                         const std::string& input_path) {
  const json input = load_input(input_path);
  const auto model = gseq::GroupModel::parse(universe);
  const auto prefix = resolve_prefix(terms_flag, seq_flag, n, input, model);
  const auto center = model.parse_element(point_flag);
  const auto scheme = resolve_scheme(breakpoints_flag, geometric_flag, input);
  const auto density = gseq::lacunary_density(prefix, scheme, r, center, resolve_radius(radius_flag));
  json doc;
  doc["density"] = density.str();
  emit(io, doc, density.str());
  return 0;
}

int cmd_continuity(const Io& io, const std::string& method_flag, const std::string& universe,
                   const std::string& function_flag, const std::string& at_flag,
                   const std::string& on_flag, std::uint64_t period_bound,
                   const std::string& input_path) {
  const json input = load_input(input_path);
  const auto model = gseq::GroupModel::parse(universe);
  const auto method = resolve_method(method_flag, input);
  std::string table = function_flag;
  if (table.empty()) table = input.value("function", std::string());
  if (table.empty()) throw std::invalid_argument("no function table given (use --function)");
  const auto f = gseq::TabulatedFunction::parse(model, table);

  gseq::ContinuityReport report;
  if (period_bound > 0) {
    if (!at_flag.empty() || !on_flag.empty())
      throw std::invalid_argument("--period-bound applies to the plain continuity check only");
    report = gseq::check_continuity_bounded(method, f, period_bound);
  } else if (!at_flag.empty())
    report = gseq::check_continuity_at(method, f, model.parse_element(at_flag));
  else if (!on_flag.empty())
    report = gseq::check_continuity_on(method, f, parse_set_text(on_flag, model));
  else
    report = gseq::check_continuity(method, f);

  json doc;
  doc["continuous"] = report.continuous;
  doc["verified_up_to_period"] = report.complete_period_bound;
  std::string human = report.continuous
                          ? "continuous (complete up to period " +
                                std::to_string(report.complete_period_bound) + ")"
                          : "discontinuous";
  if (!report.continuous) {
    doc["witness"] = {{"sequence", report.witness->str()}, {"point", report.witness_point->str()}};
    human += " at " + report.witness_point->str() + ", witness " + report.witness->str();
  }
  emit(io, doc, human);
  return 0;
}

int cmd_verify(const Io& io, const std::string& universes_flag, const std::string& methods_flag,
               std::uint64_t trials, std::uint64_t seed, std::size_t cap) {
  std::vector<gseq::GroupModel> universes;
  {
    std::string_view body(universes_flag);
    while (!body.empty()) {
      const auto comma = body.find(',');
      universes.push_back(gseq::GroupModel::parse(body.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  }
  std::vector<gseq::MethodDescriptor> methods;
  if (methods_flag == "default") {
    methods = gseq::integer_kernel_family();
  } else {
    // split on ';' outside parentheses, so sum(m1;m2) stays intact
    std::string_view body(methods_flag);
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size() && body[i] == '(') ++depth;
      if (i < body.size() && body[i] == ')') --depth;
      if (i == body.size() || (body[i] == ';' && depth == 0)) {
        if (i > start) methods.push_back(parse_method_text(std::string(body.substr(start, i - start))));
        start = i + 1;
      }
    }
  }

  gseq::SuiteOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.topology.universe_cap = cap;

  std::vector<gseq::VerificationReport> all;
  for (const auto& universe : universes) {
    // On the rational line only kernel methods make sense by default.
    std::vector<gseq::MethodDescriptor> selected;
    if (!universe.is_cyclic() && methods_flag == "default") {
      selected.push_back(gseq::MethodDescriptor::kernel({gseq::Rational(1) / gseq::Rational(2),
                                                         gseq::Rational(1) / gseq::Rational(2)}));
    } else {
      selected = methods;
    }
    auto reports = gseq::run_suite(universe, selected, opts);
    all.insert(all.end(), reports.begin(), reports.end());
  }

  const bool passed = gseq::suite_passed(all);
  if (io.json()) {
    std::cout << gseq::report_stream(all);
  } else {
    std::uint64_t verified = 0, counterexamples = 0, skipped = 0;
    for (const auto& r : all) {
      switch (r.status) {
        case gseq::CheckStatus::Verified: ++verified; break;
        case gseq::CheckStatus::CounterexampleFound: ++counterexamples; break;
        case gseq::CheckStatus::Skipped: ++skipped; break;
      }
      std::cout << "[" << gseq::to_string(r.status) << "] " << r.check << " (" << r.universe
                << ", " << r.method << ", " << gseq::to_string(r.expectation) << ")"
                << (r.note.empty() ? "" : "  -- " + r.note) << "\n";
    }
    std::cout << "checks: " << all.size() << "  verified: " << verified
              << "  counterexamples: " << counterexamples << "  skipped: " << skipped << "\n"
              << (passed ? "SUITE PASSED" : "SUITE FAILED") << "\n";
  }
  return passed ? 0 : 1;
}

int cmd_demo(const Io& io) {
  using gseq::Rational;
  const auto q = gseq::GroupModel::rational_line();
  const auto averaging =
      gseq::MethodDescriptor::kernel({Rational(1) / Rational(2), Rational(1) / Rational(2)});
  const auto set01 = parse_set_text("0,1", q);

  struct Entry {
    std::string name, computed, expected;
    bool ok;
  };
  std::vector<Entry> entries;
  auto record = [&](const std::string& name, const std::string& computed, const std::string& expected) {
    entries.push_back({name, computed, expected, computed == expected});
  };

  const auto steps = gseq::closure_iterate(averaging, set01, 2);
  record("closure of {0, 1}", steps[0].points.str(), "{0, 1/2, 1}");
  record("second closure iterate", steps[1].points.str(), "{0, 1/4, 1/2, 3/4, 1}");
  record("{0} closed", flag_text(gseq::is_closed(averaging, parse_set_text("0", q))), "true");
  record("{1} closed", flag_text(gseq::is_closed(averaging, parse_set_text("1", q))), "true");
  record("{0, 1} closed", flag_text(gseq::is_closed(averaging, set01)), "false");

  bool all_ok = true;
  json arr = json::array();
  for (const auto& e : entries) {
    all_ok = all_ok && e.ok;
    arr.push_back({{"name", e.name}, {"computed", e.computed}, {"expected", e.expected}, {"ok", e.ok}});
    if (!io.json()) {
      std::cout << (e.ok ? "  OK  " : " FAIL ") << e.name << ": computed " << e.computed
                << ", expected " << e.expected << "\n";
    }
  }
  if (io.json()) {
    json doc;
    doc["entries"] = std::move(arr);
    doc["ok"] = all_ok;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << (all_ok ? "demo values all match" : "demo values DIVERGE") << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-sequential convergence toolkit: exact closures, density formulas, and a finite-model theorem verifier"};
  app.require_subcommand(1);

  // shared option storage
  Io io;
  std::string method_flag, universe = "q", set_flag, seq_flag, terms_flag, point_flag, radius_flag;
  std::string function_flag, at_flag, on_flag, input_path;
  std::string breakpoints_flag, geometric_flag;
  std::string universes_flag = "q,z2,z3,z4", methods_flag = "default";
  std::size_t k = 2, n = 0, r = 1, cap = 6, cesaro_bound = 6;
  std::uint64_t trials = 100, seed = 7, period_bound = 0;

  auto add_method = [&](CLI::App* cmd) {
    cmd->add_option("--method", method_flag, "Method: lim | cesaro | kernel:c0,c1,... | sum(m1;m2) | JSON");
  };
  auto add_universe = [&](CLI::App* cmd) {
    cmd->add_option("--universe", universe, "Universe: q | z<n>")->capture_default_str();
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input_path, "JSON file supplying method/set/sequence fields");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a method on an eventually periodic sequence");
  add_method(eval); add_universe(eval); add_input(eval); add_output_flag(eval, io);
  eval->add_option("--seq", seq_flag, "Sequence, e.g. pre:[];cyc:[0,1]");

  auto* closure_cmd = app.add_subcommand("closure", "G-sequential closure of a finite set");
  add_method(closure_cmd); add_universe(closure_cmd); add_input(closure_cmd); add_output_flag(closure_cmd, io);
  closure_cmd->add_option("--set", set_flag, "Finite point set, e.g. 0,1");
  closure_cmd->add_option("--cesaro-bound", cesaro_bound, "Cycle length bound for cesaro closures")->capture_default_str();

  auto* iterate = app.add_subcommand("iterate", "Iterated closure");
  add_method(iterate); add_universe(iterate); add_input(iterate); add_output_flag(iterate, io);
  iterate->add_option("--set", set_flag, "Finite point set");
  iterate->add_option("--k", k, "Number of closure steps")->capture_default_str();
  iterate->add_option("--cesaro-bound", cesaro_bound, "Cycle length bound for cesaro closures")->capture_default_str();

  auto* closed_cmd = app.add_subcommand("check-closed", "Is the set G-sequentially closed?");
  auto* open_cmd = app.add_subcommand("check-open", "Is the set G-sequentially open? (cyclic universes)");
  auto* interior_cmd = app.add_subcommand("interior", "G-interior of a set (cyclic universes)");
  auto* boundary_cmd = app.add_subcommand("boundary", "G-boundary of a set (cyclic universes)");
  auto* dense_cmd = app.add_subcommand("dense", "Is the set G-sequentially dense? (cyclic universes)");
  for (auto* cmd : {closed_cmd, open_cmd, interior_cmd, boundary_cmd, dense_cmd}) {
    add_method(cmd); add_universe(cmd); add_output_flag(cmd, io);
    cmd->add_option("--set", set_flag, "Finite point set");
    cmd->add_option("--cap", cap, "Universe size cap for subset enumeration")->capture_default_str();
  }

  auto* regular_cmd = app.add_subcommand("regular", "Is the method regular?");
  add_method(regular_cmd); add_output_flag(regular_cmd, io);

  auto* stat = app.add_subcommand("stat-density", "Statistical density of exceptions over a prefix");
  add_universe(stat); add_input(stat); add_output_flag(stat, io);
  stat->add_option("--terms", terms_flag, "Explicit prefix terms, comma separated");
  stat->add_option("--seq", seq_flag, "Sequence to sample");
  stat->add_option("--n", n, "Prefix length when sampling --seq");
  stat->add_option("--point", point_flag, "Candidate limit")->required();
  stat->add_option("--radius", radius_flag, "Neighborhood radius (rational line only)");

  auto* lac = app.add_subcommand("lacunary-density", "Blockwise lacunary density of exceptions");
  add_universe(lac); add_input(lac); add_output_flag(lac, io);
  lac->add_option("--terms", terms_flag, "Explicit prefix terms, comma separated");
  lac->add_option("--seq", seq_flag, "Sequence to sample");
  lac->add_option("--n", n, "Prefix length when sampling --seq");
  lac->add_option("--point", point_flag, "Candidate limit")->required();
  lac->add_option("--radius", radius_flag, "Neighborhood radius (rational line only)");
  lac->add_option("--breakpoints", breakpoints_flag, "Scheme breakpoints, e.g. 2,4,8");
  lac->add_option("--geometric", geometric_flag, "Geometric scheme RATIOxCOUNT, e.g. 2x12");
  lac->add_option("--r", r, "Block index (1-based)")->capture_default_str();

  auto* cont = app.add_subcommand("continuity", "G-sequential continuity of a tabulated function");
  add_method(cont); add_universe(cont); add_input(cont); add_output_flag(cont, io);
  cont->add_option("--function", function_flag, "Value table f(0),f(1),...");
  cont->add_option("--at", at_flag, "Check continuity at one point");
  cont->add_option("--on", on_flag, "Restrict sequence values to this subset");
  cont->add_option("--period-bound", period_bound,
                   "Literal bounded-period search instead of the complete graph decision");

  auto* verify = app.add_subcommand("verify", "Run the finite-model verification suite");
  add_output_flag(verify, io);
  verify->add_option("--universe", universes_flag, "Comma-separated universes")->capture_default_str();
  verify->add_option("--methods", methods_flag, "default | semicolon-separated methods")->capture_default_str();
  verify->add_option("--trials", trials, "Random draws per randomized check")->capture_default_str();
  verify->add_option("--seed", seed, "Deterministic seed")->capture_default_str();
  verify->add_option("--cap", cap, "Universe size cap")->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Replay the averaging-kernel walkthrough with pinned values");
  add_output_flag(demo, io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(io, method_flag, universe, seq_flag, input_path);
    if (*closure_cmd) return cmd_closure(io, method_flag, universe, set_flag, cesaro_bound, input_path);
    if (*iterate) return cmd_iterate(io, method_flag, universe, set_flag, k, cesaro_bound, input_path);
    if (*closed_cmd) return cmd_predicate(io, "check-closed", method_flag, universe, set_flag, cap);
    if (*open_cmd) return cmd_predicate(io, "check-open", method_flag, universe, set_flag, cap);
    if (*interior_cmd) return cmd_predicate(io, "interior", method_flag, universe, set_flag, cap);
    if (*boundary_cmd) return cmd_predicate(io, "boundary", method_flag, universe, set_flag, cap);
    if (*dense_cmd) return cmd_predicate(io, "dense", method_flag, universe, set_flag, cap);
    if (*regular_cmd) return cmd_regular(io, method_flag);
    if (*stat) return cmd_stat_density(io, universe, terms_flag, seq_flag, n, point_flag, radius_flag, input_path);
    if (*lac) return cmd_lacunary_density(io, universe, terms_flag, seq_flag, n, point_flag,
                                          radius_flag, breakpoints_flag, geometric_flag, r, input_path);
    if (*cont)
      return cmd_continuity(io, method_flag, universe, function_flag, at_flag, on_flag, period_bound,
                            input_path);
    if (*verify) return cmd_verify(io, universes_flag, methods_flag, trials, seed, cap);
    if (*demo) return cmd_demo(io);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
