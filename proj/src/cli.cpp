#include "lts/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "lts/bounds.hpp"
#include "lts/constructions.hpp"
#include "lts/extremal.hpp"
#include "lts/io.hpp"

namespace lts::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Triple& t) { return Json::array({t.a, t.b, t.c}); }

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json summary(const TripleSystem& sys) {
  return Json{{"n", sys.n()}, {"m", sys.size()}, {"steiner", is_steiner(sys)}};
}

Json system_json(const TripleSystem& sys) {
  Json triples = Json::array();
  for (const auto& t : sys.triples()) triples.push_back(to_json(t));
  return Json{{"n", sys.n()}, {"m", sys.size()}, {"triples", std::move(triples)}};
}

Json verdict_json(const PropertyVerdict& v) {
  Json j{{"holds", v.holds}, {"checked_count", v.checked_count}};
  if (!v.witness) {
    j["witness_kind"] = nullptr;
    j["witness"] = nullptr;
  } else if (const auto* set = std::get_if<VertexSet>(&*v.witness)) {
    j["witness_kind"] = "vertex_set";
    j["witness"] = to_json(*set);
  } else {
    const auto& [first, second] = std::get<TriplePair>(*v.witness);
    j["witness_kind"] = "triple_pair";
    j["witness"] = Json::array({to_json(first), to_json(second)});
  }
  return j;
}

std::vector<std::int64_t> parse_index_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
    if (used != item.size() || v < 0) throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Options {
  bool timing = false;

  std::string family;
  std::optional<std::uint32_t> param;
  std::string keep;
  std::string input;
  std::string output;
  bool json = false;

  std::string property;
  std::string mode = "reduced";

  std::string set;

  std::optional<std::size_t> max_size;
  std::uint64_t budget = 0;

  bool min_wsp = false;
  std::size_t order = 0;
  std::optional<std::size_t> start_at;

  bool tau = false;
  bool constants = false;
  std::vector<std::uint32_t> density;
  double tolerance = 1e-8;
};

void emit(std::ostream& out, Json report, const Options& opt, const Timer& timer) {
  if (opt.timing) report["wall_time_ms"] = timer.elapsed_ms();
  out << report.dump(2) << '\n';
}

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err) {
  auto family = family_from_string(opt.family);
  if (!family) throw UsageError("unknown family '" + opt.family + "'");
  if (!opt.keep.empty() && *family != Family::crowning) throw UsageError("--keep only applies to crowning");

  auto need_param = [&]() -> std::uint32_t {
    if (!opt.param) throw UsageError("--p is required for family " + opt.family);
    return *opt.param;
  };

  TripleSystem sys;
  switch (*family) {
    case Family::bose_skolem: {
      auto q = need_param();
      sys = bose_skolem(q);
      if (!is_prime(q)) err << "note: modulus " << q << " is composite; the expander bound is only known for primes\n";
      break;
    }
    case Family::spreading_6p3: sys = spreading_6p3(need_param()); break;
    case Family::cayley_latin: sys = cayley_latin(need_param()); break;
    case Family::star_expansion: sys = star_expansion(need_param()); break;
    case Family::crowning: {
      TripleSystem base = opt.input.empty() ? spreading_6p3(need_param()) : read_system_file(opt.input);
      if (opt.keep.empty()) {
        sys = crowning(base);
      } else {
        auto raw = parse_index_list(opt.keep, "--keep");
        std::vector<std::size_t> keep(raw.begin(), raw.end());
        sys = crowning(base, std::span<const std::size_t>(keep));
      }
      break;
    }
  }

  std::string text = opt.json ? system_json(sys).dump(2) + "\n" : serialize(sys);
  if (opt.output.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file || !(file << text)) throw std::runtime_error("cannot write '" + opt.output + "'");
  }
  return kSuccess;
}

int cmd_check(const Options& opt, std::ostream& out, const Timer& timer) {
  auto sys = read_system_file(opt.input);
  Json report{{"command", "check"}, {"input", opt.input}, {"property", opt.property}};
  PropertyVerdict verdict;
  if (opt.property == "linear") {
    verdict = PropertyVerdict{true, std::nullopt, 1};
  } else if (opt.property == "steiner") {
    auto missing = uncovered_edges(sys);
    verdict.checked_count = sys.n() * (sys.n() - (sys.n() > 0 ? 1 : 0)) / 2;
    if (!missing.empty()) {
      verdict.holds = false;
      verdict.witness = VertexSet(sys.n(), {missing.front().first, missing.front().second});
    }
  } else if (opt.property == "spreading") {
    SpreadingMode mode;
    if (opt.mode == "reduced") {
      mode = SpreadingMode::reduced;
    } else if (opt.mode == "brute-force" || opt.mode == "brute_force") {
      mode = SpreadingMode::brute_force;
    } else {
      throw UsageError("unknown mode '" + opt.mode + "'");
    }
    report["mode"] = opt.mode;
    verdict = is_spreading(sys, mode);
  } else if (opt.property == "weakly-spreading") {
    verdict = is_weakly_spreading(sys);
  } else if (opt.property == "strong-connectivity") {
    verdict = is_strongly_connected(sys);
  } else {
    throw UsageError("unknown property '" + opt.property + "'");
  }
  report["system"] = summary(sys);
  report["verdict"] = verdict_json(verdict);
  emit(out, std::move(report), opt, timer);
  return verdict.holds ? kSuccess : kPropertyFails;
}

int cmd_closure(const Options& opt, std::ostream& out, const Timer& timer) {
  auto sys = read_system_file(opt.input);
  auto raw = parse_index_list(opt.set, "--set");
  VertexSet seed(sys.n());
  for (auto v : raw) {
    if (static_cast<std::uint64_t>(v) >= sys.n()) {
      throw UsageError("vertex " + std::to_string(v) + " outside [0," + std::to_string(sys.n()) + ")");
    }
    seed.insert(static_cast<Vertex>(v));
  }
  auto cl = closure(sys, seed);
  Json report{{"command", "closure"},
              {"input", opt.input},
              {"system", summary(sys)},
              {"set", to_json(seed)},
              {"neighbourhood", to_json(neighbourhood(sys, seed))},
              {"closure", to_json(cl)},
              {"closure_size", cl.size()},
              {"spans_all", cl.size() == sys.n()}};
  emit(out, std::move(report), opt, timer);
  return kSuccess;
}

int cmd_expander(const Options& opt, std::ostream& out, const Timer& timer) {
  auto sys = read_system_file(opt.input);
  auto r = expander_deficiency(sys, opt.max_size, opt.budget == 0 ? kDefaultEnumerationBudget : opt.budget);
  Json per_size = Json::object();
  for (const auto& [size, value] : r.per_size_min_neighbourhood) per_size[std::to_string(size)] = value;
  Json report{{"command", "expander"},
              {"input", opt.input},
              {"system", summary(sys)},
              {"max_size", r.max_size},
              {"sets_examined", r.sets_examined},
              {"min_deficiency", r.min_deficiency},
              {"worst_set", to_json(r.worst_set)},
              {"per_size_min_neighbourhood", std::move(per_size)}};
  if (r.min_ratio) {
    report["min_ratio"] = Json{{"num", r.min_ratio->num}, {"den", r.min_ratio->den}, {"value", r.min_ratio->value()}};
    report["ratio_set"] = to_json(*r.ratio_set);
  } else {
    report["min_ratio"] = nullptr;
    report["ratio_set"] = nullptr;
  }
  emit(out, std::move(report), opt, timer);
  return kSuccess;
}

int cmd_search(const Options& opt, std::ostream& out, const Timer& timer) {
  if (!opt.min_wsp) throw UsageError("search needs --min-wsp");
  auto r = min_weakly_spreading(opt.order, opt.start_at, opt.budget == 0 ? kDefaultSearchBudget : opt.budget);
  auto ordering = ordering_witness(r.witness);
  Json seq = Json::array();
  if (ordering) {
    for (const auto& t : ordering->sequence) seq.push_back(to_json(t));
  }
  Json report{{"command", "search"},
              {"n", r.n},
              {"minimum", r.minimum},
              {"lower_bound", r.n - 3},
              {"exhaustive_below", r.exhaustive_below},
              {"nodes_explored", r.nodes_explored},
              {"witness", system_json(r.witness)},
              {"ordering", std::move(seq)}};
  emit(out, std::move(report), opt, timer);
  return kSuccess;
}

int cmd_bounds(const Options& opt, std::ostream& out, const Timer& timer) {
  Json report{{"command", "bounds"}};
  bool all = !opt.tau && !opt.constants && opt.density.empty();
  TauResult t = tau(opt.tolerance);
  if (opt.tau || all) {
    report["tau"] = t.tau;
    report["argmax_z"] = t.argmax_z;
  }
  if (opt.constants || all) {
    auto c = lower_bound_constants(t.tau);
    report["constants"] = Json{{"tau", t.tau},
                               {"edge_bound_coeff", c.edge_bound_coeff},
                               {"xi_sp_coeff", c.xi_sp_coeff},
                               {"naive_coeff", c.naive_coeff}};
  }
  if (!opt.density.empty()) {
    Json rows = Json::array();
    for (auto p : opt.density) {
      auto d = construction_density(p);
      rows.push_back(Json{{"p", p}, {"n", d.n}, {"m", d.m}, {"ratio", d.ratio}});
    }
    report["density"] = std::move(rows);
    report["density_limit"] = 5.0 / 36.0;
  }
  emit(out, std::move(report), opt, timer);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Linear triple systems: constructions, closure and spreading checks, extremal search", "lts"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--timing", opt.timing, "Add wall_time_ms to reports");

  auto* construct = app.add_subcommand("construct", "Generate a system in .lts format");
  construct->add_option("--family", opt.family, "bose_skolem|spreading_6p3|crowning|cayley_latin|star_expansion")
      ->required();
  construct->add_option("--p", opt.param, "Modulus, prime or order parameter");
  construct->add_option("--keep", opt.keep, "Comma-separated uncovered-pair indices (crowning)");
  construct->add_option("--input", opt.input, "Base system for crowning (default spreading_6p3(p))");
  construct->add_option("--out", opt.output, "Output file (default stdout)");
  construct->add_flag("--json", opt.json, "Write JSON instead of .lts");

  auto* check = app.add_subcommand("check", "Check a property of a system");
  check->add_option("--input", opt.input)->required();
  check->add_option("--property", opt.property, "linear|steiner|spreading|weakly-spreading|strong-connectivity")
      ->required();
  check->add_option("--mode", opt.mode, "reduced|brute-force (spreading)");

  auto* closure_cmd = app.add_subcommand("closure", "Neighbourhood and closure of a vertex set");
  closure_cmd->add_option("--input", opt.input)->required();
  closure_cmd->add_option("--set", opt.set, "Comma-separated vertices")->required();

  auto* expander = app.add_subcommand("expander", "Exhaustive expander deficiency scan");
  expander->add_option("--input", opt.input)->required();
  expander->add_option("--max-size", opt.max_size);
  expander->add_option("--budget", opt.budget, "Enumeration budget (sets)");

  auto* search = app.add_subcommand("search", "Minimum weakly spreading system search");
  search->add_flag("--min-wsp", opt.min_wsp);
  search->add_option("--n", opt.order)->required();
  search->add_option("--start-at", opt.start_at);
  search->add_option("--budget", opt.budget, "Node budget");

  auto* bounds = app.add_subcommand("bounds", "Numeric constants of the lower bounds");
  bounds->add_flag("--tau", opt.tau);
  bounds->add_flag("--constants", opt.constants);
  bounds->add_option("--density", opt.density, "Odd prime p for the 6p+3 construction density");
  bounds->add_option("--tolerance", opt.tolerance);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageOrIo;
  }

  Timer timer;
  try {
    if (construct->parsed()) return cmd_construct(opt, out, err);
    if (check->parsed()) return cmd_check(opt, out, timer);
    if (closure_cmd->parsed()) return cmd_closure(opt, out, timer);
    if (expander->parsed()) return cmd_expander(opt, out, timer);
    if (search->parsed()) return cmd_search(opt, out, timer);
    if (bounds->parsed()) return cmd_bounds(opt, out, timer);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_validation_error() ? kInvalidSystem : kUsageOrIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  }
  return kUsageOrIo;
}

}  // namespace lts::cli
