// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fraccomp/cli.h"

#include <cstdint>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>
#include <utility>

#include "CLI11.hpp"
#include "fraccomp/coloring.h"
#include "fraccomp/complementation.h"
#include "fraccomp/domination.h"
#include "fraccomp/error.h"
#include "fraccomp/graph.h"
#include "fraccomp/hypergraph.h"
#include "fraccomp/linear_program.h"
#include "fraccomp/matroid.h"
#include "fraccomp/rational.h"
#include "fraccomp/vertex_cover.h"
#include "json.hpp"

namespace fraccomp::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::optional<int> b;
  std::optional<int> c;
  std::optional<std::string> spec;
  bool validate = false;
  std::optional<std::uint64_t> max_enum;
  std::string format = "json";
  std::optional<std::string> out;
  std::optional<std::string> emit;
};

// Uniform report: values are exact rationals, booleans are checks.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void SetStatus(std::string status) { status_ = std::move(status); }
  void Value(const std::string& name, const Rational& r) {
    values_.emplace_back(name, r);
  }
  void Value(const std::string& name, const mpz_class& z) {
    values_.emplace_back(name, Rational(z));
  }
  void Value(const std::string& name, std::int64_t v) {
    values_.emplace_back(name, Rational(static_cast<long>(v)));
  }
  void Bool(const std::string& name, bool b) { booleans_.emplace_back(name, b); }
  Json& witness() { return witness_; }
  void SetError(const std::string& code, const std::string& message) {
    status_ = "error";
    error_code_ = code;
    error_message_ = message;
  }

  std::string Render(const std::string& format) const {
    return format == "table" ? RenderTable() : RenderJson();
  }

 private:
  static Json RationalRecord(const Rational& r) {
    Json j;
    j["num"] = r.numerator().get_str();
    j["den"] = r.denominator().get_str();
    j["approx"] = r.ToDecimal();
    return j;
  }

  std::string RenderJson() const {
    Json j;
    j["command"] = command_;
    j["status"] = status_;
    Json values = Json::object();
    for (const auto& [name, r] : values_) values[name] = RationalRecord(r);
    j["values"] = std::move(values);
    Json booleans = Json::object();
    for (const auto& [name, b] : booleans_) booleans[name] = b;
    j["booleans"] = std::move(booleans);
    if (!witness_.is_null()) j["witness"] = witness_;
    if (status_ == "error") {
      j["error"] = {{"code", error_code_}, {"message", error_message_}};
    }
    return j.dump(2) + "\n";
  }

  std::string RenderTable() const {
    std::ostringstream s;
    s << "command  " << command_ << "\nstatus   " << status_ << "\n";
    for (const auto& [name, r] : values_) {
      s << name << " = " << r.ToString();
      if (!r.is_integer()) s << "  (" << r.ToDecimal() << ")";
      s << "\n";
    }
    for (const auto& [name, b] : booleans_) {
      s << name << " : " << (b ? "true" : "false") << "\n";
    }
    if (!witness_.is_null()) s << "witness  " << witness_.dump() << "\n";
    if (status_ == "error") {
      s << "error    " << error_code_ << ": " << error_message_ << "\n";
    }
    return s.str();
  }

  std::string command_;
  std::string status_ = "ok";
  std::vector<std::pair<std::string, Rational>> values_;
  std::vector<std::pair<std::string, bool>> booleans_;
  Json witness_;
  std::string error_code_;
  std::string error_message_;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

Json RationalList(std::span<const Rational> xs) {
  Json j = Json::array();
  for (const Rational& x : xs) j.push_back(x.ToString());
  return j;
}

Json SetList(const std::vector<VertexSet>& sets) {
  Json j = Json::array();
  for (const VertexSet& s : sets) j.push_back(s);
  return j;
}

int RequirePositive(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  if (*v < 1) throw UsageError(std::string(flag) + " must be >= 1");
  return *v;
}

Graph RequireGraph(const GraphFile& f) {
  if (const Graph* g = std::get_if<Graph>(&f)) return *g;
  throw UsageError("this command needs an undirected graph file");
}

// ---- lp -------------------------------------------------------------------

void LpSolve(const Options& o, Report& r) {
  const LinearProgram lp = ParseLinearProgram(ReadFile(o.input));
  const LpOutcome outcome = Solve(lp);
  if (const auto* opt = std::get_if<Optimal>(&outcome)) {
    r.Value("opt", opt->value);
    r.witness() = {{"x", RationalList(opt->solution)}};
  } else {
    r.SetStatus(std::string(OutcomeName(outcome)));
  }
}

void LpComplement(const Options& o, Report& r) {
  const LinearProgram lp = ParseLinearProgram(ReadFile(o.input));
  const std::string text = FormatLinearProgram(Complement(lp));
  r.witness() = {{"lp", text}};
  if (o.emit) WriteFile(*o.emit, text);
}

void LpVerify(const Options& o, Report& r) {
  const LinearProgram lp = ParseLinearProgram(ReadFile(o.input));
  const ComplementationReport c = VerifyComplementation(lp);
  if (const auto* p = std::get_if<Optimal>(&c.opt_p)) r.Value("opt_p", p->value);
  if (const auto* q = std::get_if<Optimal>(&c.opt_c)) r.Value("opt_c", q->value);
  if (c.identity_lhs) r.Value("identity_lhs", *c.identity_lhs);
  if (c.lp_case == ComplementationCase::kBothAboveOne) {
    r.Bool("identity", c.identity_holds);
    r.Bool("solution_maps", c.solution_maps);
  }
  if (c.dichotomy_holds) r.Bool("dichotomy", *c.dichotomy_holds);
  r.witness() = {{"case", std::string(CaseName(c.lp_case))},
                 {"p", std::string(OutcomeName(c.opt_p))},
                 {"complement", std::string(OutcomeName(c.opt_c))}};
}

void LpIpPair(const Options& o, Report& r) {
  const IpPairResult p = IpScaledPair(ParseLinearProgram(ReadFile(o.input)));
  r.Value("s", p.s);
  r.Value("t", p.t);
  r.Value("value", p.value);
  r.Bool("scaled_primal_feasible", p.scaled_primal_feasible);
  r.Bool("scaled_complement_feasible", p.scaled_complement_feasible);
  Json x = Json::array();
  for (const mpz_class& v : p.x_hat) x.push_back(v.get_str());
  r.witness() = {{"x_hat", x}};
}

// ---- game -----------------------------------------------------------------

void GameValueCommand(const Options& o, Report& r) {
  const GameValue v = SolveGame(ParseMatrixGame(ReadFile(o.input)));
  r.Value("value", v.value);
  r.witness() = {{"rose_strategy", RationalList(v.rose_strategy)}};
}

void GameVerify(const Options& o, Report& r) {
  const ComplementaryGameCheck c =
      CheckComplementaryGame(ParseMatrixGame(ReadFile(o.input)));
  r.Value("v", c.v);
  r.Value("v_bar", c.v_bar);
  r.Bool("sum_is_one", c.sum_is_one);
}

// ---- hyper ----------------------------------------------------------------

constexpr ParamKind kKinds[] = {ParamKind::kCovering, ParamKind::kPacking,
                                ParamKind::kMatching, ParamKind::kTransversal};

std::string ShortName(ParamKind kind) {
  switch (kind) {
    case ParamKind::kCovering: return "k";
    case ParamKind::kPacking: return "p";
    case ParamKind::kMatching: return "mu";
    case ParamKind::kTransversal: return "tau";
  }
  return "?";
}

void HyperParams(const Options& o, const EnumerationBudget& budget,
                 Report& r) {
  const Hypergraph h = ParseHypergraph(ReadFile(o.input));
  Json infinite = Json::array();
  for (ParamKind kind : kKinds) {
    const std::string name = ShortName(kind) + "_f";
    if (auto v = ExtendedFractionalParam(h, kind)) {
      r.Value(name, *v);
    } else {
      infinite.push_back(name);
    }
  }
  for (ParamKind kind : kKinds) {
    try {
      r.Value(ShortName(kind),
              static_cast<std::int64_t>(IntegerParam(h, kind, budget)));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kBudgetExceeded) throw;
      infinite.push_back(ShortName(kind));
    }
  }
  if (!infinite.empty()) r.witness() = {{"infinite", infinite}};
}

void HyperTransform(const Options& o, Report& r, bool dual) {
  const Hypergraph h = ParseHypergraph(ReadFile(o.input));
  const std::string text = FormatHypergraph(dual ? Dual(h) : Complement(h));
  r.witness() = {{"hypergraph", text}};
  if (o.emit) WriteFile(*o.emit, text);
}

void HyperVerify(const Options& o, Report& r) {
  const HypergraphComplementationReport c =
      VerifyHypergraphComplementation(ParseHypergraph(ReadFile(o.input)));
  Json infinite = Json::array();
  for (const ParameterIdentity& id : c.identities) {
    const std::string base = std::string(ParamName(id.kind));
    if (id.dual_value) {
      r.Value(base + "_dual", *id.dual_value);
    } else {
      infinite.push_back(base + "_dual");
    }
    if (id.complement_value) {
      r.Value(base + "_complement", *id.complement_value);
    } else {
      infinite.push_back(base + "_complement");
    }
    r.Value(base + "_lhs", id.lhs);
  }
  for (const ParameterIdentity& id : c.identities) {
    r.Bool(std::string(ParamName(id.kind)), id.holds);
  }
  r.Bool("all_hold", c.all_hold);
  if (!infinite.empty()) r.witness() = {{"infinite", infinite}};
}

void HyperChain(const Options& o, const EnumerationBudget& budget, Report& r) {
  const ChainReport c = VerifyChain(ParseHypergraph(ReadFile(o.input)), budget);
  r.Value("p", static_cast<std::int64_t>(c.packing));
  r.Value("alpha", c.alpha);
  r.Value("p_f", c.packing_f);
  r.Value("k_f", c.covering_f);
  r.Value("beta", c.beta);
  r.Value("k", static_cast<std::int64_t>(c.covering));
  const char* links[] = {"p_le_alpha", "alpha_le_p_f", "p_f_eq_k_f",
                         "k_f_le_beta", "beta_le_k"};
  for (size_t i = 0; i < c.links.size(); ++i) r.Bool(links[i], c.links[i]);
  r.Bool("holds", c.holds);
}

void HyperAlphaBeta(const Options& o, const EnumerationBudget& budget,
                    Report& r) {
  const AlphaBetaReport a =
      VerifyAlphaBeta(ParseHypergraph(ReadFile(o.input)), budget);
  r.Value("alpha_complement", a.alpha_complement);
  r.Value("beta_dual", a.beta_dual);
  r.Value("lhs", a.lhs);
  r.Bool("holds", a.holds);
}

// ---- matroid --------------------------------------------------------------

// A hypergraph file lists bases; a graph file gives the cycle matroid.
Matroid ReadMatroid(const Options& o, const EnumerationBudget& budget) {
  const std::string text = ReadFile(o.input);
  std::istringstream lines(text);
  std::string line;
  std::string first;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    if (tokens >> first && first[0] != '#') break;
    first.clear();
  }
  if (first == "hypergraph") return FromBases(ParseHypergraph(text), o.validate);
  return CycleMatroid(RequireGraph(ParseGraphFile(text)), budget);
}

void MatroidToughness(const Options& o, const EnumerationBudget& budget,
                      Report& r) {
  const Matroid m = ReadMatroid(o, budget);
  r.Value("sigma", EdgeToughness(m, budget));
  r.Value("rank", static_cast<std::int64_t>(m.rank()));
  r.Value("bases", static_cast<std::int64_t>(m.bases().size()));
}

void MatroidVerify(const Options& o, const EnumerationBudget& budget,
                   Report& r) {
  const Matroid m = ReadMatroid(o, budget);
  const MatroidTheoremReport t = VerifyMatroidTheorem(m, budget);
  r.Value("mu_f", t.matching_f);
  r.Value("tau_f", t.transversal_f);
  r.Value("sigma", t.toughness);
  if (t.covering_f) r.Value("k_f", *t.covering_f);
  if (t.alpha) r.Value("alpha", *t.alpha);
  r.Value("beta_dual", t.beta_dual);
  r.Bool("coincide", t.coincide);
  if (t.covering_equals_alpha) r.Bool("k_f_eq_alpha", *t.covering_equals_alpha);
  r.Bool("sigma_eq_beta_dual", t.toughness_equals_beta);
  r.Bool("dual_rank_formula", DualRankFormulaHolds(m, budget));
  r.Bool("all_hold", t.all_hold);
}

// ---- graph ----------------------------------------------------------------

void GraphDomination(const Options& o, Report& r) {
  const GraphFile f = ParseGraphFile(ReadFile(o.input));
  const Digraph d = std::holds_alternative<Graph>(f)
                        ? ToSymmetricDigraph(std::get<Graph>(f))
                        : std::get<Digraph>(f);
  if (o.spec) {
    const NeighborhoodSpec spec = ParseSpec(*o.spec);
    r.Value("domination", FractionalDomination(d, spec));
    r.witness() = {{"spec", SpecName(spec)}};
    return;
  }
  const DominationReport rep = VerifyDomination(d);
  r.Value("gamma_in", rep.gamma_in);
  r.Value("total_out_complement", rep.upper_out_complement);
  r.Value("lhs", rep.lhs);
  if (rep.upper_in) r.Value("total_in", *rep.upper_in);
  if (rep.upper_out) r.Value("total_out", *rep.upper_out);
  r.Bool("identity", rep.identity_holds);
  if (rep.tournament_holds) r.Bool("tournament", *rep.tournament_holds);
  if (rep.regular_holds) r.Bool("regular", *rep.regular_holds);
  r.Bool("all_hold", rep.all_hold);
}

void GraphChromatic(const Options& o, const EnumerationBudget& budget,
                    Report& r) {
  const Graph g = RequireGraph(ParseGraphFile(ReadFile(o.input)));
  const KappaResult k = KappaF(g, budget);
  const KappaBoundsReport b = KappaBounds(g, budget);
  r.Value("chi", static_cast<std::int64_t>(b.chi));
  r.Value("chi_f", k.chi_f);
  r.Value("kappa_f", k.kappa);
  r.Value("omega", static_cast<std::int64_t>(b.omega));
  r.Value("alpha", static_cast<std::int64_t>(b.alpha));
  r.Bool("identity", k.identity_holds);
  r.Bool("chi_bound", b.chi_bound_holds);
  r.Bool("alpha_bound", b.alpha_bound_holds);
  r.Bool("omega_bound", b.omega_bound_holds);
  if (b.log_bound) r.Bool("log_bound", b.log_bound_holds);
}

void GraphCFold(const Options& o, const EnumerationBudget& budget, Report& r) {
  const Graph g = RequireGraph(ParseGraphFile(ReadFile(o.input)));
  const int c = RequirePositive(o.c, "--c");
  r.Value("chi_c", static_cast<std::int64_t>(CFoldChromatic(g, c, budget)));
}

void GraphBudget(const Options& o, const EnumerationBudget& budget, Report& r) {
  const Graph g = RequireGraph(ParseGraphFile(ReadFile(o.input)));
  const BudgetCoverResult res =
      BudgetCover(g, RequirePositive(o.b, "--b"), budget);
  r.Value("t", static_cast<std::int64_t>(res.t));
  r.Value("c", static_cast<std::int64_t>(res.c));
  r.Value("budget_used", static_cast<std::int64_t>(res.witness.budget_used));
  r.witness() = {{"covers", SetList(res.witness.covers)}};
}

void GraphToughness(const Options& o, const EnumerationBudget& budget,
                    Report& r) {
  const Graph g = RequireGraph(ParseGraphFile(ReadFile(o.input)));
  r.Value("sigma", EdgeToughness(g, budget));
}

void GraphVerifyBudget(const Options& o, const EnumerationBudget& budget,
                       Report& r) {
  const Graph g = RequireGraph(ParseGraphFile(ReadFile(o.input)));
  const BudgetReport rep = VerifyBudget(g, RequirePositive(o.b, "--b"), budget);
  r.Value("kappa_f", rep.kappa);
  r.Value("chi", static_cast<std::int64_t>(rep.chi));
  r.Value("omega", static_cast<std::int64_t>(rep.omega));
  r.Value("search_limit", static_cast<std::int64_t>(rep.search_limit));
  if (rep.beta) r.Value("beta", static_cast<std::int64_t>(*rep.beta));
  Json rows = Json::array();
  bool floors = true;
  bool ratio = true;
  bool iff = true;
  bool witnesses = true;
  for (const BudgetRow& row : rep.rows) {
    rows.push_back({{"b", row.b},
                    {"t", row.t},
                    {"floor_lower", row.floor_lower},
                    {"floor_upper", row.floor_upper}});
    floors = floors && row.floors_hold;
    ratio = ratio && row.ratio_within_kappa;
    iff = iff && row.iff_holds;
    witnesses = witnesses && row.witness_valid;
  }
  r.Bool("floor_bounds", floors);
  r.Bool("ratio_within_kappa", ratio);
  r.Bool("iff", iff);
  r.Bool("witnesses_valid", witnesses);
  r.Bool("monotone_scan", rep.monotone_scan_holds);
  if (rep.beta_multiples_hold) r.Bool("beta_multiples", *rep.beta_multiples_hold);
  r.Bool("bipartite", rep.bipartite);
  r.Bool("bipartite_equivalence", rep.bipartite_equivalence_holds);
  r.Bool("all_hold", rep.all_hold);
  r.witness() = {{"rows", rows}, {"chi_c", rep.chi_c}};
}

using Handler = std::function<void(const Options&, const EnumerationBudget&,
                                   Report&)>;

struct Command {
  std::string group;
  std::string name;
  std::string help;
  Handler handler;
};

template <typename F>
Handler Plain(F f) {
  return [f](const Options& o, const EnumerationBudget&, Report& r) { f(o, r); };
}

std::vector<Command> Commands() {
  return {
      {"lp", "solve", "Solve an LP exactly", Plain(LpSolve)},
      {"lp", "complement", "Complement an LP", Plain(LpComplement)},
      {"lp", "verify", "Check the complementation identity", Plain(LpVerify)},
      {"lp", "ip-pair", "Scaled integer solutions of P and its complement",
       Plain(LpIpPair)},
      {"game", "value", "Value of a zero-sum game", Plain(GameValueCommand)},
      {"game", "verify", "Check V + V-bar = 1", Plain(GameVerify)},
      {"hyper", "params", "Fractional and integer parameters", HyperParams},
      {"hyper", "dual", "Dual hypergraph",
       Plain([](const Options& o, Report& r) { HyperTransform(o, r, true); })},
      {"hyper", "complement", "Complement hypergraph",
       Plain([](const Options& o, Report& r) { HyperTransform(o, r, false); })},
      {"hyper", "verify", "Check the four parameter identities",
       Plain(HyperVerify)},
      {"hyper", "chain", "Check p <= alpha <= p_f = k_f <= beta <= k",
       HyperChain},
      {"hyper", "alphabeta", "Check 1/alpha(complement) + 1/beta(dual) = 1",
       HyperAlphaBeta},
      {"matroid", "toughness", "Edge toughness of a matroid",
       MatroidToughness},
      {"matroid", "verify", "Check mu_f = tau_f = edge toughness",
       MatroidVerify},
      {"graph", "domination", "Fractional domination identities",
       Plain(GraphDomination)},
      {"graph", "chromatic", "chi, chi_f, kappa_f and bounds", GraphChromatic},
      {"graph", "cfold", "c-fold chromatic number", GraphCFold},
      {"graph", "budget", "Budgeted vertex cover number", GraphBudget},
      {"graph", "toughness", "Edge toughness of a graph", GraphToughness},
      {"graph", "verify-budget", "Check the budgeted cover propositions",
       GraphVerifyBudget},
  };
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return kExitUsage;
    case ErrorCode::kBudgetExceeded: return kExitBudget;
    default: return kExitDomainError;
  }
}

std::optional<std::uint64_t> BudgetFromEnvironment() {
  const char* env = std::getenv("FRACCOMP_MAX_ENUM");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0 || env[0] == '-') {
    throw UsageError("FRACCOMP_MAX_ENUM must be a positive integer");
  }
  return v;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact LP complementation and fractional graph theory toolkit",
               "fraccomp"};
  app.require_subcommand(1);
  Options options;
  app.add_option("--b", options.b, "Budget b (graph budget) or b_max");
  app.add_option("--c", options.c, "Multiplicity c (graph cfold)");
  app.add_option("--spec", options.spec,
                 "Neighborhood: in-open, in-closed, out-open, out-closed");
  app.add_flag("--validate", options.validate,
               "Check the basis exchange axiom on matroid input");
  app.add_option("--max-enum", options.max_enum,
                 "Enumeration budget (default 2^22)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", options.format, "Report format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", options.out, "Write the report to this file");
  app.add_option("--emit", options.emit,
                 "Write the transformed LP or hypergraph file here");

  const std::vector<Command> commands = Commands();
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const Command*>> leaves;
  for (const Command& cmd : commands) {
    CLI::App*& group = groups[cmd.group];
    if (group == nullptr) {
      group = app.add_subcommand(cmd.group, cmd.group + " commands");
      group->require_subcommand(1);
      group->fallthrough();
    }
    CLI::App* leaf = group->add_subcommand(cmd.name, cmd.help);
    leaf->add_option("input", options.input, "Input file")->required();
    leaf->fallthrough();
    leaves.emplace_back(leaf, &cmd);
  }

  std::vector<const char*> argv = {"fraccomp"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fraccomp: " << e.what() << "\n";
    return kExitUsage;
  }

  const Command* chosen = nullptr;
  for (const auto& [leaf, cmd] : leaves) {
    if (leaf->parsed()) chosen = cmd;
  }
  if (chosen == nullptr) {
    err << "fraccomp: no command given\n";
    return kExitUsage;
  }

  Report report(chosen->group + " " + chosen->name);
  int code = kExitOk;
  try {
    EnumerationBudget budget;
    if (auto env = BudgetFromEnvironment()) budget.max_enum = *env;
    if (options.max_enum) budget.max_enum = *options.max_enum;
    chosen->handler(options, budget, report);
  } catch (const UsageError& e) {
    err << "fraccomp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    report.SetError(std::string(ErrorCodeName(e.code())), e.what());
    err << "fraccomp: " << e.what() << "\n";
    code = ExitCodeFor(e.code());
  }

  const std::string text = report.Render(options.format);
  if (options.out) {
    try {
      WriteFile(*options.out, text);
    } catch (const UsageError& e) {
      err << "fraccomp: " << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    out << text;
  }
  return code;
}

}  // namespace fraccomp::cli
