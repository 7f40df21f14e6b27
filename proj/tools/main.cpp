#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "constrict/analysis.hpp"
#include "constrict/campaigns.hpp"
#include "constrict/capacity.hpp"
#include "constrict/errors.hpp"
#include "constrict/extension.hpp"
#include "constrict/model.hpp"
#include "constrict/model_io.hpp"
#include "constrict/pooling.hpp"
#include "constrict/rational.hpp"
#include "constrict/updating.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace constrict;

constexpr int kOk = 0;
constexpr int kNegative = 1;  // computed fine, but the verdict says no
constexpr int kInputError = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

json jrat(const Rational& q) {
  return json{{"exact", to_string(q)}, {"decimal", decimal_string(q)}};
}

json jinterval(const ProbInterval& I) {
  return json{{"lo", jrat(I.lo)}, {"hi", jrat(I.hi)}};
}

json jrow(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::string trat(const Rational& q) {
  return to_string(q) + " (" + decimal_string(q) + ")";
}

std::string tinterval(const ProbInterval& I) {
  return "[" + trat(I.lo) + ", " + trat(I.hi) + "]";
}

std::string trow(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

json report_head(const std::string& command,
                 std::optional<std::uint64_t> seed) {
  json j;
  j["schema"] = 1;
  j["version"] = CONSTRICT_VERSION;
  j["command"] = command;
  j["seed"] = seed ? json(*seed) : json(nullptr);
  j["decimal_note"] = "decimal renderings are display only";
  return j;
}

std::string text_head(const std::string& command,
                      std::optional<std::uint64_t> seed) {
  std::string out = "constrict " + command + " (version " CONSTRICT_VERSION ")\n";
  out += "seed: " + (seed ? std::to_string(*seed) : std::string("none")) + "\n";
  out += "decimals in parentheses are display only\n\n";
  return out;
}

void emit(const std::string& format, const json& j, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

Event resolve_event(const ModelFile& mf, const std::string& text) {
  auto it = mf.events.find(text);
  if (it != mf.events.end()) return it->second;
  return parse_event(mf.space, text);
}

Partition resolve_partition(const ModelFile& mf, const std::string& text) {
  auto it = mf.partitions.find(text);
  if (it != mf.partitions.end()) return it->second;
  return parse_partition(mf.space, split(text, ','));
}

std::vector<UpdateRule> parse_rules(const std::string& text) {
  std::vector<UpdateRule> rules;
  for (const auto& name : split(text, ','))
    rules.push_back(rule_from_name(name));
  if (rules.empty()) throw ValidationError("empty rule list");
  return rules;
}

bool expect_matches(const std::string& expect, VerdictKind k) {
  if (expect == "constriction")
    return k == VerdictKind::StrictConstriction ||
           k == VerdictKind::WeakConstriction;
  if (expect == "dilation")
    return k == VerdictKind::StrictDilation || k == VerdictKind::WeakDilation;
  return kind_name(k) == expect;
}

TransferFunction transfer_from_spec(const std::string& spec,
                                    const StateSpace& space,
                                    const Event& evidence) {
  if (spec == "dempster-style" || spec == "uniform-within-E")
    return TransferFunction::builtin(spec, space.size(), evidence);
  return load_transfer(spec, space);
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
  std::string model, event, partition;
  std::string rules = "bayes";
  std::string transfer = "dempster-style";
  std::string expect;
};

int run_analyze(const AnalyzeOpts& o, const std::string& format) {
  ModelFile mf = load_model(o.model);
  Event A = resolve_event(mf, o.event);
  Partition part = resolve_partition(mf, o.partition);
  std::vector<UpdateRule> rules = parse_rules(o.rules);
  BeliefState state = mf.state();

  json j = report_head("analyze", std::nullopt);
  j["model"] = o.model;
  j["event"] = event_string(mf.space, A);
  json jblocks = json::array();
  for (const Event& b : part.blocks()) jblocks.push_back(event_string(mf.space, b));
  j["partition"] = jblocks;
  if (!o.expect.empty()) j["expected"] = o.expect;

  std::string text = text_head("analyze", std::nullopt);
  text += "model: " + o.model + "\n";
  text += "event: " + event_string(mf.space, A) + "\n";
  text += "partition:";
  for (const Event& b : part.blocks()) text += " " + event_string(mf.space, b);
  text += "\n";

  std::size_t width = 5;
  for (const Event& b : part.blocks())
    width = std::max(width, event_string(mf.space, b).size());

  bool all_match = true;
  json jresults = json::array();
  for (UpdateRule rule : rules) {
    PartitionReport rep =
        classify_partition(state, A, part, rule, o.transfer);
    json jr;
    jr["rule"] = rule_name(rule);
    jr["prior"] = jinterval(rep.prior);
    json jb = json::array();
    for (const BlockOutcome& b : rep.blocks)
      jb.push_back(json{{"block", event_string(mf.space, b.block)},
                        {"interval", jinterval(b.interval)},
                        {"kind", kind_name(b.kind)}});
    jr["blocks"] = jb;
    json js = json::array();
    for (const Event& b : rep.skipped) js.push_back(event_string(mf.space, b));
    jr["skipped"] = js;
    jr["pointwise"] = kind_name(rep.pointwise);
    jr["merely_pointwise"] = rep.merely_pointwise;
    jr["uniform"] = json{{"kind", kind_name(rep.uniform.kind)},
                         {"before", jinterval(rep.uniform.before)},
                         {"after", jinterval(rep.uniform.after)}};
    if (!o.expect.empty()) {
      bool m = expect_matches(o.expect, rep.uniform.kind);
      jr["matches_expectation"] = m;
      all_match = all_match && m;
    }
    jresults.push_back(jr);

    std::ostringstream ts;
    ts << "\nrule " << rule_name(rule) << "\n";
    ts << "  prior: " << tinterval(rep.prior) << "\n";
    for (const BlockOutcome& b : rep.blocks)
      ts << "  block " << std::left << std::setw(static_cast<int>(width))
         << event_string(mf.space, b.block) << "  "
         << tinterval(b.interval) << "  " << kind_name(b.kind) << "\n";
    for (const Event& b : rep.skipped)
      ts << "  block " << std::left << std::setw(static_cast<int>(width))
         << event_string(mf.space, b) << "  skipped (upper probability 0)\n";
    ts << "  pointwise: " << kind_name(rep.pointwise)
       << (rep.merely_pointwise ? " (merely pointwise)" : "") << "\n";
    ts << "  uniform:   " << kind_name(rep.uniform.kind) << "  "
       << tinterval(rep.uniform.before) << " -> "
       << tinterval(rep.uniform.after) << "\n";
    if (!o.expect.empty())
      ts << "  expectation '" << o.expect << "': "
         << (expect_matches(o.expect, rep.uniform.kind) ? "matched"
                                                        : "not matched")
         << "\n";
    text += ts.str();
  }
  j["results"] = jresults;

  emit(format, j, text);
  return (!o.expect.empty() && !all_match) ? kNegative : kOk;
}

// ----------------------------------------------------------------- update

struct UpdateOpts {
  std::string model, rule, evidence, transfer, out, log;
};

int run_update(const UpdateOpts& o, const std::string& format) {
  ModelFile mf = load_model(o.model);
  UpdateRule rule = rule_from_name(o.rule);
  Event E = resolve_event(mf, o.evidence);
  std::optional<TransferFunction> tf;
  if (rule == UpdateRule::Imaging) {
    if (o.transfer.empty())
      throw ValidationError(
          "imaging needs --transfer (a builtin name or a file)");
    tf = transfer_from_spec(o.transfer, mf.space, E);
  }
  UpdateRecord rec = apply_update(mf.state(), rule, E, tf);
  std::string posterior_text = state_to_model_json(mf.space, rec.posterior);
  json posterior_obj = json::parse(posterior_text);

  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + o.out + "'");
    f << posterior_text;
  }
  if (!o.log.empty()) {
    json entry;
    entry["schema"] = 1;
    entry["version"] = CONSTRICT_VERSION;
    entry["rule"] = rule_name(rule);
    entry["evidence"] = event_string(mf.space, E);
    entry["prior"] = json::parse(state_to_model_json(mf.space, rec.prior));
    entry["posterior"] = posterior_obj;
    std::ofstream f(o.log, std::ios::binary | std::ios::app);
    if (!f) throw ValidationError("cannot write '" + o.log + "'");
    f << entry.dump() << "\n";
  }

  json j = report_head("update", std::nullopt);
  j["model"] = o.model;
  j["rule"] = rule_name(rule);
  j["evidence"] = event_string(mf.space, E);
  j["posterior"] = posterior_obj;
  j["out"] = o.out.empty() ? json(nullptr) : json(o.out);
  j["log"] = o.log.empty() ? json(nullptr) : json(o.log);

  std::string text = text_head("update", std::nullopt);
  text += "model: " + o.model + "\n";
  text += "rule: " + rule_name(rule) + "\n";
  text += "evidence: " + event_string(mf.space, E) + "\n";
  if (!o.out.empty()) text += "posterior written to: " + o.out + "\n";
  if (!o.log.empty()) text += "log entry appended to: " + o.log + "\n";
  text += "posterior:\n" + posterior_text;

  emit(format, j, text);
  return kOk;
}

// ----------------------------------------------------------------- bounds

struct BoundsOpts {
  std::string assessment, target;
};

int run_bounds(const BoundsOpts& o, const std::string& format) {
  Assessment a = load_assessment(o.assessment);
  if (!o.target.empty()) a.target = parse_event(a.space, o.target);
  if (a.target.is_empty())
    throw ValidationError(
        "no target event: give --target or a 'target' field in the file");
  DeFinettiResult res = definetti_bounds(a);

  json j = report_head("bounds", std::nullopt);
  j["assessment"] = o.assessment;
  j["target"] = event_string(a.space, a.target);
  j["feasible"] = res.feasible;
  if (res.feasible) {
    j["bounds"] = jinterval(res.bounds);
    j["determined"] = res.determined;
  }

  std::string text = text_head("bounds", std::nullopt);
  text += "assessment: " + o.assessment + "\n";
  text += "target: " + event_string(a.space, a.target) + "\n";
  if (res.feasible) {
    text += "feasible: yes\n";
    text += "bounds: " + tinterval(res.bounds) + "\n";
    text += std::string("determined: ") + (res.determined ? "yes" : "no") +
            "\n";
  } else {
    text += "feasible: no (the assessment is incoherent)\n";
  }

  emit(format, j, text);
  return res.feasible ? kOk : kNegative;
}

// ----------------------------------------------------------------- select

struct SelectOpts {
  std::string model, point;
};

CredalSet credal_from_model(const ModelFile& mf) {
  if (mf.kind == ModelKind::Mass) {
    SetFunction bel = belief_from_mass(*mf.mass);
    return core_vertices(bel, mf.space);
  }
  return std::get<CredalSet>(mf.state());
}

int run_select(const SelectOpts& o, const std::string& format) {
  ModelFile mf = load_model(o.model);
  CredalSet C = credal_from_model(mf);

  json j = report_head("select", std::nullopt);
  j["model"] = o.model;
  j["point"] = o.point;
  std::string text = text_head("select", std::nullopt);
  text += "model: " + o.model + "\n";
  text += "point: " + o.point + "\n";

  if (o.point == "maxent") {
    MaxEntResult res = maxent_select(C);
    j["measure"] = jrow(res.measure.weights());
    j["weights"] = jrow(res.weights);
    j["entropy"] = res.entropy;
    j["duality_gap"] = res.duality_gap;
    j["approximate"] = res.approximate;
    std::ostringstream ts;
    ts << "measure: " << trow(res.measure.weights()) << "\n";
    ts << "vertex weights: " << trow(res.weights) << "\n";
    ts << "entropy: " << std::setprecision(15) << res.entropy << "\n";
    ts << "duality gap: " << std::setprecision(6) << res.duality_gap << "\n";
    ts << "approximate: " << (res.approximate ? "yes" : "no")
       << (res.approximate
               ? " (the entropy objective is evaluated in floating point)"
               : "")
       << "\n";
    text += ts.str();
    emit(format, j, text);
    return kOk;
  }

  Measure Pstar = [&]() -> Measure {
    if (o.point.rfind("pool:", 0) == 0) {
      std::vector<Rational> w;
      for (const auto& s : split(o.point.substr(5), ','))
        w.push_back(parse_rational(s));
      return convex_pool(C.vertices(), w);
    }
    ModelFile pf = load_model(o.point);
    if (pf.kind != ModelKind::SingleMeasure)
      throw ValidationError("point file '" + o.point +
                            "' must carry a single 'measure'");
    if (!(pf.space == mf.space))
      throw ValidationError("point file atoms do not match the model");
    return *pf.measure;
  }();

  SelectionReport rep = selection_classify(C, Pstar);
  j["measure"] = jrow(Pstar.weights());
  json je = json::array();
  for (const Measure& v : rep.extremes.vertices()) je.push_back(jrow(v.weights()));
  j["extreme_points"] = je;
  j["weights"] = jrow(rep.weights);
  j["min_weight"] = jrat(rep.min_weight);
  j["strictly_inside"] = rep.strictly_inside;
  json jw = json::array();
  for (const Event& e : rep.weak_events) jw.push_back(event_string(mf.space, e));
  j["weak_events"] = jw;
  json jd = json::array();
  for (const Event& e : rep.degenerate_events)
    jd.push_back(event_string(mf.space, e));
  j["degenerate_events"] = jd;
  j["strict_for_all_nondegenerate"] = rep.strict_for_all_nondegenerate;

  std::ostringstream ts;
  ts << "measure: " << trow(Pstar.weights()) << "\n";
  ts << "extreme points: " << rep.extremes.vertex_count() << "\n";
  ts << "decomposition weights: " << trow(rep.weights) << "\n";
  ts << "largest attainable minimum weight: " << trat(rep.min_weight) << "\n";
  ts << "strictly inside: " << (rep.strictly_inside ? "yes" : "no") << "\n";
  ts << "weak events:";
  if (rep.weak_events.empty()) ts << " none";
  for (const Event& e : rep.weak_events) ts << " " << event_string(mf.space, e);
  ts << "\n";
  ts << "degenerate events:";
  if (rep.degenerate_events.empty()) ts << " none";
  for (const Event& e : rep.degenerate_events)
    ts << " " << event_string(mf.space, e);
  ts << "\n";
  ts << "strict constriction on every nondegenerate event: "
     << (rep.strict_for_all_nondegenerate ? "yes" : "no") << "\n";
  text += ts.str();

  emit(format, j, text);
  return rep.strict_for_all_nondegenerate ? kOk : kNegative;
}

// ------------------------------------------------------------------- pool

struct PoolOpts {
  std::string weights, opinions, event;
  int steps = 16;
};

int run_pool(const PoolOpts& o, const std::string& format) {
  WeightMatrix W = load_weights(o.weights);
  OpinionFile of = load_opinions(o.opinions);
  Event A = [&] {
    auto it = of.events.find(o.event);
    if (it != of.events.end()) return it->second;
    return parse_event(of.profile.space, o.event);
  }();

  NestingTrace tr = nesting_trace(W, of.profile, A, o.steps);
  ConsensusCondition cc = consensus_condition(W);
  StationaryResult st = stationary_vector(W);

  json j = report_head("pool", std::nullopt);
  j["weights"] = o.weights;
  j["opinions"] = o.opinions;
  j["event"] = event_string(of.profile.space, A);
  j["steps"] = o.steps;
  json jtr = json::array();
  for (std::size_t n = 0; n < tr.intervals.size(); ++n)
    jtr.push_back(json{{"round", n}, {"interval", jinterval(tr.intervals[n])}});
  j["trace"] = jtr;
  j["weakly_nested"] = tr.weakly_nested;
  j["first_strict_from"] = tr.first_strict_from;
  j["first_strict_at"] = tr.first_strict_at;
  j["consensus_condition"] = json{{"holds", cc.holds},
                                  {"holds_at", cc.holds_at},
                                  {"checked_up_to", cc.checked_up_to}};
  json jst;
  jst["unique"] = st.unique;
  jst["solution_dim"] = st.solution_dim;
  if (st.unique) {
    jst["pi"] = jrow(st.pi);
    Measure lim = consensus_limit(W, of.profile);
    j["limit_opinion"] = jrow(lim.weights());
    j["limit_value"] = jrat(lim(A));
  }
  j["stationary"] = jst;

  std::string text = text_head("pool", std::nullopt);
  text += "weights: " + o.weights + "\n";
  text += "opinions: " + o.opinions + "\n";
  text += "event: " + event_string(of.profile.space, A) + "\n\n";
  std::ostringstream ts;
  ts << "round  interval\n";
  for (std::size_t n = 0; n < tr.intervals.size(); ++n)
    ts << std::right << std::setw(5) << n << "  "
       << tinterval(tr.intervals[n]) << "\n";
  ts << "weakly nested: " << (tr.weakly_nested ? "yes" : "no") << "\n";
  if (tr.first_strict_at >= 0)
    ts << "first strict narrowing: round " << tr.first_strict_from << " -> "
       << tr.first_strict_at << "\n";
  else
    ts << "first strict narrowing: none\n";
  if (cc.holds)
    ts << "consensus condition: holds at power " << cc.holds_at << "\n";
  else
    ts << "consensus condition: fails up to power " << cc.checked_up_to
       << "\n";
  if (st.unique) {
    ts << "stationary vector: " << trow(st.pi) << "\n";
    Measure lim = consensus_limit(W, of.profile);
    ts << "limit opinion: " << trow(lim.weights()) << "\n";
    ts << "limit value for the event: " << trat(lim(A)) << "\n";
  } else {
    ts << "stationary vector: not unique (solution dimension "
       << st.solution_dim << ")\n";
  }
  text += ts.str();

  emit(format, j, text);
  return cc.holds ? kOk : kNegative;
}

// ------------------------------------------------------------------ check

struct CheckOpts {
  std::string theorem;
  int trials = 200;
  std::uint64_t seed = 0;
};

int run_campaign_report(const CheckOpts& o, const std::string& format) {
  CampaignResult res = run_check(o.theorem, o.seed, o.trials);

  json j = report_head("check", o.seed);
  j["theorem"] = res.name;
  j["trials"] = res.trials;
  j["checked"] = res.checked;
  j["violations"] = res.violations;
  json jc = json::object();
  for (const auto& [k, v] : res.counters) jc[k] = v;
  j["counters"] = jc;
  json jn = json::array();
  for (const auto& n : res.notes) jn.push_back(n);
  j["notes"] = jn;
  j["pass"] = res.ok();

  std::string text = text_head("check", o.seed);
  std::ostringstream ts;
  ts << "campaign " << res.name << "\n";
  ts << "trials: " << res.trials << "  checks: " << res.checked
     << "  violations: " << res.violations << "\n";
  for (const auto& [k, v] : res.counters) ts << k << ": " << v << "\n";
  for (const auto& n : res.notes) ts << "note: " << n << "\n";
  ts << "result: " << (res.ok() ? "pass" : "fail") << "\n";
  text += ts.str();

  emit(format, j, text);
  return res.ok() ? kOk : kNegative;
}

// ------------------------------------------------------------------- demo

struct DemoOpts {
  std::string grid = "9/20,1/2,11/20";
  int count = 16;
};

int run_demo(const DemoOpts& o, const std::string& format) {
  std::vector<Rational> grid;
  for (const auto& s : split(o.grid, ',')) grid.push_back(parse_rational(s));
  OpenSetReport rep = open_set_demo(grid, o.count);

  json j = report_head("demo", std::nullopt);
  j["grid"] = jrow(grid);
  j["count"] = o.count;
  j["q"] = jrow(rep.q);
  j["q_inf"] = jrat(rep.q_inf);
  j["q_sup"] = jrat(rep.q_sup);
  json jp = json::array();
  for (const OpenSetPoint& p : rep.points) {
    json e;
    e["x"] = to_string(p.x);
    e["feasible"] = p.feasible;
    if (p.feasible) {
      e["given_a"] = jrow(p.given_a);
      e["given_not_a"] = jrow(p.given_not_a);
      e["posterior"] = jrow(p.posterior);
    }
    jp.push_back(e);
  }
  j["points"] = jp;
  j["all_feasible"] = rep.all_feasible;
  j["posteriors_exact"] = rep.posteriors_exact;
  j["inside_open_interval"] = rep.inside_open_interval;

  std::string text = text_head("demo", std::nullopt);
  std::ostringstream ts;
  ts << "enumerated posteriors q_1.." << rep.q.size() << ": " << trow(rep.q)
     << "\n";
  ts << "inf: " << trat(rep.q_inf) << "  sup: " << trat(rep.q_sup) << "\n";
  for (const OpenSetPoint& p : rep.points) {
    ts << "x = " << trat(p.x) << ": "
       << (p.feasible ? "feasible, posterior after outcome n is exactly q_n"
                      : "infeasible (the q_n do not straddle x)")
       << "\n";
  }
  ts << "all grid points feasible: " << (rep.all_feasible ? "yes" : "no")
     << "\n";
  ts << "posteriors exact: " << (rep.posteriors_exact ? "yes" : "no") << "\n";
  ts << "inf and sup strictly inside (2/5, 3/5): "
     << (rep.inside_open_interval ? "yes" : "no") << "\n";
  text += ts.str();

  emit(format, j, text);
  return (rep.all_feasible && rep.posteriors_exact &&
          rep.inside_open_interval)
             ? kOk
             : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact imprecise-probability toolkit"};
  app.set_version_flag("--version", std::string(CONSTRICT_VERSION));
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  AnalyzeOpts an;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify an event under a partition and update rules");
  analyze->fallthrough();
  analyze->add_option("--model", an.model, "model file")->required();
  analyze->add_option("--event", an.event, "target event (name or a|b syntax)")
      ->required();
  analyze
      ->add_option("--partition", an.partition,
                   "partition (name or comma-separated blocks)")
      ->required();
  analyze->add_option("--rules", an.rules, "comma list of update rules")
      ->capture_default_str();
  analyze
      ->add_option("--transfer", an.transfer,
                   "imaging transfer: builtin name or file")
      ->capture_default_str();
  analyze
      ->add_option("--expect", an.expect,
                   "exit 1 unless every rule's uniform verdict matches")
      ->check(CLI::IsMember({"constriction", "dilation", "strict-constriction",
                             "weak-constriction", "strict-dilation",
                             "weak-dilation", "neither"}));

  UpdateOpts up;
  CLI::App* update = app.add_subcommand(
      "update", "condition a model on evidence and emit the posterior");
  update->fallthrough();
  update->add_option("--model", up.model, "model file")->required();
  update->add_option("--rule", up.rule, "bayes, geometric, dempster or imaging")
      ->required();
  update->add_option("--evidence", up.evidence, "evidence event")->required();
  update->add_option("--transfer", up.transfer,
                     "imaging transfer: builtin name or file");
  update->add_option("--out", up.out, "write the posterior model here");
  update->add_option("--log", up.log, "append an update record here");

  BoundsOpts bo;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "coherent probability range of a target event");
  bounds->fallthrough();
  bounds->add_option("--assessment", bo.assessment, "assessment file")
      ->required();
  bounds->add_option("--target", bo.target,
                     "target event (overrides the file's target)");

  SelectOpts se;
  CLI::App* select = app.add_subcommand(
      "select", "classify picking a single measure from a credal set");
  select->fallthrough();
  select->add_option("--model", se.model, "model file")->required();
  select
      ->add_option("--point", se.point,
                   "measure file, 'maxent', or 'pool:w1,w2,...'")
      ->required();

  PoolOpts po;
  CLI::App* pool = app.add_subcommand(
      "pool", "iterate weighted opinion revision and report consensus");
  pool->fallthrough();
  pool->add_option("--weights", po.weights, "weight matrix file")->required();
  pool->add_option("--opinions", po.opinions, "opinion profile file")
      ->required();
  pool->add_option("--event", po.event, "event to trace")->required();
  pool->add_option("--steps", po.steps, "revision rounds to trace")
      ->check(CLI::Range(1, 10000))
      ->capture_default_str();

  CheckOpts ch;
  CLI::App* check = app.add_subcommand(
      "check", "run a seeded property campaign");
  check->fallthrough();
  check->add_option("--theorem", ch.theorem, "campaign name")
      ->check(CLI::IsMember(known_checks()))
      ->required();
  check->add_option("--trials", ch.trials, "instances to generate")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  check->add_option("--seed", ch.seed, "campaign seed")->required();

  DemoOpts de;
  CLI::App* demo = app.add_subcommand(
      "demo", "posterior values filling a dense subset of an open interval");
  demo->fallthrough();
  demo->add_option("--grid", de.grid, "comma list of prior values in (0,1)")
      ->capture_default_str();
  demo->add_option("--count", de.count, "how many rationals to enumerate")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*analyze) return run_analyze(an, format);
    if (*update) return run_update(up, format);
    if (*bounds) return run_bounds(bo, format);
    if (*select) return run_select(se, format);
    if (*pool) return run_pool(po, format);
    if (*check) return run_campaign_report(ch, format);
    if (*demo) return run_demo(de, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
