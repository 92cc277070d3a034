#include "fixcomb/harness.hpp"

#include "fixcomb/generators.hpp"
#include "fixcomb/geometry.hpp"

#include "json.hpp"

#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fixcomb {

const char* kToolVersion = "0.1.0";

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["command"] = cfg.command;
  j["generator"] = cfg.generator;
  j["theorem"] = cfg.theorem ? ordered_json(theorem_name(*cfg.theorem)) : ordered_json(nullptr);
  j["shell"] = cfg.shell ? ordered_json(shell_config_name(*cfg.shell)) : ordered_json(nullptr);
  j["rule"] = cfg.rule;
  j["labels"] = cfg.labels;
  j["m"] = cfg.m;
  j["max_size"] = cfg.max_size;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["exhaustive"] = cfg.exhaustive;
  j["budget"] = cfg.budget;
  j["search_nonforbidden"] = cfg.search_nonforbidden;
  return j;
}

RunResult finish(const RunConfig& cfg, const std::string& status, int code, ordered_json payload) {
  ordered_json j;
  j["tool"] = "fixcomb";
  j["version"] = kToolVersion;
  j["config"] = config_json(cfg);
  j["status"] = status;
  j["payload"] = std::move(payload);
  return RunResult{code, status, j.dump(2)};
}

LabelSetDescriptor parse_labels_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw std::invalid_argument("label spec must look like cross:M or cube:M, got '" + text + "'");
  const std::string family = text.substr(0, colon);
  int m = 0;
  try {
    std::size_t used = 0;
    m = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("label spec has a malformed dimension: '" + text + "'");
  }
  if (m < 1) throw std::invalid_argument("label dimension must be at least 1");
  if (family == "cross") return LabelSetDescriptor{LabelKind::CROSS_EXT, m};
  if (family == "cube") return LabelSetDescriptor{LabelKind::CUBE_EXT, m};
  if (family == "simplex") return LabelSetDescriptor{LabelKind::SIMPLEX_EXT, m};
  throw std::invalid_argument("unknown label family '" + family + "' (want cross, cube, or simplex)");
}

Triangulation build_domain(const RunConfig& cfg) {
  if (cfg.generator.empty()) throw std::invalid_argument(cfg.command + " requires --gen");
  return generate(parse_generator_spec(cfg.generator));
}

// Number of coordinates on which every label of l agrees in sign.
int agreement_coordinates(const Labelling& l, int m) {
  int count = 0;
  for (int j = 0; j < m; ++j) {
    bool all_plus = true, all_minus = true;
    for (const Label& lab : l) {
      if (lab[j] != 1) all_plus = false;
      if (lab[j] != -1) all_minus = false;
    }
    if (all_plus || all_minus) ++count;
  }
  return count;
}

RunResult cmd_gen(const RunConfig& cfg) {
  Triangulation t = build_domain(cfg);
  ValidationReport vr = validate_triangulation(t);

  ordered_json payload;
  payload["vertices"] = t.coords.size();
  payload["simplices"] = t.simplices.size();
  payload["maximal_simplices"] = t.maximal_simplices().size();
  payload["validation_ok"] = vr.ok;
  payload["issues"] = ordered_json::array();
  for (const auto& issue : vr.issues) {
    ordered_json row;
    row["kind"] = issue_kind_name(issue.kind);
    row["detail"] = issue.detail;
    payload["issues"].push_back(std::move(row));
  }
  payload["triangulation"] = ordered_json::parse(triangulation_to_json(t));
  return finish(cfg, vr.ok ? "ok" : "refuted", vr.ok ? 0 : 1, std::move(payload));
}

RunResult cmd_check(const RunConfig& cfg) {
  if (!cfg.theorem) throw std::invalid_argument("check requires --theorem");
  const TheoremId id = *cfg.theorem;
  Triangulation t = build_domain(cfg);
  const int n = t.domain->dim;
  const int m = cfg.m > 0 ? cfg.m : n;
  if (m > n)
    throw std::invalid_argument("the witness guarantee needs m <= the domain dimension; got m=" +
                                std::to_string(m) + " on a " + std::to_string(n) +
                                "-dimensional domain");

  const BigInt total = count_valid_labellings(id, t, m);
  const bool hull_comparable = codomain_kind_of(id) != LabelKind::SIMPLEX_EXT;

  long checked = 0, conditions_ok = 0, witnessed = 0;
  long crosschecked = 0, disagreements = 0;
  ordered_json refutations = ordered_json::array();

  auto drive = [&](const LabelFunction& lf, ordered_json instance_tag) {
    ++checked;
    const LabelReport lr = validate_label_conditions(id, t, lf);
    if (lr.ok) ++conditions_ok;
    const std::optional<Witness> w = find_witness(id, t, lf);
    if (w) ++witnessed;
    if (hull_comparable) {
      const CrosscheckReport cc = crosscheck_propositions(t, lf);
      crosschecked += cc.simplices_checked;
      disagreements += static_cast<long>(cc.disagreements.size());
    }
    if ((!lr.ok || !w) && refutations.size() < 10) {
      ordered_json row;
      row["instance"] = std::move(instance_tag);
      row["conditions_ok"] = lr.ok;
      row["witness_found"] = w.has_value();
      refutations.push_back(std::move(row));
    }
  };

  std::string mode;
  if (cfg.exhaustive) {
    mode = "exhaustive";
    const auto all = enumerate_valid_labellings(id, t, m, cfg.budget);
    if (!all)
      throw std::invalid_argument("the " + total.str() + " valid labellings exceed --budget " +
                                  std::to_string(cfg.budget));
    long index = 0;
    for (const LabelFunction& lf : *all) drive(lf, ordered_json(index++));
  } else {
    mode = "sampled";
    if (cfg.samples < 1) throw std::invalid_argument("--samples must be positive");
    for (int i = 0; i < cfg.samples; ++i) {
      const std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(i);
      drive(random_labelling(id, t, m, s), ordered_json(s));
    }
  }

  ordered_json payload;
  payload["theorem"] = theorem_name(id);
  payload["m"] = m;
  payload["witness_kind"] = witness_kind_name(witness_kind_of(id));
  payload["valid_labellings"] = total.str();
  payload["mode"] = mode;
  payload["checked"] = checked;
  payload["conditions_ok"] = conditions_ok;
  payload["witnessed"] = witnessed;
  payload["crosschecked_simplices"] = crosschecked;
  payload["crosscheck_disagreements"] = disagreements;
  payload["refutations"] = std::move(refutations);

  const bool ok = conditions_ok == checked && witnessed == checked && disagreements == 0;
  return finish(cfg, ok ? "ok" : "refuted", ok ? 0 : 1, std::move(payload));
}

RunResult cmd_parity(const RunConfig& cfg) {
  if (cfg.labels.empty()) throw std::invalid_argument("parity requires --labels");
  const LabelSetDescriptor ls = parse_labels_spec(cfg.labels);

  ForbiddenSet forbidden = ForbiddenSet::none();
  SignRule rule;
  if (cfg.rule == "tucker") {
    if (ls.kind != LabelKind::CROSS_EXT)
      throw std::invalid_argument("the tucker rule partitions cross labellings; use --labels cross:M");
    forbidden = ForbiddenSet::complementary();
    rule = tucker_rule();
  } else if (cfg.rule == "cubical") {
    if (ls.kind != LabelKind::CUBE_EXT)
      throw std::invalid_argument("the cubical rule partitions cube labellings; use --labels cube:M");
    forbidden = ForbiddenSet::neutral();
    rule = cubical_rule();
  } else {
    throw std::invalid_argument("parity requires --rule tucker or --rule cubical");
  }

  Triangulation t = build_domain(cfg);
  const HemisphereChain chain = hemisphere_chain(t);
  const int m = ls.m;

  ordered_json payload;
  payload["rule"] = cfg.rule;
  payload["labels"] = cfg.labels;

  LabelFunction lf;
  if (cfg.search_nonforbidden) {
    const auto found = sample_forbidden_free_labelling(t, ls, forbidden, cfg.seed);
    if (!found) {
      payload["instance_source"] = "sampled_forbidden_free";
      payload["instance_found"] = false;
      payload["note"] = "every attempt hit a forbidden simplex; at codomain dimension <= domain "
                        "dimension that is the expected outcome, not a failure";
      return finish(cfg, "no_instance_found", 0, std::move(payload));
    }
    lf = *found;
    payload["instance_source"] = "sampled_forbidden_free";
    payload["instance_found"] = true;
  } else {
    const TheoremId sampler =
        ls.kind == LabelKind::CROSS_EXT ? TheoremId::TUCKER : TheoremId::TUCKER_CUB;
    lf = random_labelling(sampler, t, m, cfg.seed);
    payload["instance_source"] = "random_antipodal";
    payload["instance_found"] = true;
  }

  const FrameworkResult res = run_framework(chain, lf, forbidden, rule);
  payload["framework"] = ordered_json::parse(framework_result_to_json(res));

  if (!res.completed) return finish(cfg, "aborted_with_witness", 0, std::move(payload));

  bool ok = res.all_odd;
  if (cfg.rule == "tucker") {
    bool matches = true;
    for (std::size_t i = 1; i < res.levels.size(); ++i)
      if (res.levels[i].m_set != closed_form_tucker_M(static_cast<int>(i), m).m_next)
        matches = false;
    payload["closed_form_matches"] = matches;
    ok = ok && matches;
  } else {
    bool bound_holds = true;
    for (std::size_t i = 0; i < res.levels.size(); ++i)
      for (const Labelling& l : res.levels[i].m_set)
        if (agreement_coordinates(l, m) < static_cast<int>(i) + 1) bound_holds = false;
    payload["agreement_bound_ok"] = bound_holds;
    ok = ok && bound_holds;
  }
  return finish(cfg, ok ? "ok" : "refuted", ok ? 0 : 1, std::move(payload));
}

RunResult cmd_reduce(const RunConfig& cfg) {
  if (!cfg.shell) throw std::invalid_argument("reduce requires --config");
  const ShellConfig sc = *cfg.shell;
  Triangulation t = build_domain(cfg);
  const TheoremId inner = inner_theorem_of(sc);
  const int m = t.domain->dim;
  if (cfg.samples < 1) throw std::invalid_argument("--samples must be positive");

  long verified = 0, inner_witnesses = 0;
  ordered_json failing_seeds = ordered_json::array();
  for (int i = 0; i < cfg.samples; ++i) {
    const std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(i);
    const LabelFunction lf = random_labelling(inner, t, m, s);
    const ReductionOutcome out = reduce_and_find(sc, t, lf);
    if (out.report.ok) ++verified;
    if (out.witness && out.witness_inner) ++inner_witnesses;
    if (!(out.report.ok && out.witness && out.witness_inner) && failing_seeds.size() < 10)
      failing_seeds.push_back(s);
  }

  ordered_json payload;
  payload["shell"] = shell_config_name(sc);
  payload["inner_theorem"] = theorem_name(inner);
  payload["outer_theorem"] = theorem_name(outer_theorem_of(sc));
  payload["samples"] = cfg.samples;
  payload["verified"] = verified;
  payload["inner_witnesses"] = inner_witnesses;
  payload["failing_seeds"] = std::move(failing_seeds);

  const bool ok = verified == cfg.samples && inner_witnesses == cfg.samples;
  return finish(cfg, ok ? "ok" : "refuted", ok ? 0 : 1, std::move(payload));
}

RunResult cmd_crosscheck(const RunConfig& cfg) {
  if (cfg.labels.empty()) throw std::invalid_argument("crosscheck requires --labels");
  const LabelSetDescriptor ls = parse_labels_spec(cfg.labels);
  if (ls.kind == LabelKind::SIMPLEX_EXT)
    throw std::invalid_argument("crosscheck compares the cross and cube label predicates");
  const int cap = cfg.max_size > 0 ? cfg.max_size : ls.m + 1;
  const PolytopeDescriptor ball{
      ls.kind == LabelKind::CROSS_EXT ? PolyKind::CROSS : PolyKind::CUBE, ls.m, Rat(1)};

  long total = 0, disagreements = 0;
  ordered_json sizes = ordered_json::array();
  for (int size = 1; size <= cap; ++size) {
    const std::set<Labelling> all = enumerate_labellings(ls, size - 1);
    long agree = 0;
    for (const Labelling& l : all) {
      const bool predicate =
          ls.kind == LabelKind::CROSS_EXT ? has_complementary_pair(ls, l) : is_neutral(ls, l);
      std::vector<Point> pts;
      for (const Label& lab : l) {
        Point p;
        for (int x : lab) p.push_back(Rat(x));
        pts.push_back(std::move(p));
      }
      if (predicate == hull_meets_interior(pts, ball)) ++agree;
      else ++disagreements;
    }
    ordered_json row;
    row["size"] = size;
    row["labellings"] = all.size();
    row["agreements"] = agree;
    sizes.push_back(std::move(row));
    total += static_cast<long>(all.size());
  }

  ordered_json payload;
  payload["labels"] = cfg.labels;
  payload["max_size"] = cap;
  payload["sizes"] = std::move(sizes);
  payload["checked"] = total;
  payload["disagreements"] = disagreements;
  const bool ok = disagreements == 0;
  return finish(cfg, ok ? "ok" : "refuted", ok ? 0 : 1, std::move(payload));
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  try {
    if (cfg.command == "gen") return cmd_gen(cfg);
    if (cfg.command == "check") return cmd_check(cfg);
    if (cfg.command == "parity") return cmd_parity(cfg);
    if (cfg.command == "reduce") return cmd_reduce(cfg);
    if (cfg.command == "crosscheck") return cmd_crosscheck(cfg);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
  } catch (const std::exception& e) {
    ordered_json payload;
    payload["error"] = e.what();
    return finish(cfg, "config_error", 2, std::move(payload));
  }
}

}  // namespace fixcomb
