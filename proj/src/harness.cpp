#include "vsc/harness.hpp"

#include <chrono>
#include <functional>
#include <json.hpp>

#include "vsc/classify.hpp"
#include "vsc/derivation.hpp"
#include "vsc/enumerate.hpp"
#include "vsc/parser.hpp"
#include "vsc/transform.hpp"

namespace vsc {

namespace {

using nlohmann::json;

struct SuiteRun {
  SuiteReport rep;

  void fail(const TermPtr& t, const std::string& details) {
    rep.failures++;
    if (rep.counterexample.empty()) {
      rep.counterexample = print(t);
      rep.details = details;
    }
  }
};

void for_population(const SuiteOptions& o, SuiteRun& run,
                    const std::function<void(const TermPtr&)>& fn) {
  EnumOptions eo;
  eo.max_size = o.max_size;
  eo.free_pool = o.free_pool;
  eo.pure_only = false;
  enumerate_terms(eo, [&](const TermPtr& t) {
    run.rep.population++;
    fn(t);
    return true;
  });
}

bool same_multi_conclusion(const Judgment& a, const Judgment& b) {
  return a.rhs_is_multi && b.rhs_is_multi && a.rhs_multi == b.rhs_multi && a.ctx == b.ctx;
}

// Derivation node whose subject is the subterm at `path`. Only Lam subjects
// are typed by many; these never occur on open/external step spines followed
// here except via explicit LamBody moves.
DerivPtr deriv_at(DerivPtr d, const Path& path) {
  for (Move mv : path) {
    switch (mv) {
      case Move::AppL:
      case Move::EsBody: d = d->premises[0]; break;
      case Move::AppR:
      case Move::EsSubject: d = d->premises[1]; break;
      case Move::LamBody:
        // many over lam; follow the first premise's body
        d = d->premises.at(0)->premises.at(0);
        break;
    }
  }
  return d;
}

void suite_harmony(SuiteRun& run, const SuiteOptions& o, Strategy s,
                   bool (*cls)(const TermPtr&), const char* cls_name) {
  for_population(o, run, [&](const TermPtr& t) {
    if ((s == Strategy::Plotkin || s == Strategy::Fire) && !is_pure(t)) return;
    run.rep.checked++;
    bool g = cls(t);
    bool n = !has_redex(t, s);
    if (g != n)
      run.fail(t, std::string(cls_name) + "=" + (g ? "true" : "false") + " but " +
                      strategy_name(s) + "-normal=" + (n ? "true" : "false"));
  });
}

void suite_diamond(SuiteRun& run, const SuiteOptions& o, Strategy s) {
  for_population(o, run, [&](const TermPtr& t) {
    run.rep.checked++;
    DiamondReport dr = diamond_check(t, s);
    if (dr.violation)
      run.fail(t, "peak {" + print(dr.left) + " , " + print(dr.right) +
                      "} has no one-step join");
  });
}

void suite_vsc_not_diamond(SuiteRun& run) {
  TermPtr w = parse("(x x)[x <- \\y.(\\z.z) (\\w.w)]");
  run.rep.population = 1;
  run.rep.checked = 1;
  DiamondReport dr = diamond_check(w, Strategy::Vsc);
  if (!dr.violation) run.fail(w, "expected an unjoinable one-step peak, found none");
}

void suite_fullness(SuiteRun& run, const SuiteOptions& o) {
  for_population(o, run, [&](const TermPtr& t) {
    run.rep.checked++;
    bool x = !has_redex(t, Strategy::External);
    bool v = !has_redex(t, Strategy::Vsc);
    if (x != v)
      run.fail(t, std::string("x-normal=") + (x ? "true" : "false") +
                      " but vsc-normal=" + (v ? "true" : "false"));
  });
}

void suite_subject_reduction(SuiteRun& run, const SuiteOptions& o, InferMode mode) {
  for_population(o, run, [&](const TermPtr& t) {
    InferResult inf = infer(t, mode, o.fuel);
    if (inf.status == InferResult::Status::FuelExhausted) {
      run.rep.skipped++;
      return;
    }
    if (!inf.found()) return;
    run.rep.checked++;
    try {
      DerivPtr d = inf.derivation;
      check_derivation(d);
      if (mode == InferMode::Shrinking && !is_shrinking(d)) {
        run.fail(t, "inferred start derivation is not shrinking");
        return;
      }
      Judgment c0 = d->conclusion;
      std::size_t prev = deriv_size(d);
      if (inf.outcome.trace.size() > prev) {
        run.fail(t, "evaluation length exceeds derivation size");
        return;
      }
      std::vector<TermPtr> terms = trace_terms(t, inf.outcome.trace);
      for (std::size_t i = 0; i < inf.outcome.trace.size(); ++i) {
        d = subject_reduce(d, TypedStep{inf.outcome.trace[i], terms[i], terms[i + 1]});
        check_derivation(d);
        if (!same_multi_conclusion(d->conclusion, c0)) {
          run.fail(t, "conclusion changed at step " + std::to_string(i));
          return;
        }
        std::size_t sz = deriv_size(d);
        if (sz >= prev) {
          run.fail(t, "derivation size did not strictly decrease at step " + std::to_string(i));
          return;
        }
        prev = sz;
      }
    } catch (const std::exception& e) {
      run.fail(t, e.what());
    }
  });
}

void suite_subject_expansion(SuiteRun& run, const SuiteOptions& o) {
  for_population(o, run, [&](const TermPtr& t) {
    for (InferMode mode : {InferMode::Open, InferMode::Shrinking}) {
      Strategy s = mode == InferMode::Open ? Strategy::Open : Strategy::External;
      Outcome out = evaluate(t, s, o.fuel);
      if (out.kind == Outcome::Kind::Exhausted) {
        run.rep.skipped++;
        continue;
      }
      if (out.kind != Outcome::Kind::Normal) continue;
      run.rep.checked++;
      try {
        DerivPtr d = mode == InferMode::Open ? type_fireball_open(out.result)
                                             : type_fireball_shrinking(out.result);
        check_derivation(d);
        Judgment cn = d->conclusion;
        std::vector<TermPtr> terms = trace_terms(t, out.trace);
        for (std::size_t i = out.trace.size(); i-- > 0;) {
          d = subject_expand(d, TypedStep{out.trace[i], terms[i], terms[i + 1]});
          check_derivation(d);
          if (!same_multi_conclusion(d->conclusion, cn)) {
            run.fail(t, "conclusion changed while expanding step " + std::to_string(i));
            return;
          }
        }
        if (mode == InferMode::Shrinking && !is_shrinking(d))
          run.fail(t, "expanded start derivation is not shrinking");
        if (mode == InferMode::Open && !d->conclusion.rhs_multi.empty())
          run.fail(t, "open-mode expansion should conclude type 0");
      } catch (const std::exception& e) {
        run.fail(t, e.what());
      }
    }
  });
}

void suite_length_bound(SuiteRun& run, const SuiteOptions& o) {
  for_population(o, run, [&](const TermPtr& t) {
    for (InferMode mode : {InferMode::Open, InferMode::Shrinking}) {
      InferResult inf = infer(t, mode, o.fuel);
      if (inf.status == InferResult::Status::FuelExhausted) {
        run.rep.skipped++;
        continue;
      }
      if (!inf.found()) continue;
      run.rep.checked++;
      if (inf.outcome.trace.size() > deriv_size(inf.derivation))
        run.fail(t, std::string("|d| > |Phi| in ") +
                        (mode == InferMode::Open ? "open" : "shrinking") + " mode");
    }
  });
}

// Exercises the substitution, anti-substitution and split/merge contracts on
// every exponential step of every open-typable term.
void suite_substitution_bound(SuiteRun& run, const SuiteOptions& o) {
  for_population(o, run, [&](const TermPtr& t) {
    InferResult inf = infer(t, InferMode::Open, o.fuel);
    if (inf.status == InferResult::Status::FuelExhausted) {
      run.rep.skipped++;
      return;
    }
    if (!inf.found()) return;
    DerivPtr d = inf.derivation;
    std::vector<TermPtr> terms = trace_terms(t, inf.outcome.trace);
    bool touched = false;
    try {
      for (std::size_t i = 0; i < inf.outcome.trace.size(); ++i) {
        const Step& st = inf.outcome.trace[i];
        if (st.rule == RuleTag::E) {
          touched = true;
          DerivPtr node = deriv_at(d, st.path);
          DerivPtr body = node->premises[0];
          DerivPtr core = node->premises[1];
          std::vector<EsLayer> layers;
          TermPtr lamCore;
          peel_answer(node->conclusion.subject->b, layers, lamCore);
          for (std::size_t j = 0; j < layers.size(); ++j) core = core->premises[0];
          const std::string& x = node->conclusion.subject->name;
          TermPtr v = core->conclusion.subject;

          // Splitting and merging value typings round-trip with matching sizes.
          const MultiType& m = core->conclusion.rhs_multi;
          MultiType m1 = m.empty() ? MultiType() : MultiType::singleton(m.elems().front());
          MultiType m2 = m.minus(m1);
          auto [c1, c2] = split_value_derivation(core, m1, m2);
          check_derivation(c1);
          check_derivation(c2);
          if (deriv_size(c1) + deriv_size(c2) != deriv_size(core)) {
            run.fail(t, "split sizes do not add up");
            return;
          }
          DerivPtr merged = merge_value_derivations(c1, c2);
          check_derivation(merged);
          if (!same_judgment(merged->conclusion, core->conclusion) ||
              deriv_size(merged) != deriv_size(core)) {
            run.fail(t, "merge does not restore the split judgment");
            return;
          }

          // Substitution on derivations respects the size bound.
          DerivPtr theta = substitute_derivation(body, x, core);
          check_derivation(theta);
          if (deriv_size(theta) > deriv_size(body) + deriv_size(core)) {
            run.fail(t, "substitution size bound violated");
            return;
          }

          // Anti-substitution, and the round trip back through substitution.
          auto [psi, thv] = anti_substitute(theta, body->conclusion.subject, x, v);
          check_derivation(psi);
          check_derivation(thv);
          TypeContext sum = psi->conclusion.ctx.without(x).sum(thv->conclusion.ctx);
          if (!(sum == theta->conclusion.ctx)) {
            run.fail(t, "anti-substitution contexts do not sum back");
            return;
          }
          DerivPtr again = substitute_derivation(psi, x, thv);
          if (!same_judgment(again->conclusion, theta->conclusion)) {
            run.fail(t, "anti-substitution round trip changed the judgment");
            return;
          }
        }
        d = subject_reduce(d, TypedStep{st, terms[i], terms[i + 1]});
      }
      if (touched) run.rep.checked++;
    } catch (const std::exception& e) {
      run.fail(t, e.what());
    }
  });
}

void deriv_nodes(const DerivPtr& d, const std::function<void(const DerivPtr&)>& fn) {
  fn(d);
  for (const auto& p : d->premises) deriv_nodes(p, fn);
}

void suite_spreading(SuiteRun& run, const SuiteOptions& o) {
  for_population(o, run, [&](const TermPtr& t) {
    InferResult inf = infer(t, InferMode::Shrinking, o.fuel);
    if (inf.status == InferResult::Status::FuelExhausted) {
      run.rep.skipped++;
      return;
    }
    if (!inf.found()) return;
    run.rep.checked++;
    deriv_nodes(inf.derivation, [&](const DerivPtr& n) {
      const Judgment& c = n->conclusion;
      if (!c.rhs_is_multi || !is_rigid(c.subject) || !is_left_ctx(c.ctx)) return;
      if (!is_left(c.rhs_multi))
        run.fail(t, "left context over rigid " + print(c.subject) +
                        " gave non-left type " + to_string(c.rhs_multi));
    });
  });
}

void suite_untyped_normalization(SuiteRun& run, const SuiteOptions& o) {
  for_population(o, run, [&](const TermPtr& t) {
    BfsReport bfs = bfs_explore(t, Strategy::Vsc, o.bfs_budget);
    if (bfs.normal_forms.size() > 1) {
      run.fail(t, "two alpha-distinct vsc normal forms reached: " +
                      print(bfs.normal_forms[0]) + " and " + print(bfs.normal_forms[1]));
      return;
    }
    if (bfs.normal_forms.empty()) {
      run.rep.skipped++;
      return;
    }
    const TermPtr& nf = bfs.normal_forms.front();
    if (!is_strong_fireball(nf)) {
      run.fail(t, "vsc normal form is not a strong fireball: " + print(nf));
      return;
    }
    Outcome out = evaluate(t, Strategy::External, o.fuel);
    if (out.kind == Outcome::Kind::Exhausted) {
      run.rep.skipped++;
      return;
    }
    run.rep.checked++;
    if (out.kind == Outcome::Kind::Cycle) {
      run.fail(t, "external strategy cycles although " + print(nf) + " is vsc-reachable");
      return;
    }
    if (!alpha_eq(out.result, nf))
      run.fail(t, "external normal form " + print(out.result) + " differs from " + print(nf));
  });
}

void suite_plotkin_simulation(SuiteRun& run, const SuiteOptions& o) {
  for_population(o, run, [&](const TermPtr& t) {
    if (!is_pure(t)) return;
    run.rep.checked++;
    for (const Step& st : redexes(t, Strategy::Plotkin)) {
      TermPtr local = resolve(t, st.path);
      auto m = root_m(local);
      if (!m) {
        run.fail(t, "beta_v redex is not an m-redex");
        return;
      }
      auto e = root_e(*m);
      if (!e) {
        run.fail(t, "m-reduct has no root e-redex");
        return;
      }
      if (!alpha_eq(replace_at(t, st.path, *e), st.reduct)) {
        run.fail(t, "m;e does not reproduce the beta_v reduct at path");
        return;
      }
    }
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "diamond-open",
      "diamond-external",
      "vsc-not-diamond",
      "harmony-open",
      "harmony-strong",
      "harmony-fire",
      "fullness",
      "subject-reduction-open",
      "subject-reduction-shrinking",
      "subject-expansion",
      "length-bound",
      "substitution-bound",
      "spreading",
      "untyped-normalization",
      "plotkin-simulation",
  };
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  SuiteRun run;
  run.rep.suite = name;
  auto start = std::chrono::steady_clock::now();
  if (name == "diamond-open") {
    suite_diamond(run, opts, Strategy::Open);
  } else if (name == "diamond-external") {
    suite_diamond(run, opts, Strategy::External);
  } else if (name == "vsc-not-diamond") {
    suite_vsc_not_diamond(run);
  } else if (name == "harmony-open") {
    suite_harmony(run, opts, Strategy::Open, is_fireball, "is_fireball");
  } else if (name == "harmony-strong") {
    suite_harmony(run, opts, Strategy::Vsc, is_strong_fireball, "is_strong_fireball");
  } else if (name == "harmony-fire") {
    suite_harmony(run, opts, Strategy::Fire, is_fire_fireball, "is_fire_fireball");
  } else if (name == "fullness") {
    suite_fullness(run, opts);
  } else if (name == "subject-reduction-open") {
    suite_subject_reduction(run, opts, InferMode::Open);
  } else if (name == "subject-reduction-shrinking") {
    suite_subject_reduction(run, opts, InferMode::Shrinking);
  } else if (name == "subject-expansion") {
    suite_subject_expansion(run, opts);
  } else if (name == "length-bound") {
    suite_length_bound(run, opts);
  } else if (name == "substitution-bound") {
    suite_substitution_bound(run, opts);
  } else if (name == "spreading") {
    suite_spreading(run, opts);
  } else if (name == "untyped-normalization") {
    suite_untyped_normalization(run, opts);
  } else if (name == "plotkin-simulation") {
    suite_plotkin_simulation(run, opts);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  run.rep.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return run.rep;
}

std::string report_json(const SuiteReport& r) {
  json j{{"suite", r.suite},      {"population", r.population}, {"checked", r.checked},
         {"failures", r.failures}, {"skipped", r.skipped},       {"wall_ms", r.wall_ms}};
  if (r.failures > 0) {
    j["counterexample"] = json{{"term", r.counterexample}, {"details", r.details}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump();
}

namespace {

json step_json(const Step& s) {
  json path = json::array();
  for (Move m : s.path) path.push_back(move_name(m));
  return json{{"path", path}, {"rule", rule_name(s.rule)}, {"term", print(s.reduct)}};
}

json outcome_json_obj(const TermPtr& start, Strategy s, const Outcome& out) {
  json trace = json::array();
  for (const auto& st : out.trace) trace.push_back(step_json(st));
  json j{{"term", print(start)},
         {"strategy", strategy_name(s)},
         {"trace", trace},
         {"counts",
          json{{"m", out.count(RuleTag::M)},
               {"e", out.count(RuleTag::E)},
               {"beta_v", out.count(RuleTag::BetaV)},
               {"beta_i", out.count(RuleTag::BetaI)}}}};
  switch (out.kind) {
    case Outcome::Kind::Normal:
      j["outcome"] = "normal";
      j["result"] = print(out.result);
      break;
    case Outcome::Kind::Cycle:
      j["outcome"] = "cycle";
      j["loop_start"] = out.loop_start;
      break;
    case Outcome::Kind::Exhausted: j["outcome"] = "exhausted"; break;
  }
  return j;
}

struct Experiment {
  ExperimentReport rep;
  json evals = json::array();

  explicit Experiment(std::string name) { rep.name = std::move(name); }

  void note(const std::string& line) { rep.log.push_back(line); }

  void expect(bool cond, const std::string& what) {
    rep.log.push_back(std::string(cond ? "ok: " : "FAIL: ") + what);
    if (!cond) rep.passed = false;
  }

  Outcome eval(const TermPtr& t, Strategy s, std::size_t fuel) {
    Outcome out = evaluate(t, s, fuel);
    evals.push_back(outcome_json_obj(t, s, out));
    return out;
  }

  ExperimentReport finish() {
    rep.json = json{{"name", rep.name}, {"passed", rep.passed}, {"evaluations", evals}}.dump(2);
    return rep;
  }
};

bool trace_prefix_matches(const Outcome& out, const TermPtr& start,
                          const std::vector<std::string>& expected) {
  std::vector<TermPtr> terms = trace_terms(start, out.trace);
  if (terms.size() < expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!alpha_eq(terms[i], parse(expected[i]))) return false;
  }
  return true;
}

ExperimentReport experiment_omega_l() {
  Experiment ex("omega-l");
  ex.rep.passed = true;
  TermPtr omega_l = parse("(\\z.\\x.x x) (y y) (\\w.w w)");
  ex.note("Omega_l = " + print(omega_l));

  Outcome pl = ex.eval(omega_l, Strategy::Plotkin, 100);
  ex.expect(pl.kind == Outcome::Kind::Normal && pl.trace.empty(),
            "Omega_l is beta_v-normal under plotkin (a false normal form)");

  Outcome op = ex.eval(omega_l, Strategy::Open, 100);
  ex.expect(op.kind == Outcome::Kind::Cycle, "Omega_l cycles under open reduction");
  ex.expect(trace_prefix_matches(op, omega_l,
                                 {"(\\z.\\x.x x) (y y) (\\w.w w)",
                                  "(\\x.x x)[z <- y y] (\\w.w w)",
                                  "((x x)[x <- \\w.w w])[z <- y y]",
                                  "((\\w.w w) (\\w'.w' w'))[z <- y y]"}),
            "the open trace starts with the two distant m-steps and the e-step");
  return ex.finish();
}

ExperimentReport experiment_omega_r() {
  Experiment ex("omega-r");
  ex.rep.passed = true;
  TermPtr omega_r = parse("(\\w.w w) ((\\z.\\x.x x) (y y))");
  ex.note("Omega_r = " + print(omega_r));

  Outcome pl = ex.eval(omega_r, Strategy::Plotkin, 100);
  ex.expect(pl.kind == Outcome::Kind::Normal && pl.trace.empty(),
            "Omega_r is beta_v-normal under plotkin");

  // Replay the worked trace, which fires the argument redex first; the
  // engine's own policy prefers the root, and both meet again two steps on.
  std::vector<std::string> expected = {"(\\w.w w) ((\\x.x x)[z <- y y])",
                                       "(x x)[x <- (\\x'.x' x')[z <- y y]]",
                                       "((\\x.x x) (\\x'.x' x'))[z <- y y]"};
  TermPtr cur = omega_r;
  std::vector<Step> guided;
  bool guided_ok = true;
  for (const auto& want : expected) {
    bool advanced = false;
    for (const Step& st : redexes(cur, Strategy::Open)) {
      if (alpha_eq(st.reduct, parse(want))) {
        guided.push_back(st);
        cur = st.reduct;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      guided_ok = false;
      break;
    }
  }
  ex.expect(guided_ok, "open reduction can follow the worked trace: distance on e in step 3");

  Outcome op = ex.eval(omega_r, Strategy::Open, 100);
  ex.expect(op.kind == Outcome::Kind::Cycle, "Omega_r cycles under open reduction");
  if (op.kind == Outcome::Kind::Cycle && guided_ok) {
    std::vector<TermPtr> terms = trace_terms(omega_r, op.trace);
    ex.expect(terms.size() > 3 && alpha_eq(terms[3], cur),
              "default policy meets the worked trace at (delta delta)[z <- y y]");
  }
  return ex.finish();
}

ExperimentReport experiment_fireball_erasure() {
  Experiment ex("fireball-erasure");
  ex.rep.passed = true;
  TermPtr t = parse("(\\x.\\z.z) (y y)");
  ex.note("t = " + print(t) + "  (the identity applied to an inert term)");

  Outcome fire = ex.eval(t, Strategy::Fire, 10);
  ex.expect(fire.kind == Outcome::Kind::Normal && fire.trace.size() == 1 &&
                fire.count(RuleTag::BetaI) == 1 && alpha_eq(fire.result, parse("\\z.z")),
            "fire erases the inert argument: one beta_i step to the identity");

  Outcome vsc = ex.eval(t, Strategy::Vsc, 10);
  ex.expect(vsc.kind == Outcome::Kind::Normal &&
                alpha_eq(vsc.result, parse("(\\z.z)[x <- y y]")),
            "vsc keeps the inert term in an ES instead");
  return ex.finish();
}

ExperimentReport experiment_instability_open() {
  Experiment ex("instability-open");
  ex.rep.passed = true;
  // C = (\y.<.>) delta closes t = (\x.I)(y y); C<t> diverges yet C<I> converges.
  TermPtr ct = parse("(\\y.(\\x.\\z.z) (y y)) (\\d.d d)");
  TermPtr ci = parse("(\\y.\\z.z) (\\d.d d)");
  ex.note("C<t> = " + print(ct));

  Outcome div = ex.eval(ct, Strategy::Plotkin, 50);
  ex.expect(div.kind == Outcome::Kind::Cycle, "C<t> diverges under plotkin");
  ex.expect(trace_prefix_matches(div, ct,
                                 {"(\\y.(\\x.\\z.z) (y y)) (\\d.d d)",
                                  "(\\x.\\z.z) ((\\d.d d) (\\d.d d))"}),
            "the closing context feeds Omega to the erasing redex");

  Outcome conv = ex.eval(ci, Strategy::Plotkin, 50);
  ex.expect(conv.kind == Outcome::Kind::Normal && alpha_eq(conv.result, parse("\\z.z")),
            "C<I> converges to the identity");
  return ex.finish();
}

ExperimentReport experiment_strong_separation() {
  Experiment ex("strong-separation");
  ex.rep.passed = true;
  TermPtr u = parse("(\\x.\\i.i) (y (\\z.(\\d.d d) (\\d.d d)))");
  ex.note("u = " + print(u) + "  (inert argument hiding Omega under a lambda)");

  Outcome fire = ex.eval(u, Strategy::Fire, 10);
  ex.expect(fire.kind == Outcome::Kind::Normal && fire.trace.size() == 1 &&
                fire.count(RuleTag::BetaI) == 1 && alpha_eq(fire.result, parse("\\i.i")),
            "fire terminates: one beta_i step to the identity");

  Outcome ext = ex.eval(u, Strategy::External, 200);
  ex.expect(ext.kind == Outcome::Kind::Cycle, "the external strategy diverges on u");
  if (!ext.trace.empty())
    ex.expect(alpha_eq(ext.trace[0].reduct,
                       parse("(\\i.i)[x <- y (\\z.(\\d.d d) (\\d.d d))]")),
              "the first external step keeps the inert argument in an ES");
  return ex.finish();
}

ExperimentReport experiment_instability_strong() {
  Experiment ex("instability-strong");
  ex.rep.passed = true;
  // C = (\y.<.>)(\w.w I) with u from the strong-separation example.
  TermPtr cu =
      parse("(\\y.(\\x.\\i.i) (y (\\z.(\\d.d d) (\\d.d d)))) (\\w.w (\\i.i))");
  TermPtr ci = parse("(\\y.\\i.i) (\\w.w (\\i.i))");
  ex.note("C<u> = " + print(cu));

  Outcome div = ex.eval(cu, Strategy::Plotkin, 50);
  ex.expect(div.kind == Outcome::Kind::Cycle, "C<u> diverges under plotkin");
  ex.expect(
      trace_prefix_matches(
          div, cu,
          {"(\\y.(\\x.\\i.i) (y (\\z.(\\d.d d) (\\d.d d)))) (\\w.w (\\i.i))",
           "(\\x.\\i.i) ((\\w.w (\\i.i)) (\\z.(\\d.d d) (\\d.d d)))",
           "(\\x.\\i.i) ((\\z.(\\d.d d) (\\d.d d)) (\\i.i))",
           "(\\x.\\i.i) ((\\d.d d) (\\d.d d))"}),
      "the context unlocks the divergence hidden under the abstraction");

  Outcome conv = ex.eval(ci, Strategy::Plotkin, 50);
  ex.expect(conv.kind == Outcome::Kind::Normal && alpha_eq(conv.result, parse("\\i.i")),
            "C<I> converges to the identity");
  return ex.finish();
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "omega-l",           "omega-r",           "fireball-erasure",
      "strong-separation", "instability-open",  "instability-strong",
  };
  return names;
}

ExperimentReport run_experiment(const std::string& name) {
  if (name == "omega-l") return experiment_omega_l();
  if (name == "omega-r") return experiment_omega_r();
  if (name == "fireball-erasure") return experiment_fireball_erasure();
  if (name == "strong-separation") return experiment_strong_separation();
  if (name == "instability-open") return experiment_instability_open();
  if (name == "instability-strong") return experiment_instability_strong();
  throw std::invalid_argument("unknown experiment: " + name);
}

std::string outcome_json(const TermPtr& start, Strategy s, const Outcome& out) {
  return outcome_json_obj(start, s, out).dump(2);
}

}  // namespace vsc
