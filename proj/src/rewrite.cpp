#include "vsc/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "vsc/classify.hpp"

namespace vsc {

const char* rule_name(RuleTag r) {
  switch (r) {
    case RuleTag::M: return "m";
    case RuleTag::E: return "e";
    case RuleTag::BetaV: return "beta_v";
    case RuleTag::BetaI: return "beta_i";
  }
  return "?";
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Plotkin: return "plotkin";
    case Strategy::Fire: return "fire";
    case Strategy::Open: return "open";
    case Strategy::Vsc: return "vsc";
    case Strategy::External: return "external";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(const std::string& s) {
  if (s == "plotkin") return Strategy::Plotkin;
  if (s == "fire") return Strategy::Fire;
  if (s == "open") return Strategy::Open;
  if (s == "vsc") return Strategy::Vsc;
  if (s == "external") return Strategy::External;
  return std::nullopt;
}

bool peel_answer(const TermPtr& t, std::vector<EsLayer>& layers, TermPtr& core) {
  TermPtr cur = t;
  while (cur->kind == TermKind::Es) {
    layers.push_back({cur->name, cur->b});
    cur = cur->a;
  }
  if (cur->kind != TermKind::Lam) return false;
  core = cur;
  return true;
}

namespace {

// Rebuilds the stack L around `inner`, renaming each layer binder that
// would capture a free variable of `moved` (the term newly brought under
// the stack). `answer_body` is the original body below the layer being
// processed; renames propagate into it before recursing.
TermPtr wrap_layers_renaming(const TermPtr& answer, const TermPtr& moved,
                             const std::string& exempt, NamePool& pool,
                             const std::function<TermPtr(const TermPtr&)>& at_core) {
  if (answer->kind != TermKind::Es) return at_core(answer);
  std::string binder = answer->name;
  TermPtr body = answer->a;
  std::set<std::string> mfv = free_vars(moved);
  mfv.erase(exempt);
  if (mfv.count(binder)) {
    std::string b2 = pool.fresh(binder);
    body = rename_free(body, binder, b2);
    binder = b2;
  }
  return es(wrap_layers_renaming(body, moved, exempt, pool, at_core), binder, answer->b);
}

}  // namespace

std::optional<MRedex> analyze_root_m(const TermPtr& t) {
  if (t->kind != TermKind::App) return std::nullopt;
  std::vector<EsLayer> layers;
  TermPtr core;
  if (!peel_answer(t->a, layers, core)) return std::nullopt;

  NamePool pool(all_names(t));
  MRedex r;
  r.arg = t->b;
  TermPtr result = wrap_layers_renaming(t->a, t->b, "", pool, [&](const TermPtr& lamCore) {
    return es(lamCore->a, lamCore->name, t->b);
  });
  // Recover the renamed layers for callers that rebuild derivations.
  std::vector<EsLayer> renamed;
  TermPtr cur = result;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    renamed.push_back({cur->name, cur->b});
    cur = cur->a;
  }
  r.layers = std::move(renamed);
  r.binder = cur->name;
  r.body = cur->a;
  r.result = result;
  return r;
}

std::optional<ERedex> analyze_root_e(const TermPtr& t) {
  if (t->kind != TermKind::Es) return std::nullopt;
  std::vector<EsLayer> layers;
  TermPtr core;
  if (!peel_answer(t->b, layers, core)) return std::nullopt;

  NamePool pool(all_names(t));
  ERedex r;
  r.binder = t->name;
  r.body = t->a;
  TermPtr value;
  TermPtr result = wrap_layers_renaming(t->b, t->a, t->name, pool, [&](const TermPtr& v) {
    value = v;
    return subst(t->a, t->name, v);
  });
  std::vector<EsLayer> renamed;
  TermPtr cur = result;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    renamed.push_back({cur->name, cur->b});
    cur = cur->a;
  }
  r.layers = std::move(renamed);
  r.value = value;
  r.result = result;
  return r;
}

std::optional<TermPtr> root_m(const TermPtr& t) {
  auto r = analyze_root_m(t);
  if (!r) return std::nullopt;
  return r->result;
}

std::optional<TermPtr> root_e(const TermPtr& t) {
  auto r = analyze_root_e(t);
  if (!r) return std::nullopt;
  return r->result;
}

namespace {

struct Collector {
  const TermPtr& root;
  std::vector<Step> out;
  std::set<std::pair<std::vector<int>, int>> seen;  // (encoded path, rule)

  explicit Collector(const TermPtr& r) : root(r) {}

  static std::vector<int> encode(const Path& p) {
    std::vector<int> v;
    v.reserve(p.size());
    for (Move m : p) v.push_back(static_cast<int>(m));
    return v;
  }

  void emit(const Path& path, RuleTag rule, const TermPtr& local) {
    if (!seen.insert({encode(path), static_cast<int>(rule)}).second) return;
    out.push_back({path, rule, replace_at(root, path, local)});
  }

  void emit_root_rules(const TermPtr& t, Path& path) {
    if (auto m = root_m(t)) emit(path, RuleTag::M, *m);
    if (auto e = root_e(t)) emit(path, RuleTag::E, *e);
  }

  void open_rec(const TermPtr& t, Path& path) {
    emit_root_rules(t, path);
    switch (t->kind) {
      case TermKind::App:
        path.push_back(Move::AppL);
        open_rec(t->a, path);
        path.back() = Move::AppR;
        open_rec(t->b, path);
        path.pop_back();
        break;
      case TermKind::Es:
        path.push_back(Move::EsBody);
        open_rec(t->a, path);
        path.back() = Move::EsSubject;
        open_rec(t->b, path);
        path.pop_back();
        break;
      default: break;
    }
  }

  void vsc_rec(const TermPtr& t, Path& path) {
    emit_root_rules(t, path);
    switch (t->kind) {
      case TermKind::Lam:
        path.push_back(Move::LamBody);
        vsc_rec(t->a, path);
        path.pop_back();
        break;
      case TermKind::App:
        path.push_back(Move::AppL);
        vsc_rec(t->a, path);
        path.back() = Move::AppR;
        vsc_rec(t->b, path);
        path.pop_back();
        break;
      case TermKind::Es:
        path.push_back(Move::EsBody);
        vsc_rec(t->a, path);
        path.back() = Move::EsSubject;
        vsc_rec(t->b, path);
        path.pop_back();
        break;
      default: break;
    }
  }

  // Weak reduction of the pure calculi. Fire adds beta_i on inert arguments.
  void weak_rec(const TermPtr& t, Path& path, bool fire) {
    if (t->kind != TermKind::App) return;
    if (t->a->kind == TermKind::Lam) {
      if (is_value(t->b)) {
        emit(path, RuleTag::BetaV, subst(t->a->a, t->a->name, t->b));
      } else if (fire && is_fire_inert(t->b)) {
        emit(path, RuleTag::BetaI, subst(t->a->a, t->a->name, t->b));
      }
    }
    path.push_back(Move::AppL);
    weak_rec(t->a, path, fire);
    path.back() = Move::AppR;
    weak_rec(t->b, path, fire);
    path.pop_back();
  }

  // External contexts X and rigid contexts R, by mode-tracking recursion.
  // X emits the open steps of the focus and descends under abstractions;
  // R walks rigid spines.
  void ext_rec(const TermPtr& t, Path& path) {
    open_rec(t, path);
    switch (t->kind) {
      case TermKind::Lam:
        path.push_back(Move::LamBody);
        ext_rec(t->a, path);
        path.pop_back();
        break;
      case TermKind::Es:
        path.push_back(Move::EsSubject);
        rig_rec(t->b, path);
        path.pop_back();
        if (is_rigid(t->b)) {
          path.push_back(Move::EsBody);
          ext_rec(t->a, path);
          path.pop_back();
        }
        break;
      default: break;
    }
    rig_rec(t, path);
  }

  void rig_rec(const TermPtr& t, Path& path) {
    switch (t->kind) {
      case TermKind::App:
        if (is_rigid(t->a)) {
          path.push_back(Move::AppR);
          ext_rec(t->b, path);
          path.pop_back();
        }
        path.push_back(Move::AppL);
        rig_rec(t->a, path);
        path.pop_back();
        break;
      case TermKind::Es:
        if (is_rigid(t->b)) {
          path.push_back(Move::EsBody);
          rig_rec(t->a, path);
          path.pop_back();
        }
        if (is_rigid(t->a)) {
          path.push_back(Move::EsSubject);
          rig_rec(t->b, path);
          path.pop_back();
        }
        break;
      default: break;
    }
  }
};

bool path_less(const Path& a, const Path& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Move x, Move y) { return static_cast<int>(x) < static_cast<int>(y); });
}

void sort_steps(std::vector<Step>& steps) {
  std::stable_sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
    if (a.path != b.path) return path_less(a.path, b.path);
    return static_cast<int>(a.rule) < static_cast<int>(b.rule);
  });
}

}  // namespace

std::vector<Step> redexes(const TermPtr& t, Strategy s) {
  Collector c(t);
  Path path;
  switch (s) {
    case Strategy::Plotkin:
    case Strategy::Fire:
      if (!is_pure(t)) throw std::invalid_argument("plotkin/fire reduce pure terms only");
      c.weak_rec(t, path, s == Strategy::Fire);
      break;
    case Strategy::Open: c.open_rec(t, path); break;
    case Strategy::Vsc: c.vsc_rec(t, path); break;
    case Strategy::External: c.ext_rec(t, path); break;
  }
  sort_steps(c.out);
  return c.out;
}

bool has_redex(const TermPtr& t, Strategy s) { return !redexes(t, s).empty(); }

std::optional<Step> step(const TermPtr& t, Strategy s) {
  auto r = redexes(t, s);
  if (r.empty()) return std::nullopt;
  return r.front();
}

Outcome evaluate(const TermPtr& t, Strategy s, std::size_t fuel) {
  Outcome out;
  std::map<std::string, std::size_t> seen;
  seen[alpha_key(t)] = 0;
  TermPtr cur = t;
  for (std::size_t i = 0; i < fuel; ++i) {
    auto st = step(cur, s);
    if (!st) {
      out.kind = Outcome::Kind::Normal;
      out.result = cur;
      return out;
    }
    cur = st->reduct;
    out.counts[static_cast<std::size_t>(st->rule)]++;
    out.trace.push_back(std::move(*st));
    auto [it, fresh] = seen.insert({alpha_key(cur), out.trace.size()});
    if (!fresh) {
      out.kind = Outcome::Kind::Cycle;
      out.loop_start = it->second;
      return out;
    }
  }
  if (!step(cur, s)) {
    out.kind = Outcome::Kind::Normal;
    out.result = cur;
    return out;
  }
  out.kind = Outcome::Kind::Exhausted;
  return out;
}

std::vector<TermPtr> trace_terms(const TermPtr& t, const std::vector<Step>& steps) {
  std::vector<TermPtr> terms{t};
  for (const auto& s : steps) terms.push_back(s.reduct);
  return terms;
}

DiamondReport diamond_check(const TermPtr& t, Strategy s) {
  DiamondReport rep;
  auto steps = redexes(t, s);
  if (steps.size() < 2) return rep;

  // Alpha-distinct reducts with their one-step successor key sets.
  std::vector<TermPtr> reducts;
  std::vector<std::set<std::string>> succs;
  std::set<std::string> keys;
  for (const auto& st : steps) {
    if (!keys.insert(alpha_key(st.reduct)).second) continue;
    reducts.push_back(st.reduct);
    std::set<std::string> ks;
    for (const auto& nxt : redexes(st.reduct, s)) ks.insert(alpha_key(nxt.reduct));
    succs.push_back(std::move(ks));
  }
  for (std::size_t i = 0; i < reducts.size(); ++i) {
    for (std::size_t j = i + 1; j < reducts.size(); ++j) {
      ++rep.peaks_checked;
      bool joined = std::any_of(succs[i].begin(), succs[i].end(),
                                [&](const std::string& k) { return succs[j].count(k) > 0; });
      if (!joined) {
        rep.violation = true;
        rep.left = reducts[i];
        rep.right = reducts[j];
        return rep;
      }
    }
  }
  return rep;
}

std::optional<TermPtr> bfs_normalize(const TermPtr& t, Strategy s, std::size_t node_budget) {
  std::set<std::string> visited;
  std::deque<TermPtr> queue;
  visited.insert(alpha_key(t));
  queue.push_back(t);
  while (!queue.empty()) {
    TermPtr cur = queue.front();
    queue.pop_front();
    auto steps = redexes(cur, s);
    if (steps.empty()) return cur;
    for (const auto& st : steps) {
      if (visited.size() >= node_budget) continue;
      if (visited.insert(alpha_key(st.reduct)).second) queue.push_back(st.reduct);
    }
  }
  return std::nullopt;
}

BfsReport bfs_explore(const TermPtr& t, Strategy s, std::size_t node_budget) {
  BfsReport rep;
  std::map<std::string, std::size_t> level;
  std::deque<std::pair<TermPtr, std::size_t>> queue;
  level[alpha_key(t)] = 0;
  queue.push_back({t, 0});
  std::set<std::string> nf_keys;
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    auto steps = redexes(cur, s);
    if (steps.empty()) {
      if (nf_keys.insert(alpha_key(cur)).second) rep.normal_forms.push_back(cur);
      continue;
    }
    for (const auto& st : steps) {
      std::string k = alpha_key(st.reduct);
      auto it = level.find(k);
      if (it != level.end()) {
        if (it->second != d + 1) rep.levels_consistent = false;
        continue;
      }
      if (level.size() >= node_budget) {
        rep.exhausted_budget = true;
        continue;
      }
      level[k] = d + 1;
      queue.push_back({st.reduct, d + 1});
    }
  }
  return rep;
}

}  // namespace vsc
