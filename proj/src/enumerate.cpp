#include "vsc/enumerate.hpp"

#include <set>
#include <string>

namespace vsc {

namespace {

std::size_t binder_count(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return 0;
    case TermKind::Lam: return 1 + binder_count(t->a);
    case TermKind::App: return binder_count(t->a) + binder_count(t->b);
    case TermKind::Es: return 1 + binder_count(t->a) + binder_count(t->b);
  }
  return 0;
}

struct Enumerator {
  const EnumOptions& opts;
  std::set<std::string> pool_names;
  std::vector<std::string> binder_seq;  // canonical names, pool names skipped

  explicit Enumerator(const EnumOptions& o) : opts(o) {
    for (auto& n : o.free_pool) pool_names.insert(n);
    for (std::size_t i = 0; binder_seq.size() < o.max_size; ++i) {
      std::string cand(1, static_cast<char>('a' + (i % 26)));
      if (i >= 26) cand += std::to_string(i / 26);
      if (!pool_names.count(cand)) binder_seq.push_back(cand);
    }
  }

  // All terms of exactly `size` nodes under `scope` (innermost last), with
  // the next binder drawn at index `c` of the canonical sequence. Binders
  // are assigned in pre-order, so results are their own canonical forms.
  std::vector<TermPtr> gen(std::size_t size, std::size_t c, std::vector<std::string>& scope) {
    std::vector<TermPtr> out;
    if (size == 0) return out;
    if (size == 1) {
      for (const auto& n : scope) out.push_back(var(n));
      for (const auto& n : opts.free_pool) out.push_back(var(n));
      return out;
    }
    {
      const std::string& b = binder_seq[c];
      scope.push_back(b);
      for (auto& body : gen(size - 1, c + 1, scope)) out.push_back(lam(b, body));
      scope.pop_back();
    }
    for (std::size_t l = 1; l + 1 < size; ++l) {
      std::size_t r = size - 1 - l;
      for (auto& f : gen(l, c, scope)) {
        for (auto& a : gen(r, c + binder_count(f), scope)) out.push_back(app(f, a));
      }
    }
    if (!opts.pure_only) {
      for (std::size_t l = 1; l + 1 < size; ++l) {
        std::size_t r = size - 1 - l;
        const std::string& b = binder_seq[c];
        scope.push_back(b);
        std::vector<TermPtr> bodies = gen(l, c + 1, scope);
        scope.pop_back();
        for (auto& body : bodies) {
          for (auto& s : gen(r, c + 1 + binder_count(body), scope)) out.push_back(es(body, b, s));
        }
      }
    }
    return out;
  }
};

}  // namespace

void enumerate_terms(const EnumOptions& opts, const std::function<bool(const TermPtr&)>& fn) {
  Enumerator e(opts);
  std::vector<std::string> scope;
  for (std::size_t s = 1; s <= opts.max_size; ++s) {
    for (auto& t : e.gen(s, 0, scope)) {
      if (!fn(t)) return;
    }
  }
}

std::vector<TermPtr> enumerate_all(const EnumOptions& opts) {
  std::vector<TermPtr> out;
  enumerate_terms(opts, [&](const TermPtr& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace vsc
