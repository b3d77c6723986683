#include "vsc/term.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace vsc {

TermPtr var(std::string name) {
  return std::make_shared<Term>(TermKind::Var, std::move(name), nullptr, nullptr, 1);
}

TermPtr lam(std::string binder, TermPtr body) {
  std::size_t s = 1 + body->size;
  return std::make_shared<Term>(TermKind::Lam, std::move(binder), std::move(body), nullptr, s);
}

TermPtr app(TermPtr fun, TermPtr arg) {
  std::size_t s = 1 + fun->size + arg->size;
  return std::make_shared<Term>(TermKind::App, "", std::move(fun), std::move(arg), s);
}

TermPtr es(TermPtr body, std::string binder, TermPtr subject) {
  std::size_t s = 1 + body->size + subject->size;
  return std::make_shared<Term>(TermKind::Es, std::move(binder), std::move(body), std::move(subject), s);
}

bool is_pure(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::Lam: return is_pure(t->a);
    case TermKind::App: return is_pure(t->a) && is_pure(t->b);
    case TermKind::Es: return false;
  }
  return false;
}

bool equal(const TermPtr& t, const TermPtr& u) {
  if (t.get() == u.get()) return true;
  if (t->kind != u->kind || t->size != u->size || t->name != u->name) return false;
  switch (t->kind) {
    case TermKind::Var: return true;
    case TermKind::Lam: return equal(t->a, u->a);
    case TermKind::App:
    case TermKind::Es: return equal(t->a, u->a) && equal(t->b, u->b);
  }
  return false;
}

namespace {

void free_vars_into(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case TermKind::Lam: {
      bool added = bound.insert(t->name).second;
      free_vars_into(t->a, bound, out);
      if (added) bound.erase(t->name);
      return;
    }
    case TermKind::App:
      free_vars_into(t->a, bound, out);
      free_vars_into(t->b, bound, out);
      return;
    case TermKind::Es: {
      free_vars_into(t->b, bound, out);
      bool added = bound.insert(t->name).second;
      free_vars_into(t->a, bound, out);
      if (added) bound.erase(t->name);
      return;
    }
  }
}

void all_names_into(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == TermKind::Var || t->kind == TermKind::Lam || t->kind == TermKind::Es)
    out.insert(t->name);
  if (t->a) all_names_into(t->a, out);
  if (t->b) all_names_into(t->b, out);
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  free_vars_into(t, bound, out);
  return out;
}

std::set<std::string> all_names(const TermPtr& t) {
  std::set<std::string> out;
  all_names_into(t, out);
  return out;
}

std::string NamePool::fresh(const std::string& base) {
  if (!avoid_.count(base)) {
    avoid_.insert(base);
    return base;
  }
  for (unsigned n = 1;; ++n) {
    std::string cand = base + std::to_string(n);
    if (!avoid_.count(cand)) {
      avoid_.insert(cand);
      return cand;
    }
  }
}

TermPtr rename_free(const TermPtr& t, const std::string& from, const std::string& to) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == from ? var(to) : t;
    case TermKind::Lam:
      if (t->name == from) return t;
      return lam(t->name, rename_free(t->a, from, to));
    case TermKind::App:
      return app(rename_free(t->a, from, to), rename_free(t->b, from, to));
    case TermKind::Es: {
      TermPtr subj = rename_free(t->b, from, to);
      TermPtr body = t->name == from ? t->a : rename_free(t->a, from, to);
      return es(body, t->name, subj);
    }
  }
  return t;
}

std::string subst_binder_rename(const TermPtr& body, const std::string& binder,
                                const std::string& x, const TermPtr& u) {
  NamePool pool(all_names(body));
  pool.reserve_all(all_names(u));
  pool.reserve(x);
  return pool.fresh(binder);
}

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& u) {
  std::set<std::string> fv = free_vars(t);
  if (!fv.count(x)) return t;
  switch (t->kind) {
    case TermKind::Var:
      return u;  // t = x, by the guard above
    case TermKind::Lam: {
      std::set<std::string> ufv = free_vars(u);
      if (!ufv.count(t->name)) return lam(t->name, subst(t->a, x, u));
      std::string b2 = subst_binder_rename(t->a, t->name, x, u);
      return lam(b2, subst(rename_free(t->a, t->name, b2), x, u));
    }
    case TermKind::App:
      return app(subst(t->a, x, u), subst(t->b, x, u));
    case TermKind::Es: {
      TermPtr subj = subst(t->b, x, u);
      if (t->name == x) return es(t->a, t->name, subj);
      std::set<std::string> ufv = free_vars(u);
      if (!ufv.count(t->name) || !free_vars(t->a).count(x)) {
        TermPtr body = free_vars(t->a).count(x) ? subst(t->a, x, u) : t->a;
        return es(body, t->name, subj);
      }
      std::string b2 = subst_binder_rename(t->a, t->name, x, u);
      return es(subst(rename_free(t->a, t->name, b2), x, u), b2, subj);
    }
  }
  return t;
}

namespace {

// Canonical bound names: a, b, ..., z, a1, b1, ... skipping `skip`.
class CanonNames {
 public:
  explicit CanonNames(const std::set<std::string>& skip) : skip_(skip) {}
  std::string next() {
    for (;;) {
      std::string cand(1, static_cast<char>('a' + (i_ % 26)));
      if (i_ >= 26) cand += std::to_string(i_ / 26);
      ++i_;
      if (!skip_.count(cand)) return cand;
    }
  }

 private:
  const std::set<std::string>& skip_;
  std::size_t i_ = 0;
};

TermPtr canon_rec(const TermPtr& t, std::map<std::string, std::vector<std::string>>& ren,
                  CanonNames& names) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = ren.find(t->name);
      if (it != ren.end() && !it->second.empty()) return var(it->second.back());
      return t;
    }
    case TermKind::Lam: {
      std::string n = names.next();
      ren[t->name].push_back(n);
      TermPtr body = canon_rec(t->a, ren, names);
      ren[t->name].pop_back();
      return lam(n, body);
    }
    case TermKind::App: {
      TermPtr f = canon_rec(t->a, ren, names);
      TermPtr a = canon_rec(t->b, ren, names);
      return app(f, a);
    }
    case TermKind::Es: {
      std::string n = names.next();
      ren[t->name].push_back(n);
      TermPtr body = canon_rec(t->a, ren, names);
      ren[t->name].pop_back();
      TermPtr subj = canon_rec(t->b, ren, names);
      return es(body, n, subj);
    }
  }
  return t;
}

}  // namespace

TermPtr canon(const TermPtr& t) {
  std::set<std::string> fv = free_vars(t);
  CanonNames names(fv);
  std::map<std::string, std::vector<std::string>> ren;
  return canon_rec(t, ren, names);
}

bool alpha_eq(const TermPtr& t, const TermPtr& u) {
  if (t.get() == u.get()) return true;
  if (t->size != u->size) return false;
  return equal(canon(t), canon(u));
}

namespace {

void key_rec(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += 'v';
      out += t->name;
      out += ';';
      return;
    case TermKind::Lam:
      out += 'L';
      out += t->name;
      out += ';';
      key_rec(t->a, out);
      return;
    case TermKind::App:
      out += '@';
      key_rec(t->a, out);
      key_rec(t->b, out);
      return;
    case TermKind::Es:
      out += 'S';
      out += t->name;
      out += ';';
      key_rec(t->a, out);
      key_rec(t->b, out);
      return;
  }
}

}  // namespace

std::string alpha_key(const TermPtr& t) {
  std::string out;
  out.reserve(t->size * 4);
  key_rec(canon(t), out);
  return out;
}

const char* move_name(Move m) {
  switch (m) {
    case Move::AppL: return "AppL";
    case Move::AppR: return "AppR";
    case Move::LamBody: return "LamBody";
    case Move::EsBody: return "EsBody";
    case Move::EsSubject: return "EsSubject";
  }
  return "?";
}

TermPtr resolve(const TermPtr& t, const Path& path) {
  TermPtr cur = t;
  for (Move m : path) {
    switch (m) {
      case Move::AppL:
        if (cur->kind != TermKind::App) throw std::invalid_argument("path: AppL off an App node");
        cur = cur->a;
        break;
      case Move::AppR:
        if (cur->kind != TermKind::App) throw std::invalid_argument("path: AppR off an App node");
        cur = cur->b;
        break;
      case Move::LamBody:
        if (cur->kind != TermKind::Lam) throw std::invalid_argument("path: LamBody off a Lam node");
        cur = cur->a;
        break;
      case Move::EsBody:
        if (cur->kind != TermKind::Es) throw std::invalid_argument("path: EsBody off an Es node");
        cur = cur->a;
        break;
      case Move::EsSubject:
        if (cur->kind != TermKind::Es) throw std::invalid_argument("path: EsSubject off an Es node");
        cur = cur->b;
        break;
    }
  }
  return cur;
}

TermPtr replace_at(const TermPtr& t, const Path& path, const TermPtr& sub) {
  std::function<TermPtr(const TermPtr&, std::size_t)> go = [&](const TermPtr& cur,
                                                               std::size_t i) -> TermPtr {
    if (i == path.size()) return sub;
    switch (path[i]) {
      case Move::AppL: return app(go(cur->a, i + 1), cur->b);
      case Move::AppR: return app(cur->a, go(cur->b, i + 1));
      case Move::LamBody: return lam(cur->name, go(cur->a, i + 1));
      case Move::EsBody: return es(go(cur->a, i + 1), cur->name, cur->b);
      case Move::EsSubject: return es(cur->a, cur->name, go(cur->b, i + 1));
    }
    return cur;
  };
  resolve(t, path);  // validate
  return go(t, 0);
}

}  // namespace vsc
