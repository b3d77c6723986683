#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace vsc {

// Terms of the value substitution calculus:
//   x | \x.t | t u | t[x <- u]
// Es(body, x, subject) binds x in body only (let x = subject in body).
// Terms are immutable and freely shared; all operations build new trees.

enum class TermKind { Var, Lam, App, Es };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::string name;  // Var: the variable; Lam/Es: the binder
  TermPtr a;         // Lam: body; App: function; Es: body
  TermPtr b;         // App: argument; Es: subject
  std::size_t size;  // node count

  Term(TermKind k, std::string n, TermPtr a_, TermPtr b_, std::size_t s)
      : kind(k), name(std::move(n)), a(std::move(a_)), b(std::move(b_)), size(s) {}
};

TermPtr var(std::string name);
TermPtr lam(std::string binder, TermPtr body);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr es(TermPtr body, std::string binder, TermPtr subject);

bool is_pure(const TermPtr& t);

// Exact structural equality, names included.
bool equal(const TermPtr& t, const TermPtr& u);

std::set<std::string> free_vars(const TermPtr& t);
// Every identifier occurring in t, free or bound.
std::set<std::string> all_names(const TermPtr& t);

// Deterministic fresh-name source. Seeded with the names to avoid;
// fresh(base) yields base, or base1, base2, ... (smallest unused suffix),
// and adds the result to the avoid set.
class NamePool {
 public:
  NamePool() = default;
  explicit NamePool(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}

  void reserve(const std::string& name) { avoid_.insert(name); }
  void reserve_all(const std::set<std::string>& names) { avoid_.insert(names.begin(), names.end()); }
  std::string fresh(const std::string& base);

 private:
  std::set<std::string> avoid_;
};

// Renames free occurrences of `from` to `to`. `to` must not occur in t.
TermPtr rename_free(const TermPtr& t, const std::string& from, const std::string& to);

// Capture-avoiding substitution t{x <- u}. Binders are renamed (via a locally
// seeded NamePool) only when capture would occur; if x is not free in t the
// input is returned unchanged. The computation is compositional: the result
// for a subterm never depends on its surroundings.
TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& u);

// The name subst picks when it must rename a binder over `body` while
// substituting u for x. Exposed so derivation transports mirror subst.
std::string subst_binder_rename(const TermPtr& body, const std::string& binder,
                                const std::string& x, const TermPtr& u);

// Canonical alpha-form: binders renamed, in pre-order, to a, b, c, ...
// skipping names free in t. Two terms are alpha-equivalent iff their
// canonical forms are (structurally) equal.
TermPtr canon(const TermPtr& t);
bool alpha_eq(const TermPtr& t, const TermPtr& u);

// Canonical key usable for hashing and visited-set membership.
std::string alpha_key(const TermPtr& t);

// Paths address subterms; each move names the child taken.
enum class Move { AppL, AppR, LamBody, EsBody, EsSubject };
using Path = std::vector<Move>;

const char* move_name(Move m);

// Subterm at `path`; throws std::invalid_argument if the path leaves t.
TermPtr resolve(const TermPtr& t, const Path& path);
// Replaces the subterm at `path`.
TermPtr replace_at(const TermPtr& t, const Path& path, const TermPtr& sub);

}  // namespace vsc
