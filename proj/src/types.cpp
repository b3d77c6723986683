#include "vsc/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace vsc {

LinearType LinearType::arrow(MultiType left, MultiType right) {
  LinearType t;
  t.arrow_ = std::make_shared<ArrowNode>(ArrowNode{std::move(left), std::move(right)});
  return t;
}

const MultiType& LinearType::left() const { return arrow_->left; }
const MultiType& LinearType::right() const { return arrow_->right; }

std::strong_ordering operator<=>(const LinearType& a, const LinearType& b) {
  if (a.is_ground() && b.is_ground()) return std::strong_ordering::equal;
  if (a.is_ground()) return std::strong_ordering::less;
  if (b.is_ground()) return std::strong_ordering::greater;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

bool operator==(const LinearType& a, const LinearType& b) { return (a <=> b) == 0; }

MultiType::MultiType(std::vector<LinearType> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
}

MultiType MultiType::sum(const MultiType& other) const {
  std::vector<LinearType> out;
  out.reserve(elems_.size() + other.elems_.size());
  std::merge(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
             std::back_inserter(out));
  MultiType m;
  m.elems_ = std::move(out);
  return m;
}

MultiType MultiType::minus(const MultiType& other) const {
  std::vector<LinearType> out;
  auto it = elems_.begin();
  for (const auto& o : other.elems_) {
    for (;;) {
      if (it == elems_.end()) throw std::invalid_argument("multiset difference underflow");
      if (*it == o) {
        ++it;
        break;
      }
      out.push_back(*it);
      ++it;
    }
  }
  out.insert(out.end(), it, elems_.end());
  MultiType m;
  m.elems_ = std::move(out);
  return m;
}

bool MultiType::contains(const MultiType& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end());
}

std::strong_ordering operator<=>(const MultiType& a, const MultiType& b) {
  if (auto c = a.elems_.size() <=> b.elems_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.elems_.size(); ++i) {
    if (auto c = a.elems_[i] <=> b.elems_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const MultiType& a, const MultiType& b) { return (a <=> b) == 0; }

const MultiType& TypeContext::get(const std::string& x) const {
  static const MultiType kEmpty;
  auto it = entries_.find(x);
  return it == entries_.end() ? kEmpty : it->second;
}

void TypeContext::set(const std::string& x, MultiType m) {
  if (m.empty()) {
    entries_.erase(x);
  } else {
    entries_[x] = std::move(m);
  }
}

TypeContext TypeContext::with(const std::string& x, MultiType m) const {
  TypeContext out = *this;
  out.set(x, out.get(x).sum(m));
  return out;
}

TypeContext TypeContext::without(const std::string& x) const {
  TypeContext out = *this;
  out.entries_.erase(x);
  return out;
}

TypeContext TypeContext::sum(const TypeContext& other) const {
  TypeContext out = *this;
  for (const auto& [x, m] : other.entries_) out.set(x, out.get(x).sum(m));
  return out;
}

std::string to_string(const LinearType& a) {
  if (a.is_ground()) return "G";
  return to_string(a.left()) + " -o " + to_string(a.right());
}

std::string to_string(const MultiType& m) {
  if (m.empty()) return "0";
  std::string out = "[";
  bool first = true;
  for (const auto& a : m.elems()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(a);
  }
  return out + "]";
}

std::string to_string(const TypeContext& g) {
  std::string out;
  bool first = true;
  for (const auto& [x, m] : g.entries()) {
    if (!first) out += ", ";
    first = false;
    out += x + ":" + to_string(m);
  }
  return out;
}

bool is_right_linear(const LinearType& a) {
  if (a.is_ground()) return true;
  return is_left(a.left()) && is_right(a.right());
}

bool is_left_linear(const LinearType& a) {
  if (a.is_ground()) return true;
  return is_right(a.left()) && is_left(a.right());
}

bool is_right(const MultiType& m) {
  if (m.empty()) return false;
  return std::all_of(m.elems().begin(), m.elems().end(), is_right_linear);
}

bool is_left(const MultiType& m) {
  return std::all_of(m.elems().begin(), m.elems().end(), is_left_linear);
}

bool is_left_ctx(const TypeContext& g) {
  for (const auto& [x, m] : g.entries()) {
    if (!is_left(m)) return false;
  }
  return true;
}

}  // namespace vsc
