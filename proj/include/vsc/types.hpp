#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vsc {

// Call-by-value multi types:
//   linear types  A, B ::= G | M -o N
//   multi types   M, N ::= [A1, ..., An]   (finite multisets, 0 when empty)
// Multisets are kept in a canonical sorted encoding so equality and hashing
// are order-insensitive.

class MultiType;

struct ArrowNode;

class LinearType {
 public:
  LinearType() = default;  // ground G
  static LinearType ground() { return LinearType(); }
  static LinearType arrow(MultiType left, MultiType right);

  bool is_ground() const { return arrow_ == nullptr; }
  bool is_arrow() const { return arrow_ != nullptr; }
  const MultiType& left() const;
  const MultiType& right() const;

  friend std::strong_ordering operator<=>(const LinearType& a, const LinearType& b);
  friend bool operator==(const LinearType& a, const LinearType& b);

 private:
  std::shared_ptr<const ArrowNode> arrow_;  // null = G
};

class MultiType {
 public:
  MultiType() = default;  // 0
  explicit MultiType(std::vector<LinearType> elems);
  static MultiType singleton(LinearType a) { return MultiType({std::move(a)}); }

  bool empty() const { return elems_.empty(); }
  std::size_t count() const { return elems_.size(); }
  const std::vector<LinearType>& elems() const { return elems_; }

  MultiType sum(const MultiType& other) const;
  // Multiset difference; throws if other is not contained in *this.
  MultiType minus(const MultiType& other) const;
  bool contains(const MultiType& other) const;

  friend std::strong_ordering operator<=>(const MultiType& a, const MultiType& b);
  friend bool operator==(const MultiType& a, const MultiType& b);

 private:
  std::vector<LinearType> elems_;  // sorted
};

struct ArrowNode {
  MultiType left, right;
};

// Total map from variables to multi types; only non-empty entries are stored.
class TypeContext {
 public:
  TypeContext() = default;

  const MultiType& get(const std::string& x) const;
  void set(const std::string& x, MultiType m);
  TypeContext with(const std::string& x, MultiType m) const;
  TypeContext without(const std::string& x) const;

  TypeContext sum(const TypeContext& other) const;
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, MultiType>& entries() const { return entries_; }

  friend bool operator==(const TypeContext& a, const TypeContext& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<std::string, MultiType> entries_;
};

std::string to_string(const LinearType& a);
std::string to_string(const MultiType& m);
std::string to_string(const TypeContext& g);

// Shrinking classes: right multi types are non-empty multisets of
// right linear types; left multi types allow emptiness.
//   A right ::= G | M_left -o M_right      A left ::= G | M_right -o M_left
bool is_right_linear(const LinearType& a);
bool is_left_linear(const LinearType& a);
bool is_right(const MultiType& m);
bool is_left(const MultiType& m);
bool is_left_ctx(const TypeContext& g);

}  // namespace vsc
