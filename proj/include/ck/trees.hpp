#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace ck {

/// Rooted tree in canonical form: children are sorted by their canonical
/// bracket encoding, so isomorphic trees compare equal. The single node is
/// "[]", the two-node ladder "[[]]", the cherry "[[][]]".
class RootedTree {
 public:
  RootedTree();  // single node
  explicit RootedTree(std::vector<RootedTree> children);

  static RootedTree leaf() { return RootedTree(); }
  static RootedTree decode(const std::string& encoding);

  int degree() const { return degree_; }
  const std::vector<RootedTree>& children() const { return children_; }
  const std::string& encoding() const { return enc_; }

  /// Ladder with n nodes; corolla = root with n-1 leaf children.
  static RootedTree ladder(int n);
  static RootedTree corolla(int n);

  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.enc_ == b.enc_; }
  friend bool operator!=(const RootedTree& a, const RootedTree& b) { return !(a == b); }
  /// Total order: by (degree, encoding).
  friend bool operator<(const RootedTree& a, const RootedTree& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.enc_ < b.enc_;
  }

 private:
  std::vector<RootedTree> children_;
  std::string enc_;
  int degree_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RootedTree& t);

/// Commutative monomial of rooted trees (sorted multiset). The empty forest
/// is the algebra unit.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees);

  static Forest unit() { return Forest(); }
  static Forest single(RootedTree t);
  static Forest decode(const std::string& encoding);  // comma-joined trees

  bool is_unit() const { return trees_.empty(); }
  int degree() const;
  const std::vector<RootedTree>& trees() const { return trees_; }

  Forest operator*(const Forest& o) const;
  Forest times(const RootedTree& t) const;

  /// Comma-joined tree encodings; empty string for the unit.
  std::string encoding() const;
  /// Display form ("1" for the unit).
  std::string str() const;

  friend bool operator==(const Forest& a, const Forest& b) { return a.trees_ == b.trees_; }
  friend bool operator!=(const Forest& a, const Forest& b) { return !(a == b); }
  friend bool operator<(const Forest& a, const Forest& b);

 private:
  std::vector<RootedTree> trees_;  // sorted
};

std::ostream& operator<<(std::ostream& os, const Forest& f);

/// All canonical rooted trees of degree <= max_degree, sorted by
/// (degree, encoding), a deterministic generator indexing.
std::vector<RootedTree> enumerate_trees(int max_degree);

}  // namespace ck
