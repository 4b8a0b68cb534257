#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bracekit/error.hpp"

namespace bracekit {

using Index = int;

/// A finite group given by a dense multiplication table over indices 0..n-1.
/// The identity, inverse table and element orders are derived at construction.
class GroupTable {
 public:
  /// Full validation: finds the identity, checks two-sided inverses, then
  /// scans all n^3 triples for associativity.  Throws Error with code
  /// NoIdentity, NoInverse (witness: the element) or NotAssociative
  /// (witness: the triple).
  static GroupTable from_table(std::vector<std::vector<Index>> mul);

  /// For tables that are groups by construction; derives identity and
  /// inverses but skips the associativity scan.
  static GroupTable unchecked(std::vector<std::vector<Index>> mul);

  int order() const { return n_; }
  Index mul(Index x, Index y) const { return mul_[x][y]; }
  Index inv(Index x) const { return inv_[x]; }
  Index identity() const { return identity_; }
  int element_order(Index x) const { return orders_[x]; }
  bool is_abelian() const;
  const std::vector<std::vector<Index>>& rows() const { return mul_; }

  bool operator==(const GroupTable& other) const { return mul_ == other.mul_; }

 private:
  GroupTable(std::vector<std::vector<Index>> mul, bool check_associativity);

  int n_ = 0;
  std::vector<std::vector<Index>> mul_;
  Index identity_ = 0;
  std::vector<Index> inv_;
  std::vector<int> orders_;
};

/// Validating constructor (same as GroupTable::from_table).
GroupTable group_from_table(std::vector<std::vector<Index>> mul);

GroupTable cyclic_group(int n);
/// Dihedral group of order 2m (symmetries of the regular m-gon),
/// r^i f^j at index m*j + i.
GroupTable dihedral_group(int m);
/// Quaternion group of order 8, s^i t^j at index 4*j + i.
GroupTable quaternion_group();
/// Row-major pairing: (a, b) at index a*|B| + b.
GroupTable direct_product_group(const GroupTable& a, const GroupTable& b);
/// Same element set with x *' y = y * x.
GroupTable opposite_group(const GroupTable& g);

/// Canonical table for "Cn", "D4", "Q8" or a direct product such as "C2xC2"
/// or "D4xQ8".  Throws Error(UnknownName) for anything else.
GroupTable named_group(std::string_view name);

/// A subset of {0..n-1}, stored sorted and duplicate-free.
struct ElementSet {
  std::vector<Index> members;
  int ambient_order = 0;

  ElementSet() = default;
  ElementSet(std::vector<Index> m, int ambient);

  bool contains(Index x) const;
  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const ElementSet& other) const = default;
};

/// Smallest subgroup containing the given elements.
ElementSet closure(const GroupTable& g, const std::vector<Index>& gens);
bool is_subgroup(const GroupTable& g, const ElementSet& h);
/// All subgroups, ordered by size then lexicographically by member list.
std::vector<ElementSet> subgroups(const GroupTable& g);
/// Whether g h g^-1 stays in h for all g.  Throws Error(NotASubgroup).
bool is_normal(const GroupTable& g, const ElementSet& h);

/// All groups of the given order up to isomorphism (supported for n <= 8).
std::vector<GroupTable> groups_of_order(int n);
std::vector<std::string> groups_of_order_names(int n);

}  // namespace bracekit
