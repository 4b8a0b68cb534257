#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "bracekit/group.hpp"

namespace bracekit {

/// A skew left brace: two group structures on one index set, written
/// x . y (dot) and x o y (circle), sharing the identity and satisfying
///   x o (y . z) = (x o y) . x^-1 . (x o z)
/// for all triples, where x^-1 is the dot inverse.
class SkewBrace {
 public:
  /// Full validation: equal orders, shared identity, exhaustive relation
  /// scan.  Throws Error with code OrderMismatch, IdentityMismatch or
  /// BraceRelationFails (witness: the first violating triple x,y,z).
  static SkewBrace from_tables(GroupTable dot, GroupTable circle);
  /// For results whose validity is forced by construction (opposite,
  /// direct product); skips the relation scan but still checks identities.
  static SkewBrace unchecked(GroupTable dot, GroupTable circle);

  int order() const { return dot_.order(); }
  const GroupTable& dot() const { return dot_; }
  const GroupTable& circle() const { return circle_; }
  Index identity() const { return dot_.identity(); }

  Index dot_mul(Index x, Index y) const { return dot_.mul(x, y); }
  Index dot_inv(Index x) const { return dot_.inv(x); }
  Index circle_mul(Index x, Index y) const { return circle_.mul(x, y); }
  Index circle_inv(Index x) const { return circle_.inv(x); }

  /// (dot order, circle order) of each element; cached at construction.
  const std::vector<std::pair<int, int>>& order_profiles() const { return profiles_; }

  bool operator==(const SkewBrace& other) const {
    return dot_ == other.dot_ && circle_ == other.circle_;
  }

 private:
  SkewBrace(GroupTable dot, GroupTable circle);

  GroupTable dot_;
  GroupTable circle_;
  std::vector<std::pair<int, int>> profiles_;
};

/// First triple (x,y,z) violating the brace relation, if any.
std::optional<std::array<Index, 3>> find_brace_relation_violation(const GroupTable& dot,
                                                                  const GroupTable& circle);

/// Validating constructor (same as SkewBrace::from_tables).
SkewBrace brace_from_tables(GroupTable dot, GroupTable circle);

/// x o y = x . y.
SkewBrace trivial_brace(const GroupTable& g);
/// x o y = y . x.
SkewBrace almost_trivial_brace(const GroupTable& g);
/// The order-8 brace with dihedral dot group and quaternion circle group:
/// dot is D4 (eta^i pi^j at index 4j+i) and
/// eta^i pi^j o eta^k pi^l = eta^(k + (-1)^l i + 2jl) pi^(j+l).
SkewBrace d4q8_brace();

/// Same circle, reversed dot.  Valid by construction.
SkewBrace opposite(const SkewBrace& b);
/// Componentwise operations, row-major pairing of indices.
SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b);

struct BraceMorphism {
  SkewBrace source;
  SkewBrace target;
  std::vector<Index> map;  // map[x] = image of x
};

/// Whether map preserves both operations (map[x . y] = map[x] . map[y] and
/// likewise for circle) on all pairs.
bool is_homomorphism(const SkewBrace& src, const SkewBrace& dst, const std::vector<Index>& map);

/// Backtracking search over images of a generating set of (B,o), pruned by
/// (dot order, circle order) profiles.  Deterministic: returns the first
/// isomorphism in candidate order, or nullopt after exhausting the search.
std::optional<BraceMorphism> find_isomorphism(const SkewBrace& b, const SkewBrace& c);

}  // namespace bracekit
