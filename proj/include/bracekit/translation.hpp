#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/perm.hpp"

namespace bracekit {

/// A brace together with the regular subgroup of Perm(G) that realizes it.
/// bijection[i] = eta_i[1_G] identifies element i of the subgroup with a
/// point of G; the brace's circle table is the pullback of G's operation
/// along it and the dot table is the subgroup's composition table.
struct TranslationRecord {
  RegularSubgroup subgroup;
  std::vector<Index> bijection;
  SkewBrace brace;

  const GroupTable& ambient() const { return subgroup.ambient(); }
};

/// N must be regular and G-stable in Perm(G) (errors NotRegular, NotGStable;
/// also OrderMismatch when N's ambient differs from g).  The resulting brace
/// keeps N's element indexing and passes full verification.
TranslationRecord brace_from_regular_subgroup(const GroupTable& g, const RegularSubgroup& n);

/// The converse direction: from a brace B build N = {eta_x} with
/// eta_x[y] = x . y inside Perm(B, o).  Round-trips to a table-identical
/// brace.
TranslationRecord regular_subgroup_from_brace(const SkewBrace& b);

/// Record for the centralizer N' of N: realizes the opposite brace with the
/// same indexing.  Verifies that the identity indexing map is an isomorphism
/// onto opposite(record.brace).
TranslationRecord opposite_record(const TranslationRecord& record);

/// Elements y with pr2 R(x,y) = x for all x; cross-checked against the
/// fixed-point description (x o y) . x^-1 = y.
ElementSet group_like_elements(const SkewBrace& b);

struct PairCensus {
  long l_count = 0;  // pairs with x o y = x . y
  long r_count = 0;  // pairs with x o y = y . x
  std::optional<std::vector<std::pair<Index, Index>>> l_pairs;
  std::optional<std::vector<std::pair<Index, Index>>> r_pairs;
};

PairCensus pair_census(const SkewBrace& b, bool include_pairs = false);

struct SelfOppositeVerdict {
  enum class Kind { Equal, Isomorphic, No };
  Kind kind = Kind::No;
  std::optional<BraceMorphism> witness;                  // Isomorphic
  std::optional<std::pair<long, long>> pair_counts;      // No via count obstruction
  bool search_exhausted = false;                         // No via exhausted search
};

/// Checks in fixed order: table equality, pair-count obstruction,
/// order-profile obstruction, then exhaustive isomorphism search.
SelfOppositeVerdict is_self_opposite(const SkewBrace& b);

struct NamedRegularSubgroup {
  std::string name;
  RegularSubgroup subgroup;
};

/// The six regular, stable, dihedral subgroups of Perm(Q8) generated by
///   N_{s,rho}  = <rho(s),  lambda(s) rho(t)>   N_{s,lambda}  = <lambda(s),  lambda(t) rho(s)>
///   N_{t,rho}  = <rho(t),  lambda(t) rho(s)>   N_{t,lambda}  = <lambda(t),  lambda(s) rho(t)>
///   N_{st,rho} = <rho(st), lambda(st) rho(t)>  N_{st,lambda} = <lambda(st), lambda(t) rho(st)>
/// with elements indexed g1^i g2^j -> 4j+i.  Each is verified regular,
/// stable, of order 8 and dihedral.
std::vector<NamedRegularSubgroup> q8_d4_subgroups();

struct BraceEnumeration {
  std::vector<SkewBrace> braces;  // circle fixed, dot varying; sorted by dot table
  int isomorphism_classes = 0;
};

/// All braces with the given circle table, found by scanning identity-fixing
/// bijections onto each candidate dot-group type (default: all groups of
/// that order, supported for n <= bound).  Deduplicated by table equality.
/// Throws Error(BoundExceeded) above the bound (default 8).
BraceEnumeration enumerate_braces(const GroupTable& circle,
                                  const std::vector<GroupTable>* dot_candidates = nullptr,
                                  int bound = 8);

/// Generator words for the CLI subgroup language: a comma-separated list of
/// words, each word a '*'-separated product of factors lambda(w) / rho(w),
/// where w multiplies out generator names of the named group (or integer
/// element indices).  Example over Q8: "rho(s),lambda(s)*rho(t)".
/// Parse failures throw ParseError with a 1-based character position.
std::vector<Permutation> parse_generator_spec(const GroupTable& g,
                                              const std::vector<std::pair<std::string, Index>>& names,
                                              const std::string& spec);

}  // namespace bracekit
