#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracekit/brace.hpp"

namespace bracekit {

struct QuasiIdealCheck {
  bool ok = false;
  /// Lexicographically first violating pair (x, y) with y in I, when !ok.
  std::optional<std::pair<Index, Index>> witness;
};

/// I must be a subgroup of (B, .), else Error(NotASubgroup).
/// Quasi-ideal: x^-1 . (x o y) stays in I for all x in B, y in I.
QuasiIdealCheck is_quasi_ideal(const SkewBrace& b, const ElementSet& i);

/// C must be a subgroup of (B, .), else Error(NotASubgroup).
/// Circle-stable: (x o y) . x^-1 stays in C for all x in B, y in C.
bool is_circle_stable(const SkewBrace& b, const ElementSet& c);

struct IdealReport {
  ElementSet subject;
  bool is_subgroup_dot = false;
  bool is_quasi_ideal = false;
  bool is_dot_qi = false;     // quasi-ideal and normal in (B, .)
  bool is_circle_qi = false;  // quasi-ideal and normal in (B, o)
  bool is_ideal = false;      // both of the above
  bool is_circle_stable = false;
  std::optional<std::pair<Index, Index>> witness;  // quasi-ideal violation
  std::string annotation;  // "", "realizable", "realizable + HG tower",
                           // "realizable + Galois", "both"
};

IdealReport classify_subgroup(const SkewBrace& b, const ElementSet& i);

struct CensusCounts {
  int subgroups = 0;
  int quasi_ideals = 0;
  int dot_qis = 0;
  int circle_qis = 0;
  int ideals = 0;
  int circle_stable = 0;
};

struct Census {
  std::vector<IdealReport> reports;  // one per subgroup of (B, .), in subgroup order
  CensusCounts counts;
};

Census census(const SkewBrace& b);

struct QuotientResult {
  SkewBrace sub;       // the brace induced on I (members reindexed in sorted order)
  SkewBrace quotient;  // the brace on cosets of I (labeled by minimal member)
  std::vector<Index> projection;  // element -> coset index
};

/// I must be an ideal, else Error(NotAnIdeal).  Both returned braces pass
/// full verification.
QuotientResult quotient_brace(const SkewBrace& b, const ElementSet& i);

}  // namespace bracekit
