#pragma once

#include <utility>
#include <vector>

#include "bracekit/brace.hpp"

namespace bracekit {

/// A map R : X x X -> X x X on X = {0..n-1}, stored as a dense table.
class YbeSolution {
 public:
  /// table[x*n + y] = R(x, y).  Entries are range-checked.
  static YbeSolution from_table(int n, std::vector<std::pair<Index, Index>> table, bool verified = false);

  int order() const { return n_; }
  std::pair<Index, Index> apply(Index x, Index y) const { return table_[x * n_ + y]; }
  const std::vector<std::pair<Index, Index>>& table() const { return table_; }
  /// Set when construction included a braid-relation scan.
  bool verified() const { return verified_; }

  bool operator==(const YbeSolution& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  YbeSolution(int n, std::vector<std::pair<Index, Index>> table, bool verified)
      : n_(n), table_(std::move(table)), verified_(verified) {}

  int n_ = 0;
  std::vector<std::pair<Index, Index>> table_;
  bool verified_ = false;
};

/// The solution attached to a brace:
///   R(x, y) = (x^-1 . (x o y),  inv_o(x^-1 . (x o y)) o x o y)
/// where inv_o is the circle inverse.  The braid relation is re-checked on
/// all n^3 triples; a failure would mean an internal bug and throws
/// std::logic_error.
YbeSolution ybe_from_brace(const SkewBrace& b);

/// R12 R23 R12 = R23 R12 R23 on all n^3 triples.
bool verify_braid(const YbeSolution& r);
/// All left translations y -> pr1 R(x,y) and right translations
/// x -> pr2 R(x,y) are bijections.
bool is_nondegenerate(const YbeSolution& r);
/// R(R(x,y)) = (x,y) for all pairs.
bool is_involutive(const YbeSolution& r);

/// Pair map (r after s): (x,y) -> r(s(x,y)).  Not braid-checked.
YbeSolution compose(const YbeSolution& r, const YbeSolution& s);
/// Both compositions are the identity map on pairs.  Throws
/// Error(OrderMismatch) when the orders differ.
bool is_inverse_pair(const YbeSolution& r, const YbeSolution& s);

/// The two-sided inverse of ybe_from_brace(b): the solution of the opposite
/// brace.  The inverse property is re-checked exhaustively.
YbeSolution inverse_solution(const SkewBrace& b);

}  // namespace bracekit
