#include "bracekit/ybe.hpp"

#include <stdexcept>
#include <string>

namespace bracekit {

YbeSolution YbeSolution::from_table(int n, std::vector<std::pair<Index, Index>> table, bool verified) {
  if (n < 1 || static_cast<int>(table.size()) != n * n)
    throw std::invalid_argument("solution table must have n^2 entries");
  for (const auto& [u, v] : table)
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("solution entry out of range");
  return YbeSolution(n, std::move(table), verified);
}

YbeSolution ybe_from_brace(const SkewBrace& b) {
  const int n = b.order();
  std::vector<std::pair<Index, Index>> table(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Index u = b.dot_mul(b.dot_inv(x), b.circle_mul(x, y));
      const Index v = b.circle_mul(b.circle_mul(b.circle_inv(u), x), y);
      table[x * n + y] = {u, v};
    }
  YbeSolution r = YbeSolution::from_table(n, std::move(table), true);
  if (!verify_braid(r)) throw std::logic_error("brace-derived map violates the braid relation");
  return r;
}

bool verify_braid(const YbeSolution& r) {
  const int n = r.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // R12 R23 R12 applied to (x, y, z).
        auto [a1, b1] = r.apply(x, y);
        auto [b2, c2] = r.apply(b1, z);
        auto [a3, b3] = r.apply(a1, b2);
        // R23 R12 R23 applied to (x, y, z).
        auto [p1, q1] = r.apply(y, z);
        auto [o2, p2] = r.apply(x, p1);
        auto [p3, q3] = r.apply(p2, q1);
        if (a3 != o2 || b3 != p3 || c2 != q3) return false;
      }
  return true;
}

bool is_nondegenerate(const YbeSolution& r) {
  const int n = r.order();
  for (int x = 0; x < n; ++x) {
    std::vector<char> hit_f(n, 0), hit_g(n, 0);
    for (int y = 0; y < n; ++y) {
      const Index f = r.apply(x, y).first;   // y -> pr1 R(x, y)
      const Index g = r.apply(y, x).second;  // y -> pr2 R(y, x)
      if (hit_f[f] || hit_g[g]) return false;
      hit_f[f] = 1;
      hit_g[g] = 1;
    }
  }
  return true;
}

bool is_involutive(const YbeSolution& r) {
  const int n = r.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = r.apply(x, y);
      if (r.apply(u, v) != std::make_pair(x, y)) return false;
    }
  return true;
}

YbeSolution compose(const YbeSolution& r, const YbeSolution& s) {
  if (r.order() != s.order())
    throw Error(ErrorCode::OrderMismatch, "cannot compose solutions of orders " +
                                              std::to_string(r.order()) + " and " +
                                              std::to_string(s.order()));
  const int n = r.order();
  std::vector<std::pair<Index, Index>> table(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.apply(x, y);
      table[x * n + y] = r.apply(u, v);
    }
  return YbeSolution::from_table(n, std::move(table));
}

bool is_inverse_pair(const YbeSolution& r, const YbeSolution& s) {
  if (r.order() != s.order())
    throw Error(ErrorCode::OrderMismatch, "cannot compare solutions of orders " +
                                              std::to_string(r.order()) + " and " +
                                              std::to_string(s.order()));
  const int n = r.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = r.apply(x, y);
      if (s.apply(u, v) != std::make_pair(x, y)) return false;
      auto [p, q] = s.apply(x, y);
      if (r.apply(p, q) != std::make_pair(x, y)) return false;
    }
  return true;
}

YbeSolution inverse_solution(const SkewBrace& b) {
  YbeSolution inv = ybe_from_brace(opposite(b));
  if (!is_inverse_pair(ybe_from_brace(b), inv))
    throw std::logic_error("opposite-brace map is not inverse to the brace map");
  return inv;
}

}  // namespace bracekit
