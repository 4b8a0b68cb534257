#include "bracekit/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bracekit {

namespace {

void check_shape(const std::vector<std::vector<Index>>& mul) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw std::invalid_argument("multiplication table is empty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mul[i].size()) != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j)
      if (mul[i][j] < 0 || mul[i][j] >= n)
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of range");
  }
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<Index>> mul, bool check_associativity)
    : n_(static_cast<int>(mul.size())), mul_(std::move(mul)) {
  check_shape(mul_);

  int e = -1;
  for (int c = 0; c < n_ && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x) ok = mul_[c][x] == x && mul_[x][c] == x;
    if (ok) e = c;
  }
  if (e < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity in table");
  identity_ = e;

  inv_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (mul_[x][y] == e && mul_[y][x] == e) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0)
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(x) + " has no inverse", {x});
  }

  if (check_associativity) {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z)
          if (mul_[mul_[x][y]][z] != mul_[x][mul_[y][z]])
            throw Error(ErrorCode::NotAssociative,
                        "associativity fails at x=" + std::to_string(x) +
                            ", y=" + std::to_string(y) + ", z=" + std::to_string(z),
                        {x, y, z});
  }

  orders_.assign(n_, 0);
  for (int x = 0; x < n_; ++x) {
    int acc = x, k = 1;
    while (acc != e) {
      acc = mul_[acc][x];
      ++k;
    }
    orders_[x] = k;
  }
}

GroupTable GroupTable::from_table(std::vector<std::vector<Index>> mul) {
  return GroupTable(std::move(mul), true);
}

GroupTable GroupTable::unchecked(std::vector<std::vector<Index>> mul) {
  return GroupTable(std::move(mul), false);
}

bool GroupTable::is_abelian() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (mul_[x][y] != mul_[y][x]) return false;
  return true;
}

GroupTable group_from_table(std::vector<std::vector<Index>> mul) {
  return GroupTable::from_table(std::move(mul));
}

GroupTable cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<Index>> mul(n, std::vector<Index>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return GroupTable::from_table(std::move(mul));
}

GroupTable dihedral_group(int m) {
  if (m < 1) throw std::invalid_argument("dihedral parameter must be positive");
  const int n = 2 * m;
  std::vector<std::vector<Index>> mul(n, std::vector<Index>(n));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m; ++i)
      for (int l = 0; l < 2; ++l)
        for (int k = 0; k < m; ++k) {
          int rot = j == 0 ? (i + k) % m : ((i - k) % m + m) % m;
          mul[m * j + i][m * l + k] = m * ((j + l) % 2) + rot;
        }
  return GroupTable::from_table(std::move(mul));
}

GroupTable quaternion_group() {
  // s^i t^j at index 4j+i with s^4 = t^4 = 1, s^2 = t^2, t s = s^-1 t:
  // (s^i t^j)(s^k t^l) = s^(i + (-1)^j k + 2jl) t^((j+l) mod 2).
  std::vector<std::vector<Index>> mul(8, std::vector<Index>(8));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i)
      for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 4; ++k) {
          int exp = (((i + (j == 0 ? k : -k) + 2 * j * l) % 4) + 4) % 4;
          mul[4 * j + i][4 * l + k] = 4 * ((j + l) % 2) + exp;
        }
  return GroupTable::from_table(std::move(mul));
}

GroupTable direct_product_group(const GroupTable& a, const GroupTable& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<Index>> mul(n, std::vector<Index>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mul[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return GroupTable::from_table(std::move(mul));
}

GroupTable opposite_group(const GroupTable& g) {
  const int n = g.order();
  std::vector<std::vector<Index>> mul(n, std::vector<Index>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[x][y] = g.mul(y, x);
  return GroupTable::unchecked(std::move(mul));
}

namespace {

constexpr int kMaxNamedOrder = 128;

GroupTable named_atom(const std::string& atom) {
  if (atom == "D4") return dihedral_group(4);
  if (atom == "Q8") return quaternion_group();
  if (atom.size() >= 2 && atom[0] == 'C') {
    const std::string digits = atom.substr(1);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos &&
        digits.size() <= 3) {
      int n = std::stoi(digits);
      if (n >= 1 && n <= kMaxNamedOrder) return cyclic_group(n);
      throw Error(ErrorCode::BoundExceeded,
                  "named group order " + digits + " exceeds bound " + std::to_string(kMaxNamedOrder));
    }
  }
  throw Error(ErrorCode::UnknownName, "unknown group name '" + atom + "'");
}

}  // namespace

GroupTable named_group(std::string_view name) {
  std::string s(name);
  if (s.empty()) throw Error(ErrorCode::UnknownName, "empty group name");
  std::vector<std::string> atoms;
  size_t start = 0;
  while (true) {
    size_t pos = s.find('x', start);
    if (pos == std::string::npos) {
      atoms.push_back(s.substr(start));
      break;
    }
    atoms.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  GroupTable g = named_atom(atoms[0]);
  for (size_t i = 1; i < atoms.size(); ++i) {
    GroupTable h = named_atom(atoms[i]);
    if (g.order() * h.order() > kMaxNamedOrder)
      throw Error(ErrorCode::BoundExceeded, "named group order " +
                                                std::to_string(g.order() * h.order()) +
                                                " exceeds bound " + std::to_string(kMaxNamedOrder));
    g = direct_product_group(g, h);
  }
  return g;
}

ElementSet::ElementSet(std::vector<Index> m, int ambient) : members(std::move(m)), ambient_order(ambient) {
  for (Index x : members)
    if (x < 0 || x >= ambient_order) throw std::out_of_range("element index out of range");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool ElementSet::contains(Index x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

ElementSet closure(const GroupTable& g, const std::vector<Index>& gens) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<Index> list;
  auto add = [&](Index x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  add(g.identity());
  for (Index x : gens) {
    if (x < 0 || x >= n) throw std::out_of_range("generator index out of range");
    add(x);
  }
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < list.size(); ++j) {
      add(g.mul(list[i], list[j]));
      add(g.mul(list[j], list[i]));
    }
  return ElementSet(list, n);
}

bool is_subgroup(const GroupTable& g, const ElementSet& h) {
  if (h.members.empty()) return false;
  if (h.ambient_order != g.order()) return false;
  if (!h.contains(g.identity())) return false;
  for (Index a : h.members)
    for (Index b : h.members)
      if (!h.contains(g.mul(a, b))) return false;
  return true;
}

std::vector<ElementSet> subgroups(const GroupTable& g) {
  const int n = g.order();
  std::set<std::vector<Index>> found;
  std::vector<std::vector<Index>> list;
  auto add = [&](const ElementSet& s) {
    if (found.insert(s.members).second) list.push_back(s.members);
  };
  std::vector<std::vector<Index>> cyclic;
  for (int x = 0; x < n; ++x) {
    ElementSet c = closure(g, {x});
    add(c);
    cyclic.push_back(c.members);
  }
  // Join every known subgroup with every cyclic subgroup until stable; any
  // subgroup is a join of cyclic ones, so this finds them all.
  for (size_t i = 0; i < list.size(); ++i) {
    for (const auto& c : cyclic) {
      std::vector<Index> gens = list[i];
      gens.insert(gens.end(), c.begin(), c.end());
      add(closure(g, gens));
    }
  }
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (const auto& members : found) out.emplace_back(members, n);
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

bool is_normal(const GroupTable& g, const ElementSet& h) {
  if (!is_subgroup(g, h))
    throw Error(ErrorCode::NotASubgroup, "the given set is not a subgroup");
  for (int x = 0; x < g.order(); ++x)
    for (Index a : h.members)
      if (!h.contains(g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

std::vector<GroupTable> groups_of_order(int n) {
  switch (n) {
    case 1: return {cyclic_group(1)};
    case 2: return {cyclic_group(2)};
    case 3: return {cyclic_group(3)};
    case 4: return {cyclic_group(4), named_group("C2xC2")};
    case 5: return {cyclic_group(5)};
    case 6: return {cyclic_group(6), dihedral_group(3)};
    case 7: return {cyclic_group(7)};
    case 8:
      return {cyclic_group(8), named_group("C4xC2"), named_group("C2xC2xC2"), dihedral_group(4),
              quaternion_group()};
    default:
      throw Error(ErrorCode::BoundExceeded,
                  "group catalog covers orders 1..8, requested " + std::to_string(n));
  }
}

std::vector<std::string> groups_of_order_names(int n) {
  switch (n) {
    case 1: return {"C1"};
    case 2: return {"C2"};
    case 3: return {"C3"};
    case 4: return {"C4", "C2xC2"};
    case 5: return {"C5"};
    case 6: return {"C6", "D3"};
    case 7: return {"C7"};
    case 8: return {"C8", "C4xC2", "C2xC2xC2", "D4", "Q8"};
    default:
      throw Error(ErrorCode::BoundExceeded,
                  "group catalog covers orders 1..8, requested " + std::to_string(n));
  }
}

}  // namespace bracekit
