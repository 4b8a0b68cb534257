#include "bracekit/brace.hpp"

#include <algorithm>

namespace bracekit {

std::optional<std::array<Index, 3>> find_brace_relation_violation(const GroupTable& dot,
                                                                  const GroupTable& circle) {
  const int n = dot.order();
  for (int x = 0; x < n; ++x) {
    const Index xi = dot.inv(x);
    for (int y = 0; y < n; ++y) {
      const Index xy = circle.mul(x, y);
      const Index left_part = dot.mul(xy, xi);
      for (int z = 0; z < n; ++z)
        if (circle.mul(x, dot.mul(y, z)) != dot.mul(left_part, circle.mul(x, z)))
          return std::array<Index, 3>{x, y, z};
    }
  }
  return std::nullopt;
}

SkewBrace::SkewBrace(GroupTable dot, GroupTable circle)
    : dot_(std::move(dot)), circle_(std::move(circle)) {
  profiles_.reserve(dot_.order());
  for (int x = 0; x < dot_.order(); ++x)
    profiles_.emplace_back(dot_.element_order(x), circle_.element_order(x));
}

SkewBrace SkewBrace::from_tables(GroupTable dot, GroupTable circle) {
  if (dot.order() != circle.order())
    throw Error(ErrorCode::OrderMismatch,
                "dot table has order " + std::to_string(dot.order()) + " but circle table has order " +
                    std::to_string(circle.order()));
  if (dot.identity() != circle.identity())
    throw Error(ErrorCode::IdentityMismatch,
                "dot identity is " + std::to_string(dot.identity()) + " but circle identity is " +
                    std::to_string(circle.identity()),
                {dot.identity(), circle.identity()});
  if (auto bad = find_brace_relation_violation(dot, circle))
    throw Error(ErrorCode::BraceRelationFails,
                "brace relation fails at x=" + std::to_string((*bad)[0]) +
                    ", y=" + std::to_string((*bad)[1]) + ", z=" + std::to_string((*bad)[2]),
                {(*bad)[0], (*bad)[1], (*bad)[2]});
  return SkewBrace(std::move(dot), std::move(circle));
}

SkewBrace SkewBrace::unchecked(GroupTable dot, GroupTable circle) {
  if (dot.order() != circle.order() || dot.identity() != circle.identity())
    throw Error(ErrorCode::IdentityMismatch, "tables do not share an identity");
  return SkewBrace(std::move(dot), std::move(circle));
}

SkewBrace brace_from_tables(GroupTable dot, GroupTable circle) {
  return SkewBrace::from_tables(std::move(dot), std::move(circle));
}

SkewBrace trivial_brace(const GroupTable& g) { return SkewBrace::unchecked(g, g); }

SkewBrace almost_trivial_brace(const GroupTable& g) {
  return SkewBrace::unchecked(g, opposite_group(g));
}

SkewBrace d4q8_brace() {
  GroupTable dot = dihedral_group(4);
  std::vector<std::vector<Index>> circle(8, std::vector<Index>(8));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i)
      for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 4; ++k) {
          int exp = (((k + (l == 0 ? i : -i) + 2 * j * l) % 4) + 4) % 4;
          circle[4 * j + i][4 * l + k] = 4 * ((j + l) % 2) + exp;
        }
  return SkewBrace::from_tables(std::move(dot), GroupTable::from_table(std::move(circle)));
}

SkewBrace opposite(const SkewBrace& b) {
  return SkewBrace::unchecked(opposite_group(b.dot()), b.circle());
}

SkewBrace direct_product(const SkewBrace& a, const SkewBrace& b) {
  return SkewBrace::unchecked(direct_product_group(a.dot(), b.dot()),
                              direct_product_group(a.circle(), b.circle()));
}

bool is_homomorphism(const SkewBrace& src, const SkewBrace& dst, const std::vector<Index>& map) {
  if (static_cast<int>(map.size()) != src.order()) return false;
  for (Index v : map)
    if (v < 0 || v >= dst.order()) return false;
  for (int x = 0; x < src.order(); ++x)
    for (int y = 0; y < src.order(); ++y) {
      if (map[src.dot_mul(x, y)] != dst.dot_mul(map[x], map[y])) return false;
      if (map[src.circle_mul(x, y)] != dst.circle_mul(map[x], map[y])) return false;
    }
  return true;
}

namespace {

// A generating sequence of (B,o) together with, per prefix length t, the BFS
// enumeration of the subgroup it generates: each non-identity element is
// parent o generator for an earlier parent.
struct GenChain {
  std::vector<Index> gens;
  struct Step {
    Index element;
    int parent;  // position in the prefix list; -1 for the identity
    int gen;     // generator number used
  };
  std::vector<std::vector<Step>> levels;  // levels[t]: subgroup of gens[0..t]
};

GenChain build_chain(const SkewBrace& b) {
  const int n = b.order();
  GenChain chain;
  std::vector<char> in_closure(n, 0);
  in_closure[b.identity()] = 1;
  int covered = 1;
  while (covered < n) {
    Index next = -1;
    for (int x = 0; x < n && next < 0; ++x)
      if (!in_closure[x]) next = x;
    chain.gens.push_back(next);
    std::vector<GenChain::Step> level{{b.identity(), -1, -1}};
    std::vector<char> seen(n, 0);
    seen[b.identity()] = 1;
    for (size_t i = 0; i < level.size(); ++i)
      for (size_t g = 0; g < chain.gens.size(); ++g) {
        Index e = b.circle_mul(level[i].element, chain.gens[g]);
        if (!seen[e]) {
          seen[e] = 1;
          level.push_back({e, static_cast<int>(i), static_cast<int>(g)});
        }
      }
    chain.levels.push_back(level);
    covered = 0;
    in_closure = seen;
    for (char c : seen) covered += c;
  }
  return chain;
}

// Extends generator images along one BFS level and checks that the partial
// map is injective, profile-preserving and respects both operations wherever
// both arguments (and, for membership, the product) are covered.
bool consistent_partial(const SkewBrace& b, const SkewBrace& c,
                        const std::vector<GenChain::Step>& level, const std::vector<Index>& gen_images,
                        std::vector<Index>& out_map) {
  const int n = b.order();
  std::vector<Index> image(n, -1);
  std::vector<char> hit(n, 0);
  std::vector<Index> covered;
  covered.reserve(level.size());
  for (const auto& step : level) {
    Index img;
    if (step.parent < 0) {
      img = c.identity();
    } else {
      Index parent_img = image[level[step.parent].element];
      img = c.circle_mul(parent_img, gen_images[step.gen]);
    }
    if (hit[img]) return false;
    if (b.order_profiles()[step.element] != c.order_profiles()[img]) return false;
    hit[img] = 1;
    image[step.element] = img;
    covered.push_back(step.element);
  }
  for (Index x : covered)
    for (Index y : covered) {
      const Index dxy = b.dot_mul(x, y);
      const Index image_dot = c.dot_mul(image[x], image[y]);
      if (image[dxy] >= 0) {
        if (image[dxy] != image_dot) return false;
      } else if (hit[image_dot]) {
        return false;
      }
      if (image[b.circle_mul(x, y)] != c.circle_mul(image[x], image[y])) return false;
    }
  out_map = std::move(image);
  return true;
}

bool search(const SkewBrace& b, const SkewBrace& c, const GenChain& chain, size_t t,
            std::vector<Index>& gen_images, std::vector<Index>& out_map) {
  const auto& profile = b.order_profiles()[chain.gens[t]];
  for (int cand = 0; cand < c.order(); ++cand) {
    if (c.order_profiles()[cand] != profile) continue;
    gen_images[t] = cand;
    std::vector<Index> map;
    if (!consistent_partial(b, c, chain.levels[t], gen_images, map)) continue;
    if (t + 1 == chain.gens.size()) {
      out_map = std::move(map);
      return true;
    }
    if (search(b, c, chain, t + 1, gen_images, out_map)) return true;
  }
  return false;
}

}  // namespace

std::optional<BraceMorphism> find_isomorphism(const SkewBrace& b, const SkewBrace& c) {
  if (b.order() != c.order()) return std::nullopt;
  std::vector<std::pair<int, int>> pb = b.order_profiles(), pc = c.order_profiles();
  std::sort(pb.begin(), pb.end());
  std::sort(pc.begin(), pc.end());
  if (pb != pc) return std::nullopt;
  if (b.order() == 1) return BraceMorphism{b, c, {c.identity()}};
  GenChain chain = build_chain(b);
  std::vector<Index> gen_images(chain.gens.size(), -1);
  std::vector<Index> map;
  if (!search(b, c, chain, 0, gen_images, map)) return std::nullopt;
  return BraceMorphism{b, c, std::move(map)};
}

}  // namespace bracekit
