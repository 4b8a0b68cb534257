// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every numeric claim is recomputed here, most of them twice: once through
// the library and once through the raw-loop oracles in oracles.hpp.
#include <algorithm>
#include <array>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracekit/brace.hpp"
#include "bracekit/group.hpp"
#include "bracekit/ideals.hpp"
#include "bracekit/perm.hpp"
#include "bracekit/translation.hpp"
#include "bracekit/ybe.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

int failures = 0;

template <typename Fn>
void criterion(int number, const std::string& label, Fn&& fn) {
  bool ok = false;
  std::string note;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (exception: ") + e.what() + ")";
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << note << '\n';
  if (!ok) ++failures;
}

bool groups_isomorphic(const GroupTable& a, const GroupTable& b) {
  // a brace isomorphism between trivial braces is exactly a group isomorphism
  return find_isomorphism(trivial_brace(a), trivial_brace(b)).has_value();
}

int count_of_order(const GroupTable& g, int k) {
  int count = 0;
  for (Index x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) ++count;
  return count;
}

std::vector<SkewBrace> catalog_fixtures() {
  std::vector<SkewBrace> fixtures;
  for (int n = 1; n <= 8; ++n)
    for (const GroupTable& g : groups_of_order(n)) {
      fixtures.push_back(trivial_brace(g));
      fixtures.push_back(almost_trivial_brace(g));
    }
  fixtures.push_back(d4q8_brace());
  fixtures.push_back(opposite(d4q8_brace()));
  for (const GroupTable& circle :
       {cyclic_group(4), named_group("C2xC2"), quaternion_group()})
    for (const SkewBrace& b : enumerate_braces(circle).braces) fixtures.push_back(b);
  return fixtures;
}

}  // namespace

int main() {
  const SkewBrace b = d4q8_brace();

  criterion(1, "d4q8 brace verifies with a D4 dot group and a Q8 circle group", [&] {
    bool ok = b.order() == 8;
    // relation on all 512 triples, once through the library and once raw
    ok = ok && 1LL * b.order() * b.order() * b.order() == 512;
    ok = ok && !find_brace_relation_violation(b.dot(), b.circle()).has_value();
    ok = ok && oracle::brace_relation_holds(b.dot().rows(), b.circle().rows());
    ok = ok && oracle::table_is_group(b.dot().rows());
    ok = ok && oracle::table_is_group(b.circle().rows());
    ok = ok && groups_isomorphic(b.dot(), dihedral_group(4));
    ok = ok && groups_isomorphic(b.circle(), quaternion_group());
    ok = ok && count_of_order(b.dot(), 2) == 5;
    ok = ok && count_of_order(b.circle(), 2) == 1;
    return ok;
  });

  criterion(2, "its Yang-Baxter map equals the closed form, braids, nondegenerate, not involutive",
            [&] {
    const YbeSolution r = ybe_from_brace(b);
    bool ok = r.verified();
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 4; ++i)
        for (int l = 0; l < 2; ++l)
          for (int k = 0; k < 4; ++k) {
            const Index x = 4 * j + i, y = 4 * l + k;
            const int sign = j == 0 ? 1 : -1;
            const int u = ((sign * k + 2 * i * l + 2 * j * l) % 4 + 4) % 4;
            const int v = ((i + 2 * j * l) % 4 + 4) % 4;
            ok = ok && r.apply(x, y) == std::pair<Index, Index>(4 * l + u, 4 * j + v);
          }
    ok = ok && verify_braid(r);
    ok = ok && is_nondegenerate(r);
    ok = ok && !is_involutive(r);
    return ok;
  });

  criterion(3, "the opposite brace's map is a two-sided inverse on every pair", [&] {
    bool ok = true;
    std::vector<SkewBrace> fixtures = {b};
    for (const GroupTable& g : {dihedral_group(4), quaternion_group()}) {
      fixtures.push_back(trivial_brace(g));
      fixtures.push_back(almost_trivial_brace(g));
    }
    for (const SkewBrace& f : fixtures) {
      const YbeSolution r = ybe_from_brace(f);
      const YbeSolution s = inverse_solution(f);
      ok = ok && s == ybe_from_brace(opposite(f));
      ok = ok && is_inverse_pair(r, s);
      for (Index x = 0; x < f.order() && ok; ++x)  // raw double application
        for (Index y = 0; y < f.order() && ok; ++y) {
          const auto [u, v] = r.apply(x, y);
          const auto [p, q] = s.apply(u, v);
          ok = ok && p == x && q == y;
          const auto [a, c] = s.apply(x, y);
          const auto [d, e] = r.apply(a, c);
          ok = ok && d == x && e == y;
        }
    }
    return ok;
  });

  criterion(4, "a solution is involutive exactly when the dot group is abelian (orders 1..8)",
            [&] {
    bool ok = true;
    for (const SkewBrace& f : catalog_fixtures())
      ok = ok && is_involutive(ybe_from_brace(f)) == f.dot().is_abelian();
    return ok;
  });

  criterion(5, "ideal census of the d4q8 brace: 10 subgroups, 6 ideals, 4 rejects with witnesses",
            [&] {
    const Census c = census(b);
    bool ok = c.counts.subgroups == 10 && c.counts.ideals == 6 && c.counts.quasi_ideals == 6;
    const std::vector<std::vector<Index>> ideals = {
        {0}, {0, 2}, {0, 1, 2, 3}, {0, 2, 4, 6}, {0, 2, 5, 7}, {0, 1, 2, 3, 4, 5, 6, 7}};
    const std::vector<std::vector<Index>> rejects = {{0, 4}, {0, 5}, {0, 6}, {0, 7}};
    std::vector<std::vector<Index>> got_ideals, got_rejects;
    for (const IdealReport& r : c.reports) {
      if (r.is_ideal) got_ideals.push_back(r.subject.members);
      if (!r.is_quasi_ideal) {
        got_rejects.push_back(r.subject.members);
        ok = ok && r.witness.has_value();
        if (r.witness) {  // the witness really violates the quasi-ideal condition
          const auto [x, y] = *r.witness;
          ok = ok && r.subject.contains(y);
          const Index image = b.dot_mul(b.dot_inv(x), b.circle_mul(x, y));
          ok = ok && !r.subject.contains(image);
        }
      }
    }
    return ok && got_ideals == ideals && got_rejects == rejects;
  });

  criterion(6, "on D4: trivial brace has 10 quasi-ideals with ideal = normal;"
               " almost-trivial has quasi-ideal = normal = ideal", [&] {
    const GroupTable d4 = dihedral_group(4);
    bool ok = true;
    const Census t = census(trivial_brace(d4));
    ok = ok && t.counts.subgroups == 10 && t.counts.quasi_ideals == 10;
    for (const IdealReport& r : t.reports)
      ok = ok && r.is_quasi_ideal && r.is_ideal == is_normal(d4, r.subject);
    const Census a = census(almost_trivial_brace(d4));
    ok = ok && a.counts.subgroups == 10;
    for (const IdealReport& r : a.reports) {
      const bool normal = is_normal(d4, r.subject);
      ok = ok && r.is_quasi_ideal == normal && r.is_ideal == normal;
    }
    return ok;
  });

  criterion(7, "group-likes: center for the trivial brace on D4, everything for the"
               " almost-trivial one, the rotations for d4q8", [&] {
    const GroupTable d4 = dihedral_group(4);
    bool ok = group_like_elements(trivial_brace(d4)).members == std::vector<Index>{0, 2};
    ok = ok && group_like_elements(almost_trivial_brace(d4)).members ==
                   std::vector<Index>{0, 1, 2, 3, 4, 5, 6, 7};
    ok = ok && group_like_elements(b).members == std::vector<Index>{0, 1, 2, 3};
    return ok;
  });

  criterion(8, "self-opposite: d4q8 is not (L=40, R=48, exhausted search), its square is"
               " isomorphic, abelian-dot braces are equal", [&] {
    const SelfOppositeVerdict v = is_self_opposite(b);
    bool ok = v.kind == SelfOppositeVerdict::Kind::No;
    ok = ok && v.pair_counts == std::pair<long, long>(40, 48);
    const PairCensus pc = pair_census(b);
    ok = ok && pc.l_count == 40 && pc.r_count == 48;
    ok = ok && !find_isomorphism(b, opposite(b)).has_value();  // exhausted search

    const SkewBrace product = direct_product(b, opposite(b));
    const SelfOppositeVerdict pv = is_self_opposite(product);
    ok = ok && pv.kind == SelfOppositeVerdict::Kind::Isomorphic && pv.witness.has_value();
    if (pv.witness) {
      ok = ok && is_homomorphism(product, opposite(product), pv.witness->map);
      std::vector<Index> sorted = pv.witness->map;
      std::sort(sorted.begin(), sorted.end());
      for (Index x = 0; x < 64; ++x) ok = ok && sorted[x] == x;
    }

    for (const SkewBrace& f : catalog_fixtures())
      if (f.dot().is_abelian())
        ok = ok && is_self_opposite(f).kind == SelfOppositeVerdict::Kind::Equal;
    return ok;
  });

  criterion(9, "translation: lambda gives trivial, rho gives almost-trivial, the six regular"
               " dihedral subgroups of Perm(Q8) give d4q8 and its relatives", [&] {
    bool ok = true;
    for (const GroupTable& g : {dihedral_group(4), quaternion_group()}) {
      ok = ok && brace_from_regular_subgroup(g, left_regular(g)).brace == trivial_brace(g);
      ok = ok && brace_from_regular_subgroup(g, right_regular(g)).brace == almost_trivial_brace(g);
    }

    const GroupTable q8 = quaternion_group();
    const std::vector<NamedRegularSubgroup> named = q8_d4_subgroups();
    ok = ok && named.size() == 6;
    auto find = [&](const std::string& name) -> const RegularSubgroup& {
      for (const NamedRegularSubgroup& n : named)
        if (n.name == name) return n.subgroup;
      throw std::runtime_error("missing subgroup " + name);
    };
    ok = ok && brace_from_regular_subgroup(q8, find("N_{s,rho}")).brace == b;
    ok = ok && find_isomorphism(brace_from_regular_subgroup(q8, find("N_{s,rho}")).brace,
                                brace_from_regular_subgroup(q8, find("N_{t,rho}")).brace)
                   .has_value();
    ok = ok && centralizer_regular(find("N_{s,rho}")).same_element_set(find("N_{s,lambda}"));
    for (const NamedRegularSubgroup& n : named) {
      const TranslationRecord record = brace_from_regular_subgroup(q8, n.subgroup);
      ok = ok && opposite_record(record).brace == opposite(record.brace);
    }
    return ok;
  });

  criterion(10, "backstops: subgroup round trips, stability duality, ideal quotients,"
                " enumeration against the brute-force oracle", [&] {
    bool ok = true;
    for (const SkewBrace& f : catalog_fixtures()) {
      const TranslationRecord record = regular_subgroup_from_brace(f);
      ok = ok && brace_from_regular_subgroup(record.ambient(), record.subgroup).brace == f;
      const SkewBrace of = opposite(f);
      for (const ElementSet& s : subgroups(f.dot()))
        ok = ok && is_quasi_ideal(f, s).ok == is_circle_stable(of, s);
    }

    for (const IdealReport& r : census(b).reports) {
      if (!r.is_ideal) continue;
      const QuotientResult q = quotient_brace(b, r.subject);
      ok = ok && oracle::brace_relation_holds(q.sub.dot().rows(), q.sub.circle().rows());
      ok = ok && oracle::brace_relation_holds(q.quotient.dot().rows(), q.quotient.circle().rows());
      ok = ok && is_homomorphism(b, q.quotient, q.projection);
    }

    for (const GroupTable& circle : {cyclic_group(4), named_group("C2xC2")}) {
      const BraceEnumeration e = enumerate_braces(circle);
      const auto oracle_braces = oracle::braces_with_circle(circle.rows());
      ok = ok && e.braces.size() == oracle_braces.size();
      for (size_t i = 0; i < e.braces.size() && ok; ++i) {
        ok = ok && e.braces[i].dot().rows() == oracle_braces[i];
        ok = ok && e.braces[i].circle() == circle;
      }
    }
    return ok;
  });

  if (failures) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
