#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "bracekit/group.hpp"
#include "bracekit/perm.hpp"

using namespace bracekit;

TEST_CASE("permutation basics") {
  Permutation id = Permutation::identity(4);
  REQUIRE(id.degree() == 4);
  REQUIRE(id[2] == 2);

  Permutation p = Permutation::from_image({1, 3, 0, 2});
  Permutation q = Permutation::from_image({2, 1, 3, 0});
  // (p q)[g] = p[q[g]]
  Permutation pq = p.compose(q);
  for (int g = 0; g < 4; ++g) REQUIRE(pq[g] == p[q[g]]);
  REQUIRE(p.compose(p.inverse()) == id);
  REQUIRE(p.inverse().compose(p) == id);
  REQUIRE(p.compose(id) == p);

  REQUIRE_THROWS_AS(Permutation::from_image({0, 1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation::from_image({0, 1, 3}), std::invalid_argument);
  REQUIRE_THROWS_AS(Permutation::from_image({-1, 1, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(p.compose(Permutation::identity(5)), std::invalid_argument);
}

TEST_CASE("left and right regular representations") {
  GroupTable d4 = dihedral_group(4);
  RegularSubgroup lam = left_regular(d4);
  RegularSubgroup rho = right_regular(d4);

  for (int x = 0; x < 8; ++x)
    for (int h = 0; h < 8; ++h) {
      REQUIRE(lam.elements()[x][h] == d4.mul(x, h));
      REQUIRE(rho.elements()[x][h] == d4.mul(h, d4.inv(x)));
    }
  // both are isomorphic images of G with matching indexing
  REQUIRE(lam.cayley() == d4);
  REQUIRE(rho.cayley() == d4);
  REQUIRE(lam.evaluation_at_identity() == std::vector<Index>{0, 1, 2, 3, 4, 5, 6, 7});
  REQUIRE(rho.evaluation_at_identity()[1] == d4.inv(1));

  REQUIRE(is_regular(lam));
  REQUIRE(is_regular(rho));
  REQUIRE(is_g_stable(lam));
  REQUIRE(is_g_stable(rho));
  // lambda and rho commute elementwise
  for (const Permutation& a : lam.elements())
    for (const Permutation& b : rho.elements()) REQUIRE(a.compose(b) == b.compose(a));
}

TEST_CASE("from_elements validation") {
  GroupTable c2 = cyclic_group(2);
  Permutation id2 = Permutation::identity(2);
  Permutation swap = Permutation::from_image({1, 0});

  REQUIRE(RegularSubgroup::from_elements(c2, {id2, swap}).size() == 2);

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;  // placeholder for "did not throw"
  };
  REQUIRE(code_of([&] { RegularSubgroup::from_elements(c2, {}); }) == ErrorCode::NoIdentity);
  REQUIRE(code_of([&] { RegularSubgroup::from_elements(c2, {swap}); }) == ErrorCode::NoIdentity);
  REQUIRE(code_of([&] { RegularSubgroup::from_elements(c2, {id2, swap, swap}); }) ==
          ErrorCode::NotASubgroup);
  REQUIRE(code_of([&] { RegularSubgroup::from_elements(c2, {Permutation::identity(3)}); }) ==
          ErrorCode::OrderMismatch);
  // a 3-cycle without its inverse
  GroupTable c3 = cyclic_group(3);
  REQUIRE(code_of([&] {
            RegularSubgroup::from_elements(c3, {Permutation::identity(3),
                                                Permutation::from_image({1, 2, 0})});
          }) == ErrorCode::NotASubgroup);
}

TEST_CASE("generate indexes by power products when possible") {
  GroupTable d4 = dihedral_group(4);
  RegularSubgroup lam = left_regular(d4);
  RegularSubgroup gen = RegularSubgroup::generate(d4, {lam.elements()[1], lam.elements()[4]});
  // lambda(r)^i lambda(f)^j = lambda(r^i f^j) must land at index 4j+i,
  // reproducing left_regular exactly, Cayley table included
  REQUIRE(gen.size() == 8);
  REQUIRE(gen.elements() == lam.elements());
  REQUIRE(gen.cayley() == d4);

  // single generator: plain powers
  RegularSubgroup rot = RegularSubgroup::generate(d4, {lam.elements()[1]});
  REQUIRE(rot.size() == 4);
  for (int i = 0; i < 4; ++i) REQUIRE(rot.elements()[i] == lam.elements()[i]);
}

TEST_CASE("generate falls back to closure order for non-product generators") {
  GroupTable d4 = dihedral_group(4);
  RegularSubgroup lam = left_regular(d4);
  // two reflections generate the whole group, but f^i (rf)^j only reaches
  // four distinct permutations, so breadth-first order applies
  RegularSubgroup gen = RegularSubgroup::generate(d4, {lam.elements()[4], lam.elements()[5]});
  REQUIRE(gen.size() == 8);
  REQUIRE(gen.same_element_set(lam));
  REQUIRE(gen.elements()[0] == Permutation::identity(8));
  REQUIRE(gen.elements()[1] == lam.elements()[4]);
  REQUIRE(gen.elements()[2] == lam.elements()[5]);
}

TEST_CASE("index_of and same_element_set") {
  GroupTable q8 = quaternion_group();
  RegularSubgroup lam = left_regular(q8);
  for (int i = 0; i < 8; ++i) REQUIRE(lam.index_of(lam.elements()[i]) == i);
  REQUIRE(lam.index_of(Permutation::from_image({1, 0, 3, 2, 5, 4, 7, 6})) == -1);
  REQUIRE(lam.same_element_set(left_regular(q8)));
  REQUIRE_FALSE(lam.same_element_set(right_regular(q8)));
  REQUIRE_FALSE(lam.same_element_set(RegularSubgroup::generate(q8, {lam.elements()[1]})));
}

TEST_CASE("regularity and stability are separate conditions") {
  GroupTable c4 = cyclic_group(4);
  // the 4-cycle 0 -> 1 -> 3 -> 2 -> 0 generates a regular C4 inside Perm(C4)
  // that conjugation by translations moves off itself
  RegularSubgroup n = RegularSubgroup::generate(c4, {Permutation::from_image({1, 3, 0, 2})});
  REQUIRE(n.size() == 4);
  REQUIRE(is_regular(n));
  REQUIRE_FALSE(is_g_stable(n));

  // a proper subgroup is stable but not regular
  GroupTable d4 = dihedral_group(4);
  RegularSubgroup center = RegularSubgroup::generate(d4, {left_regular(d4).elements()[2]});
  REQUIRE(center.size() == 2);
  REQUIRE_FALSE(is_regular(center));
  REQUIRE(is_g_stable(center));
}

TEST_CASE("centralizer of the left regular subgroup") {
  for (const char* name : {"D4", "Q8", "C6"}) {
    GroupTable g = named_group(name);
    RegularSubgroup lam = left_regular(g);
    RegularSubgroup cen = centralizer_regular(lam);

    // phi_i is right multiplication by i, i.e. rho(i^-1), and keeps the
    // evaluation at the identity of its partner
    RegularSubgroup rho = right_regular(g);
    for (int i = 0; i < g.order(); ++i) REQUIRE(cen.elements()[i] == rho.elements()[g.inv(i)]);
    REQUIRE(cen.same_element_set(rho));
    REQUIRE(cen.evaluation_at_identity() == lam.evaluation_at_identity());
    REQUIRE(is_regular(cen));

    // the double centralizer restores the original indexing exactly
    RegularSubgroup back = centralizer_regular(cen);
    REQUIRE(back.elements() == lam.elements());
  }

  GroupTable d4 = dihedral_group(4);
  RegularSubgroup small = RegularSubgroup::generate(d4, {left_regular(d4).elements()[1]});
  try {
    centralizer_regular(small);
    REQUIRE(false);
  } catch (const Error& e) {
    REQUIRE(e.code() == ErrorCode::NotRegular);
  }
}
