#pragma once

#include <compare>
#include <map>
#include <vector>

#include "bracekit/group.hpp"

namespace bracekit {

/// A bijection of {0..n-1}; image()[g] is the image of g.
class Permutation {
 public:
  static Permutation identity(int n);
  /// Validates that the image vector is a bijection.
  static Permutation from_image(std::vector<Index> image);

  int degree() const { return static_cast<int>(image_.size()); }
  Index operator[](Index g) const { return image_[g]; }
  const std::vector<Index>& image() const { return image_; }

  /// (this * other)[g] = this[other[g]].
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  auto operator<=>(const Permutation& other) const = default;

 private:
  explicit Permutation(std::vector<Index> image) : image_(std::move(image)) {}
  std::vector<Index> image_;
};

/// A subgroup of Perm(G) stored as an explicit, ordered element list together
/// with its composition table (indexed by element positions).  The element
/// order given at construction is preserved; it fixes the indexing of every
/// structure derived from the subgroup.
class RegularSubgroup {
 public:
  /// Validates that the list contains the identity, has no duplicates, and is
  /// closed under composition and inversion; builds the composition table.
  static RegularSubgroup from_elements(GroupTable ambient, std::vector<Permutation> elements);
  /// Closes the generators under composition.  Elements are indexed by power
  /// products g1^i1 ... gk^ik (mixed radix, i1 fastest, exponents bounded by
  /// the successive prefix-subgroup indices) when those enumerate the
  /// subgroup bijectively, else in breadth-first closure order; validated
  /// via from_elements either way.
  static RegularSubgroup generate(GroupTable ambient, const std::vector<Permutation>& generators);

  const GroupTable& ambient() const { return ambient_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const GroupTable& cayley() const { return cayley_; }
  int size() const { return static_cast<int>(elements_.size()); }

  int index_of(const Permutation& p) const;  // -1 when absent
  bool contains(const Permutation& p) const { return index_of(p) >= 0; }
  bool same_element_set(const RegularSubgroup& other) const;
  /// eta[1_G] for each element, in element order.
  std::vector<Index> evaluation_at_identity() const;

 private:
  RegularSubgroup(GroupTable ambient, std::vector<Permutation> elements, GroupTable cayley,
                  std::map<std::vector<Index>, int> index);

  GroupTable ambient_;
  std::vector<Permutation> elements_;
  GroupTable cayley_;
  std::map<std::vector<Index>, int> index_;
};

/// lambda(g)[h] = g h, at element index g.
RegularSubgroup left_regular(const GroupTable& g);
/// rho(g)[h] = h g^-1, at element index g.
RegularSubgroup right_regular(const GroupTable& g);

/// |N| = |G| and eta -> eta[1_G] injective.
bool is_regular(const RegularSubgroup& n);
/// lambda(g) eta lambda(g)^-1 stays in N for every g in G and eta in N.
bool is_g_stable(const RegularSubgroup& n);

/// Centralizer of a regular N in Perm(G), built elementwise as
/// phi_eta[g] = mu_g[eta[1_G]] where mu_g is the unique element of N sending
/// 1_G to g.  The result keeps N's indexing (phi_{eta_i} at position i) and
/// is itself regular.  Throws Error(NotRegular).
RegularSubgroup centralizer_regular(const RegularSubgroup& n);

}  // namespace bracekit
