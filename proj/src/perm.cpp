#include "bracekit/perm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bracekit {

Permutation Permutation::identity(int n) {
  std::vector<Index> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::from_image(std::vector<Index> image) {
  const int n = static_cast<int>(image.size());
  std::vector<char> seen(n, 0);
  for (Index x : image) {
    if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("image vector is not a bijection");
    seen[x] = 1;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<Index> image(image_.size());
  for (size_t g = 0; g < image.size(); ++g) image[g] = image_[other.image_[g]];
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<Index> image(image_.size());
  for (size_t g = 0; g < image.size(); ++g) image[image_[g]] = static_cast<Index>(g);
  return Permutation(std::move(image));
}

RegularSubgroup::RegularSubgroup(GroupTable ambient, std::vector<Permutation> elements,
                                 GroupTable cayley, std::map<std::vector<Index>, int> index)
    : ambient_(std::move(ambient)),
      elements_(std::move(elements)),
      cayley_(std::move(cayley)),
      index_(std::move(index)) {}

RegularSubgroup RegularSubgroup::from_elements(GroupTable ambient, std::vector<Permutation> elements) {
  const int k = static_cast<int>(elements.size());
  if (k == 0) throw Error(ErrorCode::NoIdentity, "element list is empty");
  const int deg = ambient.order();
  std::map<std::vector<Index>, int> index;
  for (int i = 0; i < k; ++i) {
    if (elements[i].degree() != deg)
      throw Error(ErrorCode::OrderMismatch, "permutation degree differs from ambient order");
    if (!index.emplace(elements[i].image(), i).second)
      throw Error(ErrorCode::NotASubgroup, "duplicate permutation at position " + std::to_string(i),
                  {i});
  }
  if (index.find(Permutation::identity(deg).image()) == index.end())
    throw Error(ErrorCode::NoIdentity, "element list lacks the identity permutation");
  std::vector<std::vector<Index>> cayley(k, std::vector<Index>(k));
  for (int i = 0; i < k; ++i) {
    auto inv_it = index.find(elements[i].inverse().image());
    if (inv_it == index.end())
      throw Error(ErrorCode::NotASubgroup,
                  "element " + std::to_string(i) + " has no inverse in the list", {i});
    for (int j = 0; j < k; ++j) {
      auto it = index.find(elements[i].compose(elements[j]).image());
      if (it == index.end())
        throw Error(ErrorCode::NotASubgroup,
                    "composition of elements " + std::to_string(i) + " and " + std::to_string(j) +
                        " escapes the list",
                    {i, j});
      cayley[i][j] = it->second;
    }
  }
  return RegularSubgroup(std::move(ambient), std::move(elements),
                         GroupTable::from_table(std::move(cayley)), std::move(index));
}

namespace {

std::set<std::vector<Index>> prefix_closure(int deg, const std::vector<Permutation>& gens,
                                            size_t prefix) {
  std::vector<Permutation> list{Permutation::identity(deg)};
  std::set<std::vector<Index>> seen{list[0].image()};
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t k = 0; k < prefix; ++k) {
      Permutation next = list[i].compose(gens[k]);
      if (seen.insert(next.image()).second) list.push_back(std::move(next));
    }
  return seen;
}

}  // namespace

RegularSubgroup RegularSubgroup::generate(GroupTable ambient, const std::vector<Permutation>& generators) {
  const int deg = ambient.order();
  std::vector<Permutation> bfs{Permutation::identity(deg)};
  std::set<std::vector<Index>> seen{bfs[0].image()};
  for (size_t i = 0; i < bfs.size(); ++i)
    for (const Permutation& g : generators) {
      Permutation next = bfs[i].compose(g);
      if (seen.insert(next.image()).second) bfs.push_back(std::move(next));
    }

  // Preferred indexing: power products g1^i1 ... gk^ik, mixed-radix with i1
  // fastest and each exponent bounded by the index of the previous prefix
  // subgroup.  Reproduces the usual presentation order (eta^i pi^j at 4j+i)
  // whenever the products cover the subgroup bijectively; otherwise the
  // breadth-first closure order stands.
  std::vector<size_t> radix(generators.size());
  size_t previous = 1, total = 1;
  bool usable = true;
  for (size_t k = 0; k < generators.size() && usable; ++k) {
    const size_t size = prefix_closure(deg, generators, k + 1).size();
    if (size % previous != 0) {
      usable = false;
      break;
    }
    radix[k] = size / previous;
    previous = size;
    total *= radix[k];
  }
  if (usable && total == bfs.size()) {
    std::vector<std::vector<Permutation>> powers(generators.size());
    for (size_t k = 0; k < generators.size(); ++k) {
      powers[k].push_back(Permutation::identity(deg));
      for (size_t e = 1; e < radix[k]; ++e)
        powers[k].push_back(powers[k].back().compose(generators[k]));
    }
    std::vector<Permutation> products;
    products.reserve(total);
    std::set<std::vector<Index>> distinct;
    for (size_t m = 0; m < total; ++m) {
      Permutation p = Permutation::identity(deg);
      size_t rest = m;
      for (size_t k = 0; k < generators.size(); ++k) {
        p = p.compose(powers[k][rest % radix[k]]);
        rest /= radix[k];
      }
      distinct.insert(p.image());
      products.push_back(std::move(p));
    }
    if (distinct == seen) return from_elements(std::move(ambient), std::move(products));
  }
  return from_elements(std::move(ambient), std::move(bfs));
}

int RegularSubgroup::index_of(const Permutation& p) const {
  auto it = index_.find(p.image());
  return it == index_.end() ? -1 : it->second;
}

bool RegularSubgroup::same_element_set(const RegularSubgroup& other) const {
  if (size() != other.size()) return false;
  for (const Permutation& p : elements_)
    if (!other.contains(p)) return false;
  return true;
}

std::vector<Index> RegularSubgroup::evaluation_at_identity() const {
  std::vector<Index> a(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i) a[i] = elements_[i][ambient_.identity()];
  return a;
}

RegularSubgroup left_regular(const GroupTable& g) {
  std::vector<Permutation> elems;
  elems.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) {
    std::vector<Index> image(g.order());
    for (int h = 0; h < g.order(); ++h) image[h] = g.mul(x, h);
    elems.push_back(Permutation::from_image(std::move(image)));
  }
  return RegularSubgroup::from_elements(g, std::move(elems));
}

RegularSubgroup right_regular(const GroupTable& g) {
  std::vector<Permutation> elems;
  elems.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) {
    std::vector<Index> image(g.order());
    for (int h = 0; h < g.order(); ++h) image[h] = g.mul(h, g.inv(x));
    elems.push_back(Permutation::from_image(std::move(image)));
  }
  return RegularSubgroup::from_elements(g, std::move(elems));
}

bool is_regular(const RegularSubgroup& n) {
  if (n.size() != n.ambient().order()) return false;
  std::vector<char> hit(n.size(), 0);
  for (Index v : n.evaluation_at_identity()) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_g_stable(const RegularSubgroup& n) {
  const GroupTable& g = n.ambient();
  const int deg = g.order();
  for (int x = 0; x < deg; ++x) {
    const Index xi = g.inv(x);
    for (const Permutation& eta : n.elements()) {
      std::vector<Index> conj(deg);
      for (int h = 0; h < deg; ++h) conj[h] = g.mul(x, eta[g.mul(xi, h)]);
      if (!n.contains(Permutation::from_image(std::move(conj)))) return false;
    }
  }
  return true;
}

RegularSubgroup centralizer_regular(const RegularSubgroup& n) {
  if (!is_regular(n))
    throw Error(ErrorCode::NotRegular, "centralizer construction requires a regular subgroup");
  const GroupTable& g = n.ambient();
  const int deg = g.order();
  // mu[v] = the element of N sending 1_G to v.
  std::vector<int> mu(deg, -1);
  const std::vector<Index> a = n.evaluation_at_identity();
  for (int i = 0; i < deg; ++i) mu[a[i]] = i;
  std::vector<Permutation> phis;
  phis.reserve(deg);
  for (int i = 0; i < deg; ++i) {
    std::vector<Index> image(deg);
    for (int v = 0; v < deg; ++v) image[v] = n.elements()[mu[v]][a[i]];
    phis.push_back(Permutation::from_image(std::move(image)));
  }
  for (const Permutation& phi : phis)
    for (const Permutation& eta : n.elements())
      if (!(phi.compose(eta) == eta.compose(phi)))
        throw std::logic_error("centralizer element fails to commute with the subgroup");
  RegularSubgroup result = RegularSubgroup::from_elements(g, std::move(phis));
  if (!is_regular(result)) throw std::logic_error("centralizer of a regular subgroup is not regular");
  return result;
}

}  // namespace bracekit
