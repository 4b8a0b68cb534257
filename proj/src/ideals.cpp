#include "bracekit/ideals.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bracekit {

namespace {

void require_dot_subgroup(const SkewBrace& b, const ElementSet& i) {
  if (!is_subgroup(b.dot(), i))
    throw Error(ErrorCode::NotASubgroup, "the given set is not a subgroup of the dot group");
}

}  // namespace

QuasiIdealCheck is_quasi_ideal(const SkewBrace& b, const ElementSet& i) {
  require_dot_subgroup(b, i);
  for (int x = 0; x < b.order(); ++x)
    for (Index y : i.members)
      if (!i.contains(b.dot_mul(b.dot_inv(x), b.circle_mul(x, y))))
        return {false, std::make_pair(x, y)};
  return {true, std::nullopt};
}

bool is_circle_stable(const SkewBrace& b, const ElementSet& c) {
  require_dot_subgroup(b, c);
  for (int x = 0; x < b.order(); ++x)
    for (Index y : c.members)
      if (!c.contains(b.dot_mul(b.circle_mul(x, y), b.dot_inv(x)))) return false;
  return true;
}

IdealReport classify_subgroup(const SkewBrace& b, const ElementSet& i) {
  IdealReport report;
  report.subject = i;
  report.is_subgroup_dot = is_subgroup(b.dot(), i);
  if (!report.is_subgroup_dot) return report;

  QuasiIdealCheck qi = is_quasi_ideal(b, i);
  report.is_quasi_ideal = qi.ok;
  report.witness = qi.witness;
  report.is_circle_stable = is_circle_stable(b, i);
  if (qi.ok) {
    // A quasi-ideal is closed under circle, so normality in (B,o) is
    // well-defined.
    report.is_dot_qi = is_normal(b.dot(), i);
    report.is_circle_qi = is_normal(b.circle(), i);
    report.is_ideal = report.is_dot_qi && report.is_circle_qi;
    if (report.is_ideal)
      report.annotation = "both";
    else if (report.is_dot_qi)
      report.annotation = "realizable + HG tower";
    else if (report.is_circle_qi)
      report.annotation = "realizable + Galois";
    else
      report.annotation = "realizable";
  }
  return report;
}

Census census(const SkewBrace& b) {
  Census result;
  for (const ElementSet& h : subgroups(b.dot())) {
    IdealReport report = classify_subgroup(b, h);
    ++result.counts.subgroups;
    result.counts.quasi_ideals += report.is_quasi_ideal;
    result.counts.dot_qis += report.is_dot_qi;
    result.counts.circle_qis += report.is_circle_qi;
    result.counts.ideals += report.is_ideal;
    result.counts.circle_stable += report.is_circle_stable;
    result.reports.push_back(std::move(report));
  }
  return result;
}

QuotientResult quotient_brace(const SkewBrace& b, const ElementSet& i) {
  IdealReport report = classify_subgroup(b, i);
  if (!report.is_ideal)
    throw Error(ErrorCode::NotAnIdeal, "quotients require an ideal (quasi-ideal normal in both groups)");

  const int n = b.order();
  // Dot cosets; for an ideal these coincide with circle cosets.
  std::vector<Index> coset_min(n, -1);
  std::vector<std::vector<Index>> cosets;
  for (int x = 0; x < n; ++x) {
    if (coset_min[x] >= 0) continue;
    std::vector<Index> coset;
    for (Index y : i.members) coset.push_back(b.dot_mul(x, y));
    std::sort(coset.begin(), coset.end());
    for (Index m : coset) coset_min[m] = coset[0];
    std::vector<Index> circle_coset;
    for (Index y : i.members) circle_coset.push_back(b.circle_mul(x, y));
    std::sort(circle_coset.begin(), circle_coset.end());
    if (circle_coset != coset) throw std::logic_error("ideal cosets differ between the two operations");
    cosets.push_back(std::move(coset));
  }
  std::sort(cosets.begin(), cosets.end());
  std::map<Index, int> label;  // minimal member -> coset index
  for (size_t c = 0; c < cosets.size(); ++c) label[cosets[c][0]] = static_cast<int>(c);
  std::vector<Index> projection(n);
  for (int x = 0; x < n; ++x) projection[x] = label.at(coset_min[x]);

  const int q = static_cast<int>(cosets.size());
  std::vector<std::vector<Index>> qdot(q, std::vector<Index>(q)), qcircle(q, std::vector<Index>(q));
  for (int a = 0; a < q; ++a)
    for (int c = 0; c < q; ++c) {
      qdot[a][c] = projection[b.dot_mul(cosets[a][0], cosets[c][0])];
      qcircle[a][c] = projection[b.circle_mul(cosets[a][0], cosets[c][0])];
    }

  const auto& members = i.members;
  const int k = static_cast<int>(members.size());
  std::vector<std::vector<Index>> sdot(k, std::vector<Index>(k)), scircle(k, std::vector<Index>(k));
  auto rank = [&members](Index x) {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    if (it == members.end() || *it != x)
      throw std::logic_error("ideal is not closed under the restricted operation");
    return static_cast<int>(it - members.begin());
  };
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c) {
      sdot[a][c] = rank(b.dot_mul(members[a], members[c]));
      scircle[a][c] = rank(b.circle_mul(members[a], members[c]));
    }

  return QuotientResult{
      SkewBrace::from_tables(GroupTable::from_table(std::move(sdot)),
                             GroupTable::from_table(std::move(scircle))),
      SkewBrace::from_tables(GroupTable::from_table(std::move(qdot)),
                             GroupTable::from_table(std::move(qcircle))),
      std::move(projection)};
}

}  // namespace bracekit
