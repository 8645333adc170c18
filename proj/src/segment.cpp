#include "exbetti/segment.hpp"

#include <algorithm>
#include <set>

#include "exbetti/error.hpp"

namespace exbetti {

LexSegment::LexSegment(Monomial top, Monomial bottom) {
  if (lex_compare(top, bottom) == LexOrder::Less) {
    throw Error(ErrorKind::BadRange, "segment top " + top.to_string() + " is below bottom " +
                                         bottom.to_string());
  }
  bounds_.emplace(std::move(top), std::move(bottom));
}

bool LexSegment::contains(const Monomial& z) const {
  if (!bounds_) return false;
  if (z.degree() != top().degree()) return false;
  return lex_order(z, top()) <= 0 && lex_order(z, bottom()) >= 0;
}

std::vector<Monomial> LexSegment::materialize() const {
  if (!bounds_) return {};
  std::vector<Monomial> out;
  for (auto& z : enumerate_degree(top().num_vars(), top().degree())) {
    if (contains(z)) out.push_back(std::move(z));
  }
  return out;
}

std::vector<Monomial> stratum(int k, int d, int n, bool bounded) {
  if (k < 1 || k >= n) {
    throw Error(ErrorKind::BadRange, "stratum needs 1 <= k < n, got k=" + std::to_string(k));
  }
  if (d < 1) throw Error(ErrorKind::BadDegree, "stratum needs d >= 1");
  std::vector<Monomial> out;
  for (auto& u : enumerate_degree(n, d)) {
    int m = u.max_index();
    if (bounded ? m <= k + 1 : m == k + 1) out.push_back(std::move(u));
  }
  return out;
}

namespace {

int common_degree(const std::vector<Monomial>& mset) {
  int d = mset.front().degree();
  for (const auto& u : mset) {
    if (u.degree() != d) throw Error(ErrorKind::MixedDegrees, "monomial set mixes degrees");
  }
  return d;
}

}  // namespace

std::vector<Monomial> shadow(const std::vector<Monomial>& mset, int steps) {
  if (steps < 1) throw Error(ErrorKind::BadDegree, "shadow needs steps >= 1");
  if (mset.empty()) return {};
  common_degree(mset);
  std::set<Monomial, LexDescending> current(mset.begin(), mset.end());
  int n = mset.front().num_vars();
  for (int s = 0; s < steps; ++s) {
    std::set<Monomial, LexDescending> next;
    for (const auto& u : current) {
      for (int i = 1; i <= n; ++i) next.insert(u.times_var(i));
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

Monomial lex_min(const std::vector<Monomial>& mset) {
  if (mset.empty()) throw Error(ErrorKind::BadRange, "minimum of an empty set");
  common_degree(mset);
  return *std::min_element(mset.begin(), mset.end(), [](const Monomial& a, const Monomial& b) {
    return lex_order(a, b) < 0;
  });
}

LexSegment lex_shadow(const std::vector<Monomial>& mset, int target_degree) {
  if (mset.empty()) return LexSegment::empty();
  int d = common_degree(mset);
  if (target_degree <= d) {
    throw Error(ErrorKind::BadDegree, "lex shadow target degree must exceed " + std::to_string(d));
  }
  int n = mset.front().num_vars();
  Monomial w = lex_min(mset);
  return LexSegment(Monomial::variable(n, 1, target_degree), w.times_var(n, target_degree - d));
}

std::vector<Monomial> set_difference(const std::vector<Monomial>& a, const LexSegment& segment) {
  std::vector<Monomial> out;
  for (const auto& u : a) {
    if (!segment.contains(u)) out.push_back(u);
  }
  return out;
}

Monomial set_difference_ranked(const std::vector<Monomial>& a, const LexSegment& segment,
                               std::size_t rank) {
  auto diff = set_difference(a, segment);
  if (rank < 1 || rank > diff.size()) {
    throw Error(ErrorKind::RankOutOfRange, "rank " + std::to_string(rank) + " outside 1.." +
                                               std::to_string(diff.size()));
  }
  return diff[rank - 1];
}

}  // namespace exbetti
