#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exbetti/monomial.hpp"

namespace exbetti {

/// L(top, bottom): every degree-d monomial z with top >=lex z >=lex bottom.
/// An empty segment (no bounds) stands for LexShad of the empty set.
class LexSegment {
 public:
  LexSegment() = default;
  LexSegment(Monomial top, Monomial bottom);

  static LexSegment empty() { return {}; }

  bool is_empty() const { return !bounds_.has_value(); }
  const Monomial& top() const { return bounds_->first; }
  const Monomial& bottom() const { return bounds_->second; }

  bool contains(const Monomial& z) const;
  std::vector<Monomial> materialize() const;

 private:
  std::optional<std::pair<Monomial, Monomial>> bounds_;
};

/// A(k, d) (m(u) = k+1) or, when `bounded`, A(<=k, d) (m(u) <= k+1),
/// lex-descending. Requires 1 <= k < n, d >= 1.
std::vector<Monomial> stratum(int k, int d, int n, bool bounded = false);

/// Shad^steps(mset), deduplicated and lex-descending.
std::vector<Monomial> shadow(const std::vector<Monomial>& mset, int steps = 1);

/// LexShad^{target - d}(mset) = L(x_1^target, min(mset) * x_n^{target - d}).
/// The empty set maps to the empty segment.
LexSegment lex_shadow(const std::vector<Monomial>& mset, int target_degree);

/// Lex-minimum of a non-empty same-degree set.
Monomial lex_min(const std::vector<Monomial>& mset);

/// Elements of lex-descending `a` outside `segment`, in the same order.
std::vector<Monomial> set_difference(const std::vector<Monomial>& a, const LexSegment& segment);

/// The rank-th (1-based) element of a \ segment. Throws RankOutOfRange.
Monomial set_difference_ranked(const std::vector<Monomial>& a, const LexSegment& segment,
                               std::size_t rank);

}  // namespace exbetti
