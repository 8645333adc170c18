#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "exbetti/betti.hpp"
#include "exbetti/ideal.hpp"
#include "exbetti/ideal_realizer.hpp"

namespace exbetti {

using IntMatrix = std::vector<std::vector<int>>;

/// Rank over Q by fraction-free elimination on arbitrary-precision integers.
std::size_t exact_rank(const IntMatrix& matrix);

/// The Koszul complex K(x; I) in one multidegree alpha (internal degree
/// j = |alpha|). The basis of C_i is the set of i-subsets F of the variables
/// with x^{alpha - e_F} in I, listed as bitmasks in increasing order.
struct GradedComplexSlice {
  int j = 0;
  std::vector<int> alpha;
  std::vector<std::vector<unsigned>> bases;
  /// differentials[i] : C_i -> C_{i-1}, rows indexed by the basis of C_{i-1}.
  std::vector<IntMatrix> differentials;

  /// Throws VerificationFailed unless every d_{i-1} d_i vanishes.
  void check_d_squared() const;
  /// dim H_i for every i.
  std::vector<std::size_t> homology() const;
};

GradedComplexSlice koszul_slice(const MonomialIdeal& ideal, const std::vector<int>& alpha);

/// Smallest cap that yields the full table: max generator degree (with
/// shift) plus n.
int completeness_cap(const MonomialSubmodule& module);

/// Betti numbers from Koszul homology, degrees j <= degree_cap. Works for any
/// monomial input. Throws CapTooLow when the cap is below the largest shifted
/// generator degree or the top tracked degree carries homology.
BettiTable koszul_betti(const MonomialSubmodule& module, int degree_cap);
BettiTable koszul_betti(const MonomialIdeal& ideal, int degree_cap);
BettiTable koszul_betti(const MonomialSubmodule& module);

struct CensusLimits {
  int max_gens = std::numeric_limits<int>::max();
  /// Search nodes before BudgetExceeded.
  std::uint64_t budget = 50'000'000;
  int max_vars = 5;
  int max_degree = 6;
};

/// Calls `emit` once for every nonzero proper strongly stable ideal with
/// generators of degree <= max_degree. Order: degree by degree, larger sets
/// before smaller ones. Returns the number emitted.
std::uint64_t enumerate_strongly_stable(int n, int max_degree, const CensusLimits& limits,
                                        const std::function<void(const MonomialIdeal&)>& emit);
std::vector<MonomialIdeal> strongly_stable_census(int n, int max_degree,
                                                  const CensusLimits& limits = {});

/// Searches strongly stable ideals generated in the corner degrees for one
/// whose extremal values match `spec`. nullopt means none within limits.
std::optional<MonomialIdeal> bruteforce_realizability(const CornerSpec& spec,
                                                      const CensusLimits& limits = {});

/// Scans multisets of m census ideals (generator degrees <= l_r).
std::optional<MonomialSubmodule> bruteforce_module_realizability(const CornerSpec& spec, int m,
                                                                 const CensusLimits& limits = {});

}  // namespace exbetti
