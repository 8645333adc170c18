#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exbetti/arith.hpp"
#include "exbetti/ideal.hpp"

namespace exbetti {

/// Position of beta_{k, k+l}: homological index k, shifted degree l.
struct Corner {
  int k = 0;
  int l = 0;

  /// Internal degree j of the table entry at this corner.
  int internal_degree() const { return k + l; }
  /// Corner of the table entry (i, j).
  static Corner of_entry(int i, int j) { return {i, j - i}; }

  friend bool operator==(const Corner&, const Corner&) = default;
};

/// Totally ordered corner-sequence order: decreasing k, then increasing l.
inline bool corner_precedes(const Corner& a, const Corner& b) {
  if (a.k != b.k) return a.k > b.k;
  return a.l < b.l;
}

struct Extremal {
  Corner corner;
  Count value = 0;
  friend bool operator==(const Extremal&, const Extremal&) = default;
};

/// Graded Betti numbers beta_{i,j}; zero entries are never stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  BettiTable() = default;
  explicit BettiTable(int n) : n_(n) {}

  int num_vars() const { return n_; }
  Count at(int i, int j) const;
  void add(int i, int j, Count value);
  const std::map<Key, Count>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Entry-wise shift of internal degrees, for summands with deg e_h = f.
  BettiTable shifted(int f) const;
  BettiTable& operator+=(const BettiTable& other);

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_ = 0;
  std::map<Key, Count> entries_;
};

/// Extremal entries found by scanning a table. Corners with k >= 1 are the
/// corner sequence; a k = 0 extremal entry (free summand) is reported apart.
struct ExtremalScan {
  std::vector<Extremal> corners;
  std::optional<Extremal> free_corner;
};

/// Eliahou-Kervaire: beta_{k,k+l}(M) = sum_h sum_{u in G(I_h)_{l-f_h}} C(m(u)-1, k).
/// Throws NotStable if some component is not stable.
BettiTable ek_betti(const MonomialSubmodule& module);
BettiTable ek_betti(const MonomialIdeal& ideal);

/// Scans the definition: beta_{k,k+l} != 0 and zero at every (i, i+j) with
/// i >= k, j >= l other than itself. Sorted by decreasing k.
ExtremalScan extremal_from_table(const BettiTable& table);

/// Corners read off the generators: k+1 is the largest m(u) in degree l and
/// every generator of larger degree has m(u) <= k; the value counts the
/// degree-l generators with m(u) = k+1. Only k >= 1. Throws NotStable.
std::vector<Extremal> extremal_from_generators(const MonomialSubmodule& module);
std::vector<Extremal> extremal_from_generators(const MonomialIdeal& ideal);

std::vector<Corner> corners_of(const std::vector<Extremal>& extremals);

struct CornerMatrixView {
  std::vector<Extremal> corners;
  /// rows[i][h] = beta_{k_i, k_i + l_i - f_h}(I_h).
  std::vector<std::vector<Count>> rows;
  /// 0-based indices of components with a nonzero entry.
  std::vector<int> corner_ideals;
};

CornerMatrixView corner_matrix(const MonomialSubmodule& module);

/// C(I_h e_h) and C_M(I_h e_h) = C(I_h e_h) intersected with C(M).
struct ComponentCorners {
  std::vector<Corner> own;
  std::vector<Corner> in_module;
};
ComponentCorners component_corners(const MonomialSubmodule& module, int h);

/// ASCII diagram: one row per j - i - 1 (Macaulay layout for the quotient,
/// so an ideal generated in degree d sits in row d - 1), one column per i,
/// '.' for zero and '*' after entries at the given corners.
std::string render_diagram(const BettiTable& table, const std::vector<Corner>& corners);

}  // namespace exbetti
