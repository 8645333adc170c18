#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exbetti/ideal_realizer.hpp"

namespace exbetti {

/// r x m matrix; entry (i, h) is component h's share of the i-th corner value.
struct CornerMatrix {
  std::vector<std::vector<Count>> rows;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
  Count at(int i, int h) const { return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)]; }
  std::vector<Count> column(int h) const;
  /// 0-based rows with a nonzero entry in column h.
  std::vector<int> pattern(int h) const;

  friend bool operator==(const CornerMatrix&, const CornerMatrix&) = default;
};

/// Position and global value-bound check for a submodule of S^m. For m = 1
/// the single-ideal position rules apply as well.
PositionVerdict validate_module_spec(const CornerSpec& spec, int m);

/// Upper bounds for the entries of one column whose nonzero rows form
/// `pattern`. A single-row pattern is bounded by C(k+l-1, l-1); longer
/// patterns use the single-ideal bounds of the sub-sequence.
class ColumnBounder {
 public:
  ColumnBounder(const CornerSpec& spec, std::vector<int> pattern, Mode mode);

  const std::vector<int>& pattern() const { return pattern_; }
  bool admissible() const { return verdict_.admissible(); }
  const PositionVerdict& verdict() const { return verdict_; }

  /// Bound for the entry at position `pos` of the pattern, given the
  /// monomial picked for position pos-1 (ignored in strict mode).
  std::size_t bound(int pos, const std::optional<Monomial>& previous_pick) const;
  /// The rank-th admissible monomial at `pos` (used to seed position pos+1).
  Monomial pick(int pos, const std::optional<Monomial>& previous_pick, std::size_t rank) const;

 private:
  std::vector<Monomial> tail(int pos, const std::optional<Monomial>& previous_pick) const;

  std::vector<int> pattern_;
  Mode mode_;
  PositionVerdict verdict_;
  std::optional<BoundReport> report_;
};

/// Per-entry bounds for a column pattern with the given entry values.
std::vector<std::size_t> column_bounds(const CornerSpec& spec, const std::vector<int>& pattern,
                                       const std::vector<Count>& values, Mode mode);

/// Checks row sums, column patterns and entry bounds. Empty string means valid.
std::string validate_corner_matrix(const CornerSpec& spec, const CornerMatrix& matrix, Mode mode);

enum class SearchStatus { Found, Infeasible, BudgetExhausted };

struct MatrixSearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<CornerMatrix> matrix;
  /// On failure: the row whose target is hardest to cover.
  std::optional<int> tightest_row;
  std::string reason;
  std::uint64_t nodes = 0;
};

MatrixSearchResult find_corner_matrix(const CornerSpec& spec, int m, Mode mode = Mode::Coupled,
                                      std::uint64_t node_budget = 5'000'000);

/// The ideal L(x_1^{l_1-1}, x_1^{l_1-2} x_{k_r+1}) used for zero columns.
MonomialIdeal filler_ideal(const CornerSpec& spec);

/// Realizes every nonzero column with a single-ideal witness and every zero
/// column with the filler, then checks corners, values and corner matrix.
MonomialSubmodule construct_module(const CornerSpec& spec, const CornerMatrix& matrix,
                                   Mode mode = Mode::Coupled);

/// Rebuilds every corner ideal whose own corners exceed its share of the
/// module's corners, leaving other components untouched.
MonomialSubmodule normalize_module(const MonomialSubmodule& module, Mode mode = Mode::Coupled);

}  // namespace exbetti
