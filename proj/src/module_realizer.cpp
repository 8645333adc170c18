#include "exbetti/module_realizer.hpp"

#include <algorithm>
#include <sstream>

#include "exbetti/error.hpp"

namespace exbetti {

std::vector<Count> CornerMatrix::column(int h) const {
  std::vector<Count> out;
  for (const auto& row : rows) out.push_back(row[static_cast<std::size_t>(h)]);
  return out;
}

std::vector<int> CornerMatrix::pattern(int h) const {
  std::vector<int> out;
  for (int i = 0; i < num_rows(); ++i) {
    if (at(i, h) != 0) out.push_back(i);
  }
  return out;
}

namespace {

Count corner_capacity(const Corner& c) { return binomial(c.k + c.l - 1, c.l - 1); }

std::string corner_text(const Corner& c) {
  return "(" + std::to_string(c.k) + "," + std::to_string(c.l) + ")";
}

}  // namespace

PositionVerdict validate_module_spec(const CornerSpec& spec, int m) {
  spec.validate();
  if (m < 1) throw Error(ErrorKind::InvalidSpec, "need m >= 1");
  if (m == 1) {
    auto verdict = validate_positions(spec);
    if (!verdict.admissible()) return verdict;
  }
  for (int i = 0; i < spec.size(); ++i) {
    Count bound = checked_mul(static_cast<Count>(m), corner_capacity(spec.corner(i)));
    if (spec.value(i) > bound) {
      return {PositionStatus::Rejected, "value " + std::to_string(spec.value(i)) + " at corner " +
                                            corner_text(spec.corner(i)) + " exceeds m*C(k+l-1,l-1) = " +
                                            std::to_string(bound)};
    }
  }
  return {};
}

ColumnBounder::ColumnBounder(const CornerSpec& spec, std::vector<int> pattern, Mode mode)
    : pattern_(std::move(pattern)), mode_(mode) {
  if (pattern_.empty()) throw Error(ErrorKind::InvalidSpec, "empty column pattern");
  CornerSpec sub = spec.select(pattern_, std::vector<Count>(pattern_.size(), 1));
  verdict_ = validate_positions(sub);
  if (verdict_.admissible()) report_ = compute_bounds(sub);
}

std::vector<Monomial> ColumnBounder::tail(int pos, const std::optional<Monomial>& previous_pick) const {
  if (!report_) throw Error(ErrorKind::InfeasibleSpec, verdict_.reason);
  return admissible_tail(*report_, pos, mode_, previous_pick);
}

std::size_t ColumnBounder::bound(int pos, const std::optional<Monomial>& previous_pick) const {
  return tail(pos, previous_pick).size();
}

Monomial ColumnBounder::pick(int pos, const std::optional<Monomial>& previous_pick,
                             std::size_t rank) const {
  if (!report_) throw Error(ErrorKind::InfeasibleSpec, verdict_.reason);
  auto coupled = admissible_tail(*report_, pos, Mode::Coupled, previous_pick);
  if (rank < 1 || rank > coupled.size()) throw Error(ErrorKind::RankOutOfRange, "column pick out of range");
  return coupled[rank - 1];
}

std::vector<std::size_t> column_bounds(const CornerSpec& spec, const std::vector<int>& pattern,
                                       const std::vector<Count>& values, Mode mode) {
  ColumnBounder bounder(spec, pattern, mode);
  if (!bounder.admissible()) {
    auto kind = bounder.verdict().status == PositionStatus::Uncovered ? ErrorKind::Uncovered
                                                                      : ErrorKind::InfeasibleSpec;
    throw Error(kind, bounder.verdict().reason);
  }
  std::vector<std::size_t> out;
  std::optional<Monomial> previous;
  for (std::size_t pos = 0; pos < pattern.size(); ++pos) {
    const int p = static_cast<int>(pos);
    std::size_t b = bounder.bound(p, previous);
    out.push_back(b);
    if (pos + 1 == pattern.size()) break;
    const Count v = pos < values.size() ? values[pos] : 1;
    if (v < 1 || v > b) break;
    previous = bounder.pick(p, previous, v);
  }
  return out;
}

std::string validate_corner_matrix(const CornerSpec& spec, const CornerMatrix& matrix, Mode mode) {
  spec.validate();
  if (matrix.num_rows() != spec.size()) return "matrix needs one row per corner";
  for (const auto& row : matrix.rows) {
    if (static_cast<int>(row.size()) != matrix.num_cols()) return "ragged matrix";
  }
  if (matrix.num_cols() < 1) return "matrix needs at least one column";
  for (int i = 0; i < spec.size(); ++i) {
    Count sum = 0;
    for (int h = 0; h < matrix.num_cols(); ++h) sum = checked_add(sum, matrix.at(i, h));
    if (sum != spec.value(i)) {
      return "row " + std::to_string(i + 1) + " sums to " + std::to_string(sum) + ", expected " +
             std::to_string(spec.value(i));
    }
  }
  for (int h = 0; h < matrix.num_cols(); ++h) {
    auto pattern = matrix.pattern(h);
    if (pattern.empty()) continue;
    ColumnBounder bounder(spec, pattern, mode);
    if (!bounder.admissible()) {
      return "column " + std::to_string(h + 1) + " pattern: " + bounder.verdict().reason;
    }
    std::optional<Monomial> previous;
    for (std::size_t pos = 0; pos < pattern.size(); ++pos) {
      const int p = static_cast<int>(pos);
      const Count v = matrix.at(pattern[pos], h);
      const std::size_t b = bounder.bound(p, previous);
      if (v > b) {
        return "entry (" + std::to_string(pattern[pos] + 1) + "," + std::to_string(h + 1) + ") = " +
               std::to_string(v) + " exceeds bound " + std::to_string(b) + " (" +
               std::string(to_string(mode)) + ")";
      }
      previous = bounder.pick(p, previous, v);
    }
  }
  return {};
}

namespace {

class MatrixSearch {
 public:
  MatrixSearch(const CornerSpec& spec, int m, Mode mode, std::uint64_t budget)
      : spec_(spec), m_(m), budget_(budget), r_(spec.size()) {
    need_ = spec.values;
    for (int i = 0; i < r_; ++i) capacity_.push_back(corner_capacity(spec.corner(i)));
    const unsigned full = (1u << r_) - 1;
    bounders_.resize(full + 1);
    for (unsigned mask = 1; mask <= full; ++mask) {
      ColumnBounder b(spec, rows_of(mask), mode);
      if (b.admissible()) bounders_[mask].emplace(std::move(b));
    }
    columns_.reserve(static_cast<std::size_t>(m));
  }

  SearchStatus run() {
    try {
      return place(0, (1u << r_) - 1) ? SearchStatus::Found : SearchStatus::Infeasible;
    } catch (const BudgetHit&) {
      return SearchStatus::BudgetExhausted;
    }
  }

  CornerMatrix matrix() const {
    CornerMatrix out;
    out.rows.assign(static_cast<std::size_t>(r_), std::vector<Count>(static_cast<std::size_t>(m_), 0));
    for (std::size_t h = 0; h < columns_.size(); ++h) {
      for (int i = 0; i < r_; ++i) out.rows[static_cast<std::size_t>(i)][h] = columns_[h][static_cast<std::size_t>(i)];
    }
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct BudgetHit {};

  std::vector<int> rows_of(unsigned mask) const {
    std::vector<int> out;
    for (int i = 0; i < r_; ++i) {
      if (mask & (1u << i)) out.push_back(i);
    }
    return out;
  }

  bool coverable(int i, int columns_left) const {
    Count most = checked_mul(static_cast<Count>(columns_left), capacity_[static_cast<std::size_t>(i)]);
    return need_[static_cast<std::size_t>(i)] <= most;
  }

  // Columns are filled left to right with non-increasing pattern masks; any
  // solution can be permuted into that shape.
  bool place(int col, unsigned max_mask) {
    if (++nodes_ > budget_) throw BudgetHit{};
    const int left = m_ - col;
    if (left == 0) {
      return std::all_of(need_.begin(), need_.end(), [](Count c) { return c == 0; });
    }
    for (int i = 0; i < r_; ++i) {
      if (!coverable(i, left)) return false;
    }
    for (unsigned mask = max_mask + 1; mask-- > 0;) {
      bool ok = true;
      for (int i = 0; i < r_ && ok; ++i) {
        const bool in = mask & (1u << i);
        if (in && need_[static_cast<std::size_t>(i)] == 0) ok = false;
        if (!in && !coverable(i, left - 1)) ok = false;
      }
      if (!ok) continue;
      if (mask == 0) {
        columns_.emplace_back(static_cast<std::size_t>(r_), 0);
        if (place(col + 1, 0)) return true;
        columns_.pop_back();
        continue;
      }
      if (!bounders_[mask]) continue;
      columns_.emplace_back(static_cast<std::size_t>(r_), 0);
      if (fill(col, mask, *bounders_[mask], 0, std::nullopt)) return true;
      columns_.pop_back();
    }
    return false;
  }

  bool fill(int col, unsigned mask, const ColumnBounder& bounder, std::size_t pos,
            const std::optional<Monomial>& previous) {
    const auto& pattern = bounder.pattern();
    if (pos == pattern.size()) return place(col + 1, mask);
    if (++nodes_ > budget_) throw BudgetHit{};
    const auto row = static_cast<std::size_t>(pattern[pos]);
    const int p = static_cast<int>(pos);
    const Count hi = std::min<Count>(bounder.bound(p, previous), need_[row]);
    for (Count v = hi; v >= 1; --v) {
      need_[row] -= v;
      columns_.back()[row] = v;
      if (fill(col, mask, bounder, pos + 1, bounder.pick(p, previous, v))) return true;
      columns_.back()[row] = 0;
      need_[row] += v;
    }
    return false;
  }

  const CornerSpec& spec_;
  int m_;
  std::uint64_t budget_;
  int r_;
  std::vector<Count> need_;
  std::vector<Count> capacity_;
  std::vector<std::optional<ColumnBounder>> bounders_;
  std::vector<std::vector<Count>> columns_;
  std::uint64_t nodes_ = 0;
};

int tightest_row(const CornerSpec& spec, int m) {
  int best = 0;
  long double best_ratio = -1;
  for (int i = 0; i < spec.size(); ++i) {
    long double ratio = static_cast<long double>(spec.value(i)) /
                        (static_cast<long double>(m) * static_cast<long double>(corner_capacity(spec.corner(i))));
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = i;
    }
  }
  return best;
}

}  // namespace

MatrixSearchResult find_corner_matrix(const CornerSpec& spec, int m, Mode mode,
                                      std::uint64_t node_budget) {
  MatrixSearchResult result;
  auto verdict = validate_module_spec(spec, m);
  if (!verdict.admissible()) {
    result.status = SearchStatus::Infeasible;
    result.reason = verdict.reason;
    result.tightest_row = tightest_row(spec, m);
    return result;
  }
  if (spec.size() > 16) throw Error(ErrorKind::InvalidSpec, "at most 16 corners supported");
  MatrixSearch search(spec, m, mode, node_budget);
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == SearchStatus::Found) {
    result.matrix = search.matrix();
  } else {
    result.tightest_row = tightest_row(spec, m);
    result.reason = result.status == SearchStatus::Infeasible
                        ? "no corner matrix satisfies the column bounds"
                        : "node budget exhausted before a corner matrix was found";
  }
  return result;
}

MonomialIdeal filler_ideal(const CornerSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int d = spec.corner(0).l - 1;
  const int kr = spec.corners.back().k;
  Monomial top = Monomial::variable(n, 1, d);
  Monomial bottom = Monomial::variable(n, 1, d - 1).times_var(kr + 1);
  return MonomialIdeal::minimalize(n, LexSegment(top, bottom).materialize());
}

namespace {

void verify_module(const MonomialSubmodule& module, const CornerSpec& spec,
                   const std::optional<CornerMatrix>& matrix) {
  auto fail = [](const std::string& why) {
    return Error(ErrorKind::VerificationFailed, "module check failed: " + why);
  };
  for (int h = 0; h < module.rank(); ++h) {
    const auto& ideal = module.component(h);
    if (ideal.is_zero() || ideal.initial_degree() == 0) {
      throw fail("component " + std::to_string(h + 1) + " is not a proper nonzero ideal");
    }
    if (!is_strongly_stable(ideal)) {
      throw fail("component " + std::to_string(h + 1) + " is not strongly stable");
    }
  }
  std::vector<Extremal> expected;
  for (int i = 0; i < spec.size(); ++i) expected.push_back({spec.corner(i), spec.value(i)});
  if (extremal_from_generators(module) != expected) throw fail("corner values differ from the target");
  if (extremal_from_table(ek_betti(module)).corners != expected) throw fail("table corners differ from the target");
  if (matrix && corner_matrix(module).rows != matrix->rows) throw fail("corner matrix differs from the input");
}

}  // namespace

MonomialSubmodule construct_module(const CornerSpec& spec, const CornerMatrix& matrix, Mode mode) {
  if (auto problem = validate_corner_matrix(spec, matrix, mode); !problem.empty()) {
    throw Error(ErrorKind::InvalidSpec, "invalid corner matrix: " + problem);
  }
  std::vector<MonomialIdeal> components;
  for (int h = 0; h < matrix.num_cols(); ++h) {
    auto pattern = matrix.pattern(h);
    if (pattern.empty()) {
      components.push_back(filler_ideal(spec));
      continue;
    }
    std::vector<Count> values;
    for (int i : pattern) values.push_back(matrix.at(i, h));
    components.push_back(construct_ideal(spec.select(pattern, values), mode));
  }
  MonomialSubmodule module(spec.n, std::move(components));
  verify_module(module, spec, matrix);
  return module;
}

MonomialSubmodule normalize_module(const MonomialSubmodule& module, Mode mode) {
  for (int h = 0; h < module.rank(); ++h) {
    if (module.shift(h) != 0) throw Error(ErrorKind::InvalidSpec, "normalization needs deg e_h = 0");
    if (!is_strongly_stable(module.component(h))) {
      throw Error(ErrorKind::NotStable, "component " + std::to_string(h + 1) + " is not strongly stable");
    }
  }
  auto view = corner_matrix(module);
  if (view.corners.empty()) return module;
  CornerSpec spec;
  spec.n = module.num_vars();
  for (const auto& e : view.corners) {
    spec.corners.push_back(e.corner);
    spec.values.push_back(e.value);
  }

  std::vector<MonomialIdeal> components = module.components();
  for (int h : view.corner_ideals) {
    std::vector<int> pattern;
    std::vector<Count> values;
    for (int i = 0; i < spec.size(); ++i) {
      Count v = view.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(h)];
      if (v != 0) {
        pattern.push_back(i);
        values.push_back(v);
      }
    }
    auto own = component_corners(module, h).own;
    std::vector<Corner> shared;
    for (int i : pattern) shared.push_back(spec.corner(i));
    if (own == shared) continue;
    try {
      components[static_cast<std::size_t>(h)] = construct_ideal(spec.select(pattern, values), mode);
    } catch (const Error& e) {
      throw Error(ErrorKind::VerificationFailed,
                  "cannot rebuild component " + std::to_string(h + 1) + ": " + e.what());
    }
  }
  MonomialSubmodule out(module.num_vars(), std::move(components));

  auto fail = [](const std::string& why) {
    return Error(ErrorKind::VerificationFailed, "normalization check failed: " + why);
  };
  auto before = extremal_from_table(ek_betti(module)).corners;
  auto after = extremal_from_table(ek_betti(out)).corners;
  if (corners_of(before) != corners_of(after)) throw fail("corner set changed");
  if (before != after) throw fail("extremal values changed");
  for (int h : corner_matrix(out).corner_ideals) {
    auto cc = component_corners(out, h);
    if (cc.own != cc.in_module) throw fail("component " + std::to_string(h + 1) + " keeps a private corner");
  }
  return out;
}

}  // namespace exbetti
