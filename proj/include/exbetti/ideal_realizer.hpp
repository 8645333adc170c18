#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exbetti/betti.hpp"
#include "exbetti/ideal.hpp"
#include "exbetti/segment.hpp"

namespace exbetti {

/// Target corners (k_i, l_i) with values a_i in n variables.
///
/// Invariants (checked by validate()): r >= 1, n - 1 >= k_1 > ... > k_r >= 1,
/// 2 <= l_1 < ... < l_r, one positive value per corner.
struct CornerSpec {
  int n = 0;
  std::vector<Corner> corners;
  std::vector<Count> values;

  int size() const { return static_cast<int>(corners.size()); }
  const Corner& corner(int i) const { return corners[static_cast<std::size_t>(i)]; }
  Count value(int i) const { return values[static_cast<std::size_t>(i)]; }

  /// Throws InvalidSpec when an invariant fails.
  void validate() const;

  /// The sub-sequence on the given (0-based, increasing) rows.
  CornerSpec select(const std::vector<int>& rows, std::vector<Count> new_values) const;
};

enum class Mode { StrictPaper, Coupled };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

enum class PositionStatus { Admissible, Rejected, Uncovered };

struct PositionVerdict {
  PositionStatus status = PositionStatus::Admissible;
  std::string reason;
  bool admissible() const { return status == PositionStatus::Admissible; }
};

/// Decides whether the positions alone can be corners of a strongly stable
/// ideal. A single corner is always admissible. With l_1 = 2 and k_r = 1 the
/// verdict is Uncovered.
PositionVerdict validate_positions(const CornerSpec& spec);

/// Which rule fixed the lower end of A_i.
enum class BoundBranch { LowDegree, HighDegree, Last };

std::string_view to_string(BoundBranch branch);

struct CornerBound {
  Corner corner;
  BoundBranch branch = BoundBranch::Last;
  /// A_i = { u in A(k_i, l_i) : u >=lex bottom }, lex-descending in `members`.
  Monomial bottom;
  std::vector<Monomial> members;
  /// LexShad^{l_i - l_{i-1}}(A_{i-1}); empty for i = 1.
  LexSegment subtracted;
  /// |A_i \ subtracted|.
  std::size_t admissible = 0;
};

struct BoundReport {
  /// max{ i : l_i <= r - i }, 0 when no index qualifies.
  int t = 0;
  std::vector<CornerBound> corners;
};

/// The lower end of A_i (0-based i) given t. Exposed for testing.
Monomial lower_bound_monomial(const CornerSpec& spec, int i, int t, BoundBranch* branch = nullptr);

/// Builds A_1..A_r and the box bounds b_i. Requires admissible positions.
BoundReport compute_bounds(const CornerSpec& spec);

/// Elements of A_i that may carry the i-th corner, given the monomial picked
/// for corner i-1 (coupled) or the minimum of A_{i-1} (strict).
std::vector<Monomial> admissible_tail(const BoundReport& report, int i, Mode mode,
                                      const std::optional<Monomial>& previous_pick);

struct ValueVerdict {
  Mode mode = Mode::Coupled;
  bool feasible = false;
  /// Upper bound per corner, as far as evaluation got.
  std::vector<std::size_t> bounds;
  /// 0-based corner whose value broke the bound.
  std::optional<int> failing;
  /// m(a_i) for each corner when feasible (always picked against the actual
  /// previous pick, so the constructed block has exactly a_i top generators).
  std::vector<Monomial> picks;
};

ValueVerdict check_values(const CornerSpec& spec, const BoundReport& report, Mode mode);
ValueVerdict check_values(const CornerSpec& spec, Mode mode);

/// Builds the canonical witness generated in degrees l_1 < ... < l_r and
/// self-verifies it. Throws Uncovered/InfeasibleSpec/VerificationFailed.
MonomialIdeal construct_ideal(const CornerSpec& spec, Mode mode = Mode::Coupled);

/// Explicit l_1 = 2 construction for unit values (every a_i = 1).
MonomialIdeal construct_degree2_chain(const CornerSpec& spec);

/// Throws VerificationFailed unless `ideal` is strongly stable, generated
/// only in corner degrees, and has exactly the spec's corners and values.
void verify_witness(const MonomialIdeal& ideal, const CornerSpec& spec);

}  // namespace exbetti
