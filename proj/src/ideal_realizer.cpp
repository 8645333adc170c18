#include "exbetti/ideal_realizer.hpp"

#include <algorithm>
#include <sstream>

#include "exbetti/error.hpp"

namespace exbetti {

namespace {

std::string describe(const std::vector<Extremal>& extremals) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < extremals.size(); ++i) {
    if (i) os << ", ";
    os << '(' << extremals[i].corner.k << ',' << extremals[i].corner.l << ")="
       << extremals[i].value;
  }
  os << '}';
  return os.str();
}

}  // namespace

void CornerSpec::validate() const {
  auto fail = [](const std::string& why) { return Error(ErrorKind::InvalidSpec, why); };
  if (n < 2) throw fail("need n >= 2");
  if (corners.empty()) throw fail("need at least one corner");
  if (values.size() != corners.size()) throw fail("one value per corner required");
  if (corners.front().k > n - 1) throw fail("k_1 must be at most n - 1");
  if (corners.front().l < 2) throw fail("l_1 must be at least 2");
  for (std::size_t i = 0; i < corners.size(); ++i) {
    if (corners[i].k < 1) throw fail("k_i must be positive");
    if (values[i] < 1) throw fail("values must be positive");
    if (i > 0 && corners[i].k >= corners[i - 1].k) throw fail("k must be strictly decreasing");
    if (i > 0 && corners[i].l <= corners[i - 1].l) throw fail("l must be strictly increasing");
  }
}

CornerSpec CornerSpec::select(const std::vector<int>& rows, std::vector<Count> new_values) const {
  CornerSpec out;
  out.n = n;
  for (int row : rows) out.corners.push_back(corner(row));
  out.values = std::move(new_values);
  return out;
}

std::string_view to_string(Mode mode) {
  return mode == Mode::StrictPaper ? "strict-paper" : "coupled";
}

Mode parse_mode(std::string_view text) {
  if (text == "strict-paper") return Mode::StrictPaper;
  if (text == "coupled") return Mode::Coupled;
  throw Error(ErrorKind::InvalidSpec, "unknown mode '" + std::string(text) + "'");
}

std::string_view to_string(BoundBranch branch) {
  switch (branch) {
    case BoundBranch::LowDegree: return "low-degree";
    case BoundBranch::HighDegree: return "high-degree";
    case BoundBranch::Last: return "last";
  }
  return "?";
}

PositionVerdict validate_positions(const CornerSpec& spec) {
  spec.validate();
  const int r = spec.size();
  const int n = spec.n;
  if (r == 1) return {};
  if (spec.corner(0).l >= 3) {
    if (r > n - 1) return {PositionStatus::Rejected, "at most n - 1 corners when l_1 >= 3"};
    return {};
  }
  if (spec.corner(r - 1).k == 1) {
    return {PositionStatus::Uncovered, "l_1 = 2 with k_r = 1 lies outside the characterization"};
  }
  if (r > n - 2) return {PositionStatus::Rejected, "at most n - 2 corners when l_1 = 2"};
  if (r == n - 2 && spec.corner(0).k + 1 != n) {
    return {PositionStatus::Rejected, "with l_1 = 2 and r = n - 2 the first corner needs k_1 + 1 = n"};
  }
  return {};
}

Monomial lower_bound_monomial(const CornerSpec& spec, int i, int t, BoundBranch* branch) {
  const int r = spec.size();
  const int n = spec.n;
  // 1-based accessors for the index arithmetic below.
  auto k = [&](int idx) { return spec.corner(idx - 1).k; };
  auto l = [&](int idx) { return spec.corner(idx - 1).l; };
  const int pos = i + 1;

  Monomial out(n);
  BoundBranch which;
  if (pos == r) {
    which = BoundBranch::Last;
    out = Monomial::variable(n, k(r) + 1, l(r));
  } else if (pos <= t) {
    // x_{k_r} ... x_{k_{r-l+3}} * x_{k_{r-l+2} - 1} * x_{k_i + 1}
    which = BoundBranch::LowDegree;
    const int li = l(pos);
    for (int j = r - li + 3; j <= r; ++j) out = out.times_var(k(j));
    const int pivot = k(r - li + 2) - 1;
    if (pivot < 1) throw Error(ErrorKind::BadRange, "lower bound needs k_{r-l+2} >= 2");
    out = out.times_var(pivot).times_var(k(pos) + 1);
  } else {
    // x_{k_r} ... x_{k_{i+1}} * x_{k_i + 1}^{l_i - (r - i)}
    which = BoundBranch::HighDegree;
    for (int j = pos + 1; j <= r; ++j) out = out.times_var(k(j));
    out = out.times_var(k(pos) + 1, l(pos) - (r - pos));
  }
  if (out.degree() != l(pos) || out.max_index() != k(pos) + 1) {
    throw Error(ErrorKind::BadRange, "lower bound " + out.to_string() + " falls outside A(k_i, l_i)");
  }
  if (branch) *branch = which;
  return out;
}

BoundReport compute_bounds(const CornerSpec& spec) {
  auto verdict = validate_positions(spec);
  if (verdict.status == PositionStatus::Uncovered) throw Error(ErrorKind::Uncovered, verdict.reason);
  if (!verdict.admissible()) throw Error(ErrorKind::InfeasibleSpec, verdict.reason);

  const int r = spec.size();
  BoundReport report;
  for (int i = 1; i <= r; ++i) {
    if (spec.corner(i - 1).l <= r - i) report.t = i;
  }
  for (int i = 0; i < r; ++i) {
    CornerBound cb;
    cb.corner = spec.corner(i);
    cb.bottom = lower_bound_monomial(spec, i, report.t, &cb.branch);
    for (auto& u : stratum(cb.corner.k, cb.corner.l, spec.n)) {
      if (lex_order(u, cb.bottom) >= 0) cb.members.push_back(std::move(u));
    }
    if (i > 0) cb.subtracted = lex_shadow(report.corners.back().members, cb.corner.l);
    cb.admissible = set_difference(cb.members, cb.subtracted).size();
    report.corners.push_back(std::move(cb));
  }
  return report;
}

std::vector<Monomial> admissible_tail(const BoundReport& report, int i, Mode mode,
                                      const std::optional<Monomial>& previous_pick) {
  const auto& cb = report.corners[static_cast<std::size_t>(i)];
  if (i == 0) return cb.members;
  if (mode == Mode::StrictPaper) return set_difference(cb.members, cb.subtracted);
  if (!previous_pick) throw Error(ErrorKind::BadRange, "coupled tail needs the previous pick");
  return set_difference(cb.members, lex_shadow({*previous_pick}, cb.corner.l));
}

ValueVerdict check_values(const CornerSpec& spec, const BoundReport& report, Mode mode) {
  ValueVerdict verdict;
  verdict.mode = mode;
  if (mode == Mode::StrictPaper) {
    for (int i = 0; i < spec.size(); ++i) {
      const std::size_t bound = report.corners[static_cast<std::size_t>(i)].admissible;
      verdict.bounds.push_back(bound);
      if (!verdict.failing && (spec.value(i) < 1 || spec.value(i) > bound)) verdict.failing = i;
    }
    if (verdict.failing) return verdict;
  }
  // Picks always follow the coupled rule: the block for corner i starts right
  // below the shadow of the pick for corner i-1, so it has exactly a_i top
  // generators. Strict feasibility implies coupled feasibility.
  std::optional<Monomial> previous;
  for (int i = 0; i < spec.size(); ++i) {
    auto tail = admissible_tail(report, i, Mode::Coupled, previous);
    if (mode == Mode::Coupled) verdict.bounds.push_back(tail.size());
    const Count a = spec.value(i);
    if (a < 1 || a > tail.size()) {
      if (mode == Mode::StrictPaper) {
        throw Error(ErrorKind::VerificationFailed, "strict box accepted a value the coupled tail rejects");
      }
      verdict.failing = i;
      return verdict;
    }
    previous = tail[static_cast<std::size_t>(a - 1)];
    verdict.picks.push_back(*previous);
  }
  verdict.feasible = true;
  return verdict;
}

ValueVerdict check_values(const CornerSpec& spec, Mode mode) {
  return check_values(spec, compute_bounds(spec), mode);
}

void verify_witness(const MonomialIdeal& ideal, const CornerSpec& spec) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::VerificationFailed, "witness check failed: " + why);
  };
  if (ideal.is_zero()) throw fail("zero ideal");
  if (auto v = first_strong_violation(ideal)) {
    throw fail("not strongly stable at " + v->generator.to_string());
  }
  for (int d : ideal.generator_degrees()) {
    bool corner_degree = std::any_of(spec.corners.begin(), spec.corners.end(),
                                     [&](const Corner& c) { return c.l == d; });
    if (!corner_degree) throw fail("generator in non-corner degree " + std::to_string(d));
  }
  std::vector<Extremal> expected;
  for (int i = 0; i < spec.size(); ++i) expected.push_back({spec.corner(i), spec.value(i)});
  auto from_generators = extremal_from_generators(ideal);
  if (from_generators != expected) {
    throw fail("corners " + describe(from_generators) + " differ from " + describe(expected));
  }
  auto from_table = extremal_from_table(ek_betti(ideal)).corners;
  if (from_table != expected) {
    throw fail("table corners " + describe(from_table) + " differ from " + describe(expected));
  }
}

MonomialIdeal construct_ideal(const CornerSpec& spec, Mode mode) {
  auto report = compute_bounds(spec);
  auto verdict = check_values(spec, report, mode);
  if (!verdict.feasible) {
    int i = *verdict.failing;
    throw Error(ErrorKind::InfeasibleSpec,
                "value " + std::to_string(spec.value(i)) + " at corner (" +
                    std::to_string(spec.corner(i).k) + "," + std::to_string(spec.corner(i).l) +
                    ") exceeds bound " + std::to_string(verdict.bounds[static_cast<std::size_t>(i)]) +
                    " (" + std::string(to_string(mode)) + ")");
  }
  const int n = spec.n;
  std::vector<Monomial> gens;
  for (int i = 0; i < spec.size(); ++i) {
    const Corner c = spec.corner(i);
    const Monomial& pick = verdict.picks[static_cast<std::size_t>(i)];
    std::optional<Monomial> ceiling;  // exclusive upper end
    if (i > 0) {
      const Corner prev = spec.corner(i - 1);
      ceiling = verdict.picks[static_cast<std::size_t>(i - 1)].times_var(n, c.l - prev.l);
    }
    for (auto& z : stratum(c.k, c.l, n, true)) {
      if (lex_order(z, pick) < 0) continue;
      if (ceiling && lex_order(z, *ceiling) >= 0) continue;
      gens.push_back(std::move(z));
    }
  }
  const std::size_t block_size = gens.size();
  auto ideal = MonomialIdeal::minimalize(n, std::move(gens));
  if (ideal.generators().size() != block_size) {
    throw Error(ErrorKind::VerificationFailed, "constructed blocks are not a minimal generating set");
  }
  verify_witness(ideal, spec);
  return ideal;
}

MonomialIdeal construct_degree2_chain(const CornerSpec& spec) {
  auto verdict = validate_positions(spec);
  if (verdict.status == PositionStatus::Uncovered) throw Error(ErrorKind::Uncovered, verdict.reason);
  if (!verdict.admissible()) throw Error(ErrorKind::InfeasibleSpec, verdict.reason);
  if (spec.corner(0).l != 2) throw Error(ErrorKind::InvalidSpec, "degree-2 chain needs l_1 = 2");
  if (std::any_of(spec.values.begin(), spec.values.end(), [](Count a) { return a != 1; })) {
    throw Error(ErrorKind::InvalidSpec, "degree-2 chain realizes unit values only");
  }
  const int n = spec.n;
  const int r = spec.size();
  auto k = [&](int idx) { return spec.corner(idx - 1).k; };
  auto l = [&](int idx) { return spec.corner(idx - 1).l; };

  int s = 0;
  for (int i = 1; i <= r; ++i) {
    if (i <= k(i) + 1) s = i;
  }
  // x_2^{l_2 - l_1} x_3^{l_3 - l_2} ... x_{last}^{l_last - l_{last-1}}
  auto staircase = [&](int last) {
    Monomial out(n);
    for (int j = 2; j <= last; ++j) out = out.times_var(j, l(j) - l(j - 1));
    return out;
  };

  std::vector<Monomial> gens;
  auto add_segment = [&](const Monomial& top, const Monomial& bottom) {
    for (auto& z : LexSegment(top, bottom).materialize()) gens.push_back(std::move(z));
  };
  add_segment(Monomial::variable(n, 1, 2), Monomial::variable(n, 1).times_var(k(1) + 1));
  for (int i = 2; i <= s; ++i) {
    Monomial base = staircase(i - 1);
    int step = l(i) - l(i - 1);
    add_segment(base.times_var(i, step + 2), base.times_var(i, step + 1).times_var(k(i) + 1));
  }
  for (int i = s + 1; i <= r; ++i) {
    const int ki = k(i);
    Monomial u = staircase(ki);
    u = u.divide_var(ki).times_var(ki + 1, 3 + l(i) - l(ki));
    gens.push_back(std::move(u));
  }
  const std::size_t block_size = gens.size();
  auto ideal = MonomialIdeal::minimalize(n, std::move(gens));
  if (ideal.generators().size() != block_size) {
    throw Error(ErrorKind::VerificationFailed, "degree-2 chain blocks are not a minimal generating set");
  }
  verify_witness(ideal, spec);
  return ideal;
}

}  // namespace exbetti
