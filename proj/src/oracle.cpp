#include "exbetti/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "exbetti/error.hpp"

namespace exbetti {

namespace {

using Big = boost::multiprecision::cpp_int;

// Fraction-free elimination. Returns nullopt if a 64-bit intermediate
// overflows, so the caller can retry with big integers.
template <typename T>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<T>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, long long>) {
          long long x, y, z;
          if (__builtin_mul_overflow(a[rank][c], a[i][j], &x) ||
              __builtin_mul_overflow(a[i][c], a[rank][j], &y) || __builtin_sub_overflow(x, y, &z)) {
            return std::nullopt;
          }
          a[i][j] = z / prev;
        } else {
          a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
        }
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

bool ideal_contains(const MonomialIdeal& ideal, const std::vector<int>& exps) {
  for (const auto& g : ideal.generators()) {
    bool divides = true;
    for (std::size_t p = 0; p < exps.size() && divides; ++p) {
      if (g.exponents()[p] > exps[p]) divides = false;
    }
    if (divides) return true;
  }
  return false;
}

std::vector<int> lcm_exponents(const MonomialIdeal& ideal) {
  std::vector<int> e(static_cast<std::size_t>(ideal.num_vars()), 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t p = 0; p < e.size(); ++p) e[p] = std::max(e[p], g.exponents()[p]);
  }
  return e;
}

}  // namespace

std::size_t exact_rank(const IntMatrix& matrix) {
  std::vector<std::vector<long long>> small;
  small.reserve(matrix.size());
  for (const auto& row : matrix) small.emplace_back(row.begin(), row.end());
  if (auto r = bareiss_rank(std::move(small))) return *r;
  std::vector<std::vector<Big>> big;
  for (const auto& row : matrix) big.emplace_back(row.begin(), row.end());
  return *bareiss_rank(std::move(big));
}

GradedComplexSlice koszul_slice(const MonomialIdeal& ideal, const std::vector<int>& alpha) {
  const int n = ideal.num_vars();
  if (static_cast<int>(alpha.size()) != n) throw Error(ErrorKind::DegreeMismatch, "multidegree has wrong length");
  if (n > 31) throw Error(ErrorKind::BadRange, "too many variables for the Koszul oracle");
  GradedComplexSlice slice;
  slice.alpha = alpha;
  for (int a : alpha) slice.j += a;
  slice.bases.assign(static_cast<std::size_t>(n) + 1, {});

  unsigned support = 0;
  for (int p = 0; p < n; ++p) {
    if (alpha[static_cast<std::size_t>(p)] > 0) support |= 1u << p;
  }
  std::vector<int> exps(alpha);
  for (unsigned f = 0;; f = (f - support) & support) {
    for (int p = 0; p < n; ++p) exps[static_cast<std::size_t>(p)] = alpha[static_cast<std::size_t>(p)] - ((f >> p) & 1u);
    if (ideal_contains(ideal, exps)) slice.bases[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    if (f == support) break;
  }
  for (auto& basis : slice.bases) std::sort(basis.begin(), basis.end());

  slice.differentials.assign(static_cast<std::size_t>(n) + 1, {});
  for (int i = 1; i <= n; ++i) {
    const auto& src = slice.bases[static_cast<std::size_t>(i)];
    const auto& dst = slice.bases[static_cast<std::size_t>(i - 1)];
    IntMatrix d(dst.size(), std::vector<int>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      int position = 0;
      for (int p = 0; p < n; ++p) {
        if (!((src[c] >> p) & 1u)) continue;
        const unsigned face = src[c] & ~(1u << p);
        auto it = std::lower_bound(dst.begin(), dst.end(), face);
        if (it == dst.end() || *it != face) {
          throw Error(ErrorKind::VerificationFailed, "Koszul face missing from the slice basis");
        }
        d[static_cast<std::size_t>(it - dst.begin())][c] = position % 2 == 0 ? 1 : -1;
        ++position;
      }
    }
    slice.differentials[static_cast<std::size_t>(i)] = std::move(d);
  }
  return slice;
}

void GradedComplexSlice::check_d_squared() const {
  for (std::size_t i = 2; i < differentials.size(); ++i) {
    const auto& outer = differentials[i - 1];
    const auto& inner = differentials[i];
    for (std::size_t r = 0; r < outer.size(); ++r) {
      for (std::size_t c = 0; c < (inner.empty() ? 0 : inner.front().size()); ++c) {
        long long s = 0;
        for (std::size_t k = 0; k < inner.size(); ++k) s += static_cast<long long>(outer[r][k]) * inner[k][c];
        if (s != 0) throw Error(ErrorKind::VerificationFailed, "Koszul differential does not square to zero");
      }
    }
  }
}

std::vector<std::size_t> GradedComplexSlice::homology() const {
  const std::size_t top = bases.size();
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t i = 1; i < top; ++i) {
    if (!bases[i].empty() && !bases[i - 1].empty()) ranks[i] = exact_rank(differentials[i]);
  }
  std::vector<std::size_t> h(top, 0);
  for (std::size_t i = 0; i < top; ++i) h[i] = bases[i].size() - ranks[i] - ranks[i + 1];
  return h;
}

int completeness_cap(const MonomialSubmodule& module) {
  int top = 0;
  for (int h = 0; h < module.rank(); ++h) {
    if (module.component(h).is_zero()) continue;
    top = std::max(top, module.component(h).max_generator_degree() + module.shift(h));
  }
  return top + module.num_vars();
}

namespace {

void add_ideal_table(BettiTable& table, const MonomialIdeal& ideal, int shift, int cap) {
  if (ideal.is_zero()) return;
  const auto e = lcm_exponents(ideal);
  const int n = ideal.num_vars();
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  while (true) {
    int j = 0;
    for (int a : alpha) j += a;
    if (j + shift <= cap) {
      auto slice = koszul_slice(ideal, alpha);
      slice.check_d_squared();
      auto h = slice.homology();
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] != 0) table.add(static_cast<int>(i), j + shift, h[i]);
      }
    }
    int p = 0;
    while (p < n && alpha[static_cast<std::size_t>(p)] == e[static_cast<std::size_t>(p)]) {
      alpha[static_cast<std::size_t>(p)] = 0;
      ++p;
    }
    if (p == n) break;
    ++alpha[static_cast<std::size_t>(p)];
  }
}

}  // namespace

BettiTable koszul_betti(const MonomialSubmodule& module, int degree_cap) {
  int top = 0;
  for (int h = 0; h < module.rank(); ++h) {
    if (!module.component(h).is_zero()) {
      top = std::max(top, module.component(h).max_generator_degree() + module.shift(h));
    }
  }
  if (degree_cap < top) {
    throw Error(ErrorKind::CapTooLow, "degree cap " + std::to_string(degree_cap) +
                                          " is below the generator degree " + std::to_string(top));
  }
  BettiTable table(module.num_vars());
  for (int h = 0; h < module.rank(); ++h) add_ideal_table(table, module.component(h), module.shift(h), degree_cap);
  for (const auto& [key, value] : table.entries()) {
    if (key.second == degree_cap && degree_cap < completeness_cap(module)) {
      throw Error(ErrorKind::CapTooLow, "homology reaches the degree cap " + std::to_string(degree_cap));
    }
  }
  return table;
}

BettiTable koszul_betti(const MonomialIdeal& ideal, int degree_cap) {
  return koszul_betti(MonomialSubmodule::from_ideal(ideal), degree_cap);
}

BettiTable koszul_betti(const MonomialSubmodule& module) {
  return koszul_betti(module, completeness_cap(module));
}

namespace {

// Monomials of each degree with the index structure the census walks over.
class MonomialLattice {
 public:
  MonomialLattice(int n, int max_degree) : n_(n) {
    levels_.resize(static_cast<std::size_t>(max_degree) + 1);
    for (int d = 1; d <= max_degree; ++d) {
      auto& lv = levels_[static_cast<std::size_t>(d)];
      lv.mons = enumerate_degree(n, d);
      for (std::size_t k = 0; k < lv.mons.size(); ++k) lv.index.emplace(lv.mons[k], static_cast<int>(k));
      for (const auto& u : lv.mons) {
        std::vector<int> preds;
        for (int i = 2; i <= n; ++i) {
          if (u.exponent(i) > 0) preds.push_back(lv.index.at(u.divide_var(i).times_var(i - 1)));
        }
        lv.preds.push_back(std::move(preds));
        lv.max_index.push_back(u.max_index());
      }
    }
    for (int d = 1; d < max_degree; ++d) {
      auto& lv = levels_[static_cast<std::size_t>(d)];
      const auto& next = levels_[static_cast<std::size_t>(d) + 1];
      for (const auto& u : lv.mons) {
        std::vector<int> ups;
        for (int p = 1; p <= n; ++p) ups.push_back(next.index.at(u.times_var(p)));
        lv.up.push_back(std::move(ups));
      }
    }
  }

  struct Level {
    std::vector<Monomial> mons;
    std::unordered_map<Monomial, int, MonomialHash> index;
    std::vector<std::vector<int>> preds;
    std::vector<std::vector<int>> up;
    std::vector<int> max_index;
  };

  const Level& level(int d) const { return levels_[static_cast<std::size_t>(d)]; }
  int num_vars() const { return n_; }

  std::vector<char> shadow(int d, const std::vector<char>& set) const {
    const auto& lv = level(d);
    std::vector<char> out(level(d + 1).mons.size(), 0);
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (!set[k]) continue;
      for (int t : lv.up[k]) out[static_cast<std::size_t>(t)] = 1;
    }
    return out;
  }

 private:
  int n_;
  std::vector<Level> levels_;
};

void check_guard_rails(int n, int max_degree, const CensusLimits& limits) {
  if (n < 1 || n > limits.max_vars) {
    throw Error(ErrorKind::BadRange, "census needs 1 <= n <= " + std::to_string(limits.max_vars));
  }
  if (max_degree < 1 || max_degree > limits.max_degree) {
    throw Error(ErrorKind::BadRange, "census needs 1 <= max_degree <= " + std::to_string(limits.max_degree));
  }
}

// Walks the Borel-closed sets of one degree that contain `forced`, in
// lex-descending monomial order. `allow(k)` filters new generators and
// `on_add/on_remove` track per-branch counters.
class DegreeWalker {
 public:
  using Leaf = std::function<void(const std::vector<char>&, const std::vector<int>&)>;
  using Allow = std::function<bool(int, const std::vector<int>&)>;

  DegreeWalker(const MonomialLattice::Level& level, std::uint64_t& nodes, std::uint64_t budget)
      : level_(level), nodes_(nodes), budget_(budget) {}

  void walk(const std::vector<char>& forced, int gen_room, const Allow& allow, const Leaf& leaf) {
    set_ = forced;
    added_.clear();
    forced_ = &forced;
    room_ = gen_room;
    allow_ = &allow;
    leaf_ = &leaf;
    step(0);
  }

 private:
  void step(std::size_t k) {
    if (++nodes_ > budget_) throw Error(ErrorKind::BudgetExceeded, "census search budget exceeded");
    if (k == set_.size()) {
      (*leaf_)(set_, added_);
      return;
    }
    if ((*forced_)[k]) {
      step(k + 1);
      return;
    }
    const auto idx = static_cast<int>(k);
    bool closed = std::all_of(level_.preds[k].begin(), level_.preds[k].end(),
                              [&](int p) { return set_[static_cast<std::size_t>(p)] != 0; });
    if (closed && room_ > 0 && (*allow_)(idx, added_)) {
      set_[k] = 1;
      added_.push_back(idx);
      --room_;
      step(k + 1);
      ++room_;
      added_.pop_back();
      set_[k] = 0;
    }
    step(k + 1);
  }

  const MonomialLattice::Level& level_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<char> set_;
  std::vector<int> added_;
  const std::vector<char>* forced_ = nullptr;
  int room_ = 0;
  const Allow* allow_ = nullptr;
  const Leaf* leaf_ = nullptr;
};

struct CensusRun {
  const MonomialLattice& lattice;
  int max_degree;
  const CensusLimits& limits;
  const std::function<void(const MonomialIdeal&)>& emit;
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
  std::vector<Monomial> gens;

  void degree(int d, const std::vector<char>& forced) {
    const auto& lv = lattice.level(d);
    const int room = limits.max_gens - static_cast<int>(gens.size());
    DegreeWalker walker(lv, nodes, limits.budget);
    DegreeWalker::Allow any = [](int, const std::vector<int>&) { return true; };
    DegreeWalker::Leaf leaf = [&](const std::vector<char>& set, const std::vector<int>& added) {
      for (int k : added) gens.push_back(lv.mons[static_cast<std::size_t>(k)]);
      if (d == max_degree) {
        if (!gens.empty()) {
          emit(MonomialIdeal::minimalize(lattice.num_vars(), gens));
          ++emitted;
        }
      } else {
        degree(d + 1, lattice.shadow(d, set));
      }
      gens.resize(gens.size() - added.size());
    };
    walker.walk(forced, room, any, leaf);
  }
};

}  // namespace

std::uint64_t enumerate_strongly_stable(int n, int max_degree, const CensusLimits& limits,
                                        const std::function<void(const MonomialIdeal&)>& emit) {
  check_guard_rails(n, max_degree, limits);
  MonomialLattice lattice(n, max_degree);
  CensusRun run{lattice, max_degree, limits, emit, 0, 0, {}};
  run.degree(1, std::vector<char>(lattice.level(1).mons.size(), 0));
  return run.emitted;
}

std::vector<MonomialIdeal> strongly_stable_census(int n, int max_degree, const CensusLimits& limits) {
  std::vector<MonomialIdeal> out;
  enumerate_strongly_stable(n, max_degree, limits, [&](const MonomialIdeal& i) { out.push_back(i); });
  return out;
}

namespace {

std::vector<Extremal> spec_extremals(const CornerSpec& spec) {
  std::vector<Extremal> out;
  for (int i = 0; i < spec.size(); ++i) out.push_back({spec.corner(i), spec.value(i)});
  return out;
}

struct IdealSearch {
  const CornerSpec& spec;
  const MonomialLattice& lattice;
  const CensusLimits& limits;
  std::uint64_t nodes = 0;
  std::vector<Monomial> gens;
  std::optional<MonomialIdeal> found;

  struct Found {};

  std::vector<char> lift(int from, int to, std::vector<char> set) const {
    for (int d = from; d < to; ++d) set = lattice.shadow(d, set);
    return set;
  }

  // One corner degree. Top monomials (m(u) = k+1) are chosen first, each
  // together with its Borel closure; the remaining lower monomials are then
  // added or left out, smallest sets first.
  struct Level {
    int i = 0;
    const MonomialLattice::Level* lv = nullptr;
    int top = 0;
    Count target = 0;
    std::vector<char> set;
    std::vector<int> tops;
    std::vector<int> others;
    std::vector<int> added;
    Count chosen = 0;
  };

  void tick() {
    if (++nodes > limits.budget) throw Error(ErrorKind::BudgetExceeded, "brute-force search budget exceeded");
  }

  int room(const Level& L) const {
    return limits.max_gens - static_cast<int>(gens.size() + L.added.size());
  }

  void corner(int i, const std::vector<char>& forced) {
    Level L;
    L.i = i;
    L.lv = &lattice.level(spec.corner(i).l);
    L.top = spec.corner(i).k + 1;
    L.target = spec.value(i);
    L.set = forced;
    for (std::size_t k = 0; k < forced.size(); ++k) {
      if (forced[k]) continue;
      const int m = L.lv->max_index[k];
      if (m == L.top) L.tops.push_back(static_cast<int>(k));
      if (m < L.top) L.others.push_back(static_cast<int>(k));
    }
    choose_top(L, 0);
  }

  void choose_top(Level& L, std::size_t pos) {
    tick();
    if (L.chosen + (L.tops.size() - pos) < L.target) return;
    if (L.chosen == L.target) {
      choose_other(L, 0);
      return;
    }
    const int u = L.tops[pos];
    if (!L.set[static_cast<std::size_t>(u)]) {
      std::vector<int> grown;
      if (close_over(L, u, grown) && static_cast<int>(grown.size()) <= room(L)) {
        L.added.insert(L.added.end(), grown.begin(), grown.end());
        ++L.chosen;
        choose_top(L, pos + 1);
        --L.chosen;
        L.added.resize(L.added.size() - grown.size());
      }
      for (int v : grown) L.set[static_cast<std::size_t>(v)] = 0;
    }
    choose_top(L, pos + 1);
  }

  // Adds u and its Borel predecessors; fails if that would pull in a top
  // monomial that was already left out.
  bool close_over(Level& L, int u, std::vector<int>& grown) {
    std::vector<int> stack{u};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const auto idx = static_cast<std::size_t>(v);
      if (L.set[idx]) continue;
      if (v != u && L.lv->max_index[idx] == L.top) return false;
      L.set[idx] = 1;
      grown.push_back(v);
      for (int p : L.lv->preds[idx]) stack.push_back(p);
    }
    return true;
  }

  void choose_other(Level& L, std::size_t pos) {
    tick();
    if (pos == L.others.size()) {
      finish(L);
      return;
    }
    const auto idx = static_cast<std::size_t>(L.others[pos]);
    choose_other(L, pos + 1);
    if (L.set[idx] || room(L) <= 0) return;
    const auto& preds = L.lv->preds[idx];
    if (!std::all_of(preds.begin(), preds.end(), [&](int p) { return L.set[static_cast<std::size_t>(p)] != 0; })) {
      return;
    }
    L.set[idx] = 1;
    L.added.push_back(L.others[pos]);
    choose_other(L, pos + 1);
    L.added.pop_back();
    L.set[idx] = 0;
  }

  void finish(const Level& L) {
    for (int k : L.added) gens.push_back(L.lv->mons[static_cast<std::size_t>(k)]);
    if (L.i + 1 == spec.size()) {
      auto ideal = MonomialIdeal::minimalize(spec.n, gens);
      if (extremal_from_table(ek_betti(ideal)).corners == spec_extremals(spec)) {
        found = std::move(ideal);
        throw Found{};
      }
    } else {
      corner(L.i + 1, lift(spec.corner(L.i).l, spec.corner(L.i + 1).l, L.set));
    }
    gens.resize(gens.size() - L.added.size());
  }
};

}  // namespace

std::optional<MonomialIdeal> bruteforce_realizability(const CornerSpec& spec, const CensusLimits& limits) {
  spec.validate();
  check_guard_rails(spec.n, spec.corners.back().l, limits);
  MonomialLattice lattice(spec.n, spec.corners.back().l);
  IdealSearch search{spec, lattice, limits, 0, {}, std::nullopt};
  try {
    search.corner(0, std::vector<char>(lattice.level(spec.corner(0).l).mons.size(), 0));
  } catch (const IdealSearch::Found&) {
  }
  return search.found;
}

std::optional<MonomialSubmodule> bruteforce_module_realizability(const CornerSpec& spec, int m,
                                                                 const CensusLimits& limits) {
  spec.validate();
  if (m < 1) throw Error(ErrorKind::InvalidSpec, "need m >= 1");
  const auto pool = strongly_stable_census(spec.n, spec.corners.back().l, limits);
  std::vector<BettiTable> tables;
  for (const auto& ideal : pool) tables.push_back(ek_betti(ideal));
  const auto target = spec_extremals(spec);

  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  std::uint64_t nodes = 0;
  while (!pool.empty()) {
    if (++nodes > limits.budget) throw Error(ErrorKind::BudgetExceeded, "module search budget exceeded");
    BettiTable sum(spec.n);
    for (auto p : pick) sum += tables[p];
    if (extremal_from_table(sum).corners == target) {
      std::vector<MonomialIdeal> comps;
      for (auto p : pick) comps.push_back(pool[p]);
      return MonomialSubmodule(spec.n, std::move(comps));
    }
    // next non-decreasing tuple
    int pos = m - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == pool.size()) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < m; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(pos)];
  }
  return std::nullopt;
}

}  // namespace exbetti
