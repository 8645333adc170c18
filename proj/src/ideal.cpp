#include "exbetti/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "exbetti/error.hpp"

namespace exbetti {

MonomialIdeal MonomialIdeal::minimalize(int n, std::vector<Monomial> gens) {
  if (n < 1) throw Error(ErrorKind::EmptyAmbient, "ideal needs n >= 1");
  for (const auto& g : gens) {
    if (g.num_vars() != n) throw Error(ErrorKind::BadRange, "generator variable count differs from n");
  }
  std::sort(gens.begin(), gens.end(), DegreeThenLexDescending{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  MonomialIdeal out(n);
  // Degree-ascending order: a divisor of g always precedes g.
  for (auto& g : gens) {
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  return out;
}

std::vector<Monomial> MonomialIdeal::generators_of_degree(int d) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) {
    if (g.degree() == d) out.push_back(g);
  }
  return out;
}

std::vector<int> MonomialIdeal::generator_degrees() const {
  std::vector<int> out;
  for (const auto& g : gens_) {
    if (out.empty() || out.back() != g.degree()) out.push_back(g.degree());
  }
  return out;
}

int MonomialIdeal::max_generator_degree() const {
  return gens_.empty() ? 0 : gens_.back().degree();
}

bool MonomialIdeal::contains(const Monomial& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(u); });
}

std::vector<Monomial> MonomialIdeal::graded_slice(int d) const {
  std::vector<Monomial> out;
  for (auto& u : enumerate_degree(n_, d)) {
    if (contains(u)) out.push_back(std::move(u));
  }
  return out;
}

int MonomialIdeal::initial_degree() const {
  if (gens_.empty()) throw Error(ErrorKind::EmptyIdeal, "initial degree of the zero ideal");
  return gens_.front().degree();
}

std::optional<BorelViolation> first_strong_violation(const MonomialIdeal& ideal) {
  for (const auto& u : ideal.generators()) {
    for (int i : u.support()) {
      for (int j = 1; j < i; ++j) {
        Monomial image = borel_move(u, i, j);
        if (!ideal.contains(image)) return BorelViolation{u, i, j, image};
      }
    }
  }
  return std::nullopt;
}

std::optional<BorelViolation> first_stable_violation(const MonomialIdeal& ideal) {
  for (const auto& u : ideal.generators()) {
    int i = u.max_index();
    for (int j = 1; j < i; ++j) {
      Monomial image = borel_move(u, i, j);
      if (!ideal.contains(image)) return BorelViolation{u, i, j, image};
    }
  }
  return std::nullopt;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  return !first_strong_violation(ideal).has_value();
}

bool is_stable(const MonomialIdeal& ideal) {
  return !first_stable_violation(ideal).has_value();
}

MonomialIdeal borel_closure(int n, const std::vector<Monomial>& gens) {
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier;
  for (const auto& g : gens) {
    if (g.num_vars() != n) throw Error(ErrorKind::BadRange, "generator variable count differs from n");
    if (seen.insert(g).second) frontier.push_back(g);
  }
  // Fixpoint of single moves; every image stays in the same degree.
  while (!frontier.empty()) {
    Monomial u = std::move(frontier.back());
    frontier.pop_back();
    for (int i : u.support()) {
      for (int j = 1; j < i; ++j) {
        Monomial v = borel_move(u, i, j);
        if (seen.insert(v).second) frontier.push_back(std::move(v));
      }
    }
  }
  return MonomialIdeal::minimalize(n, {seen.begin(), seen.end()});
}

MonomialSubmodule::MonomialSubmodule(int n, std::vector<MonomialIdeal> components,
                                     std::vector<int> shifts)
    : n_(n), components_(std::move(components)), shifts_(std::move(shifts)) {
  if (n < 1) throw Error(ErrorKind::EmptyAmbient, "submodule needs n >= 1");
  if (components_.empty()) throw Error(ErrorKind::BadRange, "submodule needs at least one component");
  if (shifts_.empty()) shifts_.assign(components_.size(), 0);
  if (shifts_.size() != components_.size()) {
    throw Error(ErrorKind::BadRange, "shift count differs from component count");
  }
  for (std::size_t h = 0; h < shifts_.size(); ++h) {
    if (shifts_[h] < 0) throw Error(ErrorKind::BadRange, "shifts must be non-negative");
    if (h > 0 && shifts_[h] < shifts_[h - 1]) {
      throw Error(ErrorKind::BadRange, "shifts must be non-decreasing");
    }
    if (components_[h].num_vars() != n) {
      throw Error(ErrorKind::BadRange, "component variable count differs from n");
    }
  }
}

MonomialSubmodule MonomialSubmodule::from_ideal(MonomialIdeal ideal) {
  int n = ideal.num_vars();
  return MonomialSubmodule(n, {std::move(ideal)}, {0});
}

}  // namespace exbetti
