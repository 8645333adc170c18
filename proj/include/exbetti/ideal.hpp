#pragma once

#include <optional>
#include <vector>

#include "exbetti/monomial.hpp"

namespace exbetti {

/// A monomial ideal held by its minimal generating set G(I).
///
/// Generators are kept in canonical order (degree ascending, lex-descending
/// within a degree) so equal ideals compare equal structurally. The zero
/// ideal (no generators) is representable but rejected by the stability and
/// realization routines.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int n) : n_(n) {}

  /// Builds the ideal generated by `gens`, dropping non-minimal elements.
  static MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

  int num_vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Generators of degree d, lex-descending.
  std::vector<Monomial> generators_of_degree(int d) const;
  /// Distinct generator degrees, ascending.
  std::vector<int> generator_degrees() const;
  int max_generator_degree() const;

  bool contains(const Monomial& u) const;

  /// All degree-d monomials of I, lex-descending.
  std::vector<Monomial> graded_slice(int d) const;

  /// alpha(I). Throws EmptyIdeal for the zero ideal.
  int initial_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
  return MonomialIdeal::minimalize(n, std::move(gens));
}

/// A failed exchange: (x_j u)/x_i is not in the ideal.
struct BorelViolation {
  Monomial generator;
  int i = 0;
  int j = 0;
  Monomial image;
};

/// First violating move for strong stability, scanning generators in
/// canonical order, then i ascending over the support, then j ascending.
std::optional<BorelViolation> first_strong_violation(const MonomialIdeal& ideal);
/// First violating move for stability (i fixed to m(u)).
std::optional<BorelViolation> first_stable_violation(const MonomialIdeal& ideal);

bool is_strongly_stable(const MonomialIdeal& ideal);
bool is_stable(const MonomialIdeal& ideal);

/// Smallest strongly stable ideal containing `gens`.
MonomialIdeal borel_closure(int n, const std::vector<Monomial>& gens);

/// M = (+)_h I_h e_h inside F = (+)_h S e_h with deg e_h = shift_h.
class MonomialSubmodule {
 public:
  MonomialSubmodule(int n, std::vector<MonomialIdeal> components,
                    std::vector<int> shifts = {});

  static MonomialSubmodule from_ideal(MonomialIdeal ideal);

  int num_vars() const { return n_; }
  int rank() const { return static_cast<int>(components_.size()); }
  const std::vector<MonomialIdeal>& components() const { return components_; }
  const MonomialIdeal& component(int h) const { return components_[static_cast<std::size_t>(h)]; }
  const std::vector<int>& shifts() const { return shifts_; }
  int shift(int h) const { return shifts_[static_cast<std::size_t>(h)]; }

  friend bool operator==(const MonomialSubmodule&, const MonomialSubmodule&) = default;

 private:
  int n_;
  std::vector<MonomialIdeal> components_;
  std::vector<int> shifts_;
};

}  // namespace exbetti
