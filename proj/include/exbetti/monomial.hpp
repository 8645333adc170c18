#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace exbetti {

/// A power product x_1^{a_1} ... x_n^{a_n} stored as a dense exponent vector.
///
/// Variables are indexed 1..n in the public API (x_1 > x_2 > ... > x_n in
/// lex order). The degree is cached and always equals the exponent sum.
class Monomial {
 public:
  Monomial() = default;

  /// The unit monomial in n variables.
  explicit Monomial(int n);
  explicit Monomial(std::vector<int> exponents);

  /// x_i^e in n variables.
  static Monomial variable(int n, int i, int e = 1);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }

  /// Exponent of x_i, 1-based.
  int exponent(int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& exponents() const { return exps_; }

  bool is_one() const { return degree_ == 0; }

  /// m(u): the largest index of a variable dividing u; 0 for the unit.
  int max_index() const;
  /// Smallest index in the support; 0 for the unit.
  int min_index() const;
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// u * x_i^e
  Monomial times_var(int i, int e = 1) const;
  /// u / x_i, requires x_i | u.
  Monomial divide_var(int i) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

  std::size_t hash() const;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

enum class LexOrder { Less, Equal, Greater };

/// Lex comparison of two monomials of the same degree and variable count.
/// Throws DegreeMismatch otherwise.
LexOrder lex_compare(const Monomial& u, const Monomial& v);

/// Raw lex comparison of exponent vectors with no degree check. Within one
/// degree this agrees with lex_compare.
std::strong_ordering lex_order(const Monomial& u, const Monomial& v);

/// Strict weak ordering for containers: lex-descending, so the lex-greatest
/// monomial sorts first.
struct LexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_order(a, b) == std::strong_ordering::greater;
  }
};

/// Canonical generator order: by degree ascending, then lex-descending.
struct DegreeThenLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_order(a, b) == std::strong_ordering::greater;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// (x_j * u) / x_i for j < i and x_i | u. Throws InvalidMove otherwise.
Monomial borel_move(const Monomial& u, int i, int j);

/// All degree-d monomials in n variables, lex-descending.
std::vector<Monomial> enumerate_degree(int n, int d);

/// Parses `x1^2*x3` or `1` in n variables (whitespace ignored). Strict:
/// indices in 1..n and exponents >= 1.
Monomial parse_monomial(std::string_view text, int n);

}  // namespace exbetti

template <>
struct std::hash<exbetti::Monomial> {
  std::size_t operator()(const exbetti::Monomial& m) const { return m.hash(); }
};
