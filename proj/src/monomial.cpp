#include "exbetti/monomial.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "exbetti/error.hpp"

namespace exbetti {

Monomial::Monomial(int n) : exps_(static_cast<std::size_t>(n), 0) {
  if (n < 1) throw Error(ErrorKind::EmptyAmbient, "monomial needs n >= 1");
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw Error(ErrorKind::EmptyAmbient, "monomial needs n >= 1");
  for (int e : exps_) {
    if (e < 0) throw Error(ErrorKind::Parse, "negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(int n, int i, int e) {
  Monomial m(n);
  if (i < 1 || i > n) throw Error(ErrorKind::BadRange, "variable index out of range");
  m.exps_[static_cast<std::size_t>(i - 1)] = e;
  m.degree_ = e;
  return m;
}

int Monomial::max_index() const {
  for (int i = num_vars(); i >= 1; --i) {
    if (exponent(i) > 0) return i;
  }
  return 0;
}

int Monomial::min_index() const {
  for (int i = 1; i <= num_vars(); ++i) {
    if (exponent(i) > 0) return i;
  }
  return 0;
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 1; i <= num_vars(); ++i) {
    if (exponent(i) > 0) out.push_back(i);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  out *= other;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.exps_.size() != exps_.size()) {
    throw Error(ErrorKind::BadRange, "variable count mismatch");
  }
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::times_var(int i, int e) const {
  Monomial out = *this;
  out.exps_[static_cast<std::size_t>(i - 1)] += e;
  out.degree_ += e;
  return out;
}

Monomial Monomial::divide_var(int i) const {
  Monomial out = *this;
  auto& slot = out.exps_[static_cast<std::size_t>(i - 1)];
  if (slot == 0) throw Error(ErrorKind::InvalidMove, "variable does not divide monomial");
  --slot;
  --out.degree_;
  return out;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= num_vars(); ++i) {
    int e = exponent(i);
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << i;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::size_t Monomial::hash() const {
  std::size_t h = exps_.size();
  for (int e : exps_) h = h * 1000003u ^ static_cast<std::size_t>(e);
  return h;
}

std::strong_ordering lex_order(const Monomial& u, const Monomial& v) {
  const auto& a = u.exponents();
  const auto& b = v.exponents();
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return a.size() <=> b.size();
}

LexOrder lex_compare(const Monomial& u, const Monomial& v) {
  if (u.num_vars() != v.num_vars()) {
    throw Error(ErrorKind::BadRange, "variable count mismatch");
  }
  if (u.degree() != v.degree()) {
    throw Error(ErrorKind::DegreeMismatch,
                "lex comparison across degrees: " + u.to_string() + " vs " + v.to_string());
  }
  auto c = lex_order(u, v);
  if (c == std::strong_ordering::less) return LexOrder::Less;
  if (c == std::strong_ordering::greater) return LexOrder::Greater;
  return LexOrder::Equal;
}

Monomial borel_move(const Monomial& u, int i, int j) {
  if (i < 1 || i > u.num_vars() || j < 1 || j >= i) {
    throw Error(ErrorKind::InvalidMove, "borel move needs 1 <= j < i <= n");
  }
  if (u.exponent(i) == 0) {
    throw Error(ErrorKind::InvalidMove,
                "x" + std::to_string(i) + " does not divide " + u.to_string());
  }
  return u.divide_var(i).times_var(j);
}

namespace {

void enumerate_rec(int n, int var, int remaining, std::vector<int>& exps,
                   std::vector<Monomial>& out) {
  if (var == n - 1) {
    exps[static_cast<std::size_t>(var)] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(var)] = e;
    enumerate_rec(n, var + 1, remaining - e, exps, out);
  }
  exps[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_degree(int n, int d) {
  if (n < 1) throw Error(ErrorKind::EmptyAmbient, "enumerate_degree needs n >= 1");
  if (d < 0) throw Error(ErrorKind::BadDegree, "negative degree");
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  enumerate_rec(n, 0, d, exps, out);
  return out;
}

Monomial parse_monomial(std::string_view text, int n) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::Parse, "cannot parse monomial '" + std::string(text) + "': " + why);
  };
  if (n < 1) throw Error(ErrorKind::EmptyAmbient, "monomial needs n >= 1");
  if (s.empty()) throw fail("empty");
  Monomial out(n);
  if (s == "1") return out;

  auto read_int = [&](std::size_t& pos) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc() || ptr == s.data() + pos) throw fail("expected integer");
    pos = static_cast<std::size_t>(ptr - s.data());
    return value;
  };

  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || s[pos] != 'x') throw fail("expected 'x'");
    ++pos;
    int index = read_int(pos);
    if (index < 1 || index > n) throw fail("variable index out of range 1.." + std::to_string(n));
    int e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = read_int(pos);
      if (e < 1) throw fail("exponent must be >= 1");
    }
    out = out.times_var(index, e);
    if (pos == s.size()) break;
    if (s[pos] != '*') throw fail("expected '*'");
    ++pos;
  }
  return out;
}

}  // namespace exbetti
