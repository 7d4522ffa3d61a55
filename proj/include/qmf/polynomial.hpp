#pragma once

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmf/errors.hpp"
#include "qmf/scalar.hpp"

namespace qmf {

enum Var : int { T1 = 0, T2 = 1, T3 = 2, T4 = 3, X = 4 };
inline constexpr int kNumVars = 5;
inline constexpr std::array<const char*, kNumVars> kVarNames = {"t1", "t2", "t3", "t4", "x"};
/// deg(t_i) = 2i, deg(x) = 2
inline constexpr std::array<int, kNumVars> kVarWeights = {2, 4, 6, 8, 2};

using Monomial = std::array<int, kNumVars>;

inline int total_degree(const Monomial& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

inline int weight(const Monomial& m) {
  int s = 0;
  for (int i = 0; i < kNumVars; ++i) s += kVarWeights[i] * m[i];
  return s;
}

/// Graded order: total degree first, then lexicographic with x the most
/// significant variable and t1 the least.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int i = kNumVars - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

template <class S>
class Polynomial {
 public:
  using Terms = std::map<Monomial, S, MonomialLess>;

  Polynomial() = default;
  Polynomial(const S& c) {  // NOLINT(google-explicit-constructor)
    if (!qmf::is_zero(c)) terms_[Monomial{}] = c;
  }
  Polynomial(long c) : Polynomial(S(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(S(c)) {}   // NOLINT(google-explicit-constructor)

  static Polynomial var(Var v, int power = 1) {
    Monomial m{};
    m[v] = power;
    return term(S(1), m);
  }
  static Polynomial term(const S& c, const Monomial& m) {
    Polynomial p;
    if (!qmf::is_zero(c)) p.terms_[m] = c;
    return p;
  }

  /// Parses sums of products of rationals, variables t1..t4 and x, with ^ for
  /// nonnegative integer powers, parentheses and division by rationals.
  static Polynomial parse(std::string_view text);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
  [[nodiscard]] S constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? S(0) : it->second;
  }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] S coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Leading term in the graded order.
  [[nodiscard]] const std::pair<const Monomial, S>& leading() const { return *terms_.rbegin(); }

  [[nodiscard]] int degree(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
  }
  [[nodiscard]] int total_degree() const { return terms_.empty() ? -1 : qmf::total_degree(terms_.rbegin()->first); }

  /// Coefficient of v^k as a polynomial in the other variables.
  [[nodiscard]] Polynomial coeff_of(Var v, int k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      if (m[v] != k) continue;
      Monomial mm = m;
      mm[v] = 0;
      r.terms_[mm] = c;
    }
    return r;
  }

  /// Set of weights of the homogeneous components (deg t_i = 2i, deg x = 2).
  [[nodiscard]] std::set<int> weights() const {
    std::set<int> w;
    for (const auto& [m, c] : terms_) w.insert(weight(m));
    return w;
  }
  [[nodiscard]] bool is_homogeneous() const { return weights().size() <= 1; }

  [[nodiscard]] Polynomial diff(Var v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      Monomial mm = m;
      mm[v] -= 1;
      r.add_term(mm, c * S(m[v]));
    }
    return r;
  }

  /// Ring homomorphism sending each bound variable to its image.
  [[nodiscard]] Polynomial substitute(const std::map<Var, Polynomial>& bindings) const {
    std::array<std::vector<Polynomial>, kNumVars> powers;
    auto power_of = [&](int v, int e) -> const Polynomial& {
      auto& cache = powers[static_cast<std::size_t>(v)];
      if (cache.empty()) cache.push_back(Polynomial(1));
      while (static_cast<int>(cache.size()) <= e) {
        auto it = bindings.find(static_cast<Var>(v));
        cache.push_back(cache.back() * (it == bindings.end() ? var(static_cast<Var>(v)) : it->second));
      }
      return cache[static_cast<std::size_t>(e)];
    };
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      Polynomial t(c);
      for (int v = 0; v < kNumVars; ++v) {
        if (m[v] != 0) t = t * power_of(v, m[v]);
      }
      r += t;
    }
    return r;
  }

  /// Value at a point; variables not in the map evaluate to zero.
  [[nodiscard]] S evaluate(const std::map<Var, S>& point) const {
    S acc(0);
    for (const auto& [m, c] : terms_) {
      S t = c;
      for (int v = 0; v < kNumVars; ++v) {
        if (m[v] == 0) continue;
        auto it = point.find(static_cast<Var>(v));
        const S base = it == point.end() ? S(0) : it->second;
        for (int k = 0; k < m[v]; ++k) t *= base;
      }
      acc += t;
    }
    return acc;
  }

  /// Exact quotient by d when d divides *this, else nullopt.
  [[nodiscard]] std::optional<Polynomial> divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial rem = *this, quo;
    const auto& [lm, lc] = d.leading();
    const S inv = S(1) / lc;
    while (!rem.is_zero()) {
      const auto& [rm, rc] = rem.leading();
      Monomial q{};
      for (int i = 0; i < kNumVars; ++i) {
        q[i] = rm[i] - lm[i];
        if (q[i] < 0) return std::nullopt;
      }
      const Polynomial t = term(rc * inv, q);
      quo += t;
      rem -= t * d;
    }
    return quo;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const S& s) {
    if (qmf::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
  friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string str() const;

 private:
  void add_term(const Monomial& m, const S& c) {
    if (qmf::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (qmf::is_zero(it->second)) terms_.erase(it);
    }
  }

  Terms terms_;
};

template <class S>
Polynomial<S> pow(const Polynomial<S>& p, int n) {
  Polynomial<S> r(1);
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

template <class S>
bool is_zero(const Polynomial<S>& p) {
  return p.is_zero();
}

using Poly = Polynomial<Rational>;

namespace detail {

inline std::string monomial_str(const Monomial& m) {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace detail

// Canonical form: ascending graded order, e.g. "27*t3^2 - t2^3".
template <class S>
std::string Polynomial<S>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = prints_negative(c);
    const S mag = neg ? -c : c;
    const std::string ms = detail::monomial_str(m);
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    std::string cs = to_string(mag);
    if (is_compound(mag)) cs = "(" + cs + ")";
    if (ms.empty()) out += cs;
    else if (mag == S(1)) out += ms;
    else out += cs + "*" + ms;
  }
  return out;
}

namespace detail {

template <class S>
class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial<S> run() {
    Polynomial<S> p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<S> sum() {
    Polynomial<S> acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    Polynomial<S> t = product();
    acc = neg ? -t : t;
    while (true) {
      if (eat('+')) acc += product();
      else if (eat('-')) acc -= product();
      else return acc;
    }
  }

  Polynomial<S> product() {
    Polynomial<S> acc = power();
    while (true) {
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        const Polynomial<S> d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc *= S(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<S> power() {
    Polynomial<S> base = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial<S> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<S> p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial<S>(S(Rational::parse(s_.substr(start, pos_ - start))));
    }
    if (c == 'x') {
      ++pos_;
      return Polynomial<S>::var(X);
    }
    if (c == 't' && pos_ + 1 < s_.size() && s_[pos_ + 1] >= '1' && s_[pos_ + 1] <= '4') {
      const int v = s_[pos_ + 1] - '1';
      pos_ += 2;
      return Polynomial<S>::var(static_cast<Var>(v));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class S>
Polynomial<S> Polynomial<S>::parse(std::string_view text) {
  return detail::PolyParser<S>(text).run();
}

}  // namespace qmf
