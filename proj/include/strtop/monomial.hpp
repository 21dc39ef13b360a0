#pragma once

#include "strtop/number.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strtop {

enum class GeneratorKind { Exterior, Polynomial, Laurent };

struct Generator {
  std::string name;
  int degree = 0;
  GeneratorKind kind = GeneratorKind::Polynomial;
  /// Exponents of a Laurent generator are truncated to [-laurent_bound, laurent_bound].
  int laurent_bound = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Odd degree gives an exterior generator, even degree a polynomial one.
inline Generator make_generator(std::string name, int degree) {
  const bool odd = degree % 2 != 0;
  return {std::move(name), degree, odd ? GeneratorKind::Exterior : GeneratorKind::Polynomial, 0};
}

using Exponent = std::vector<int>;

inline int monomial_degree(const std::vector<Generator>& gens, const Exponent& e) {
  int d = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) d += e[i] * gens[i].degree;
  return d;
}

/// Sign and exponent of the product a * b of two ordered monomials, or
/// nullopt when an exterior generator would appear squared.
///
/// Reordering uses the bicharacter (-1)^{|g||h|} between distinct generators;
/// a generator always commutes with itself, so a polynomial generator of odd
/// degree is allowed (Pontryagin rings of even spheres need one).
inline std::optional<std::pair<int, Exponent>> multiply_monomials(const std::vector<Generator>& gens,
                                                                  const Exponent& a,
                                                                  const Exponent& b) {
  Exponent out(gens.size());
  int odd_swaps = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    out[j] = a[j] + b[j];
    if (gens[j].kind == GeneratorKind::Exterior && out[j] > 1) return std::nullopt;
    if (b[j] == 0 || gens[j].degree % 2 == 0 || b[j] % 2 == 0) continue;
    // b's copies of g_j move left past a's generators g_i with i > j.
    for (std::size_t i = j + 1; i < gens.size(); ++i) {
      if (gens[i].degree % 2 != 0 && a[i] % 2 != 0) ++odd_swaps;
    }
  }
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].kind == GeneratorKind::Laurent && std::abs(out[j]) > gens[j].laurent_bound) {
      return std::nullopt;
    }
  }
  return std::make_pair(odd_swaps % 2 == 0 ? 1 : -1, std::move(out));
}

/// Finite combination of monomials with coefficients in Scalar.
template <typename Scalar>
class Polynomial {
 public:
  using Terms = std::map<Exponent, Scalar>;

  Polynomial() = default;

  static Polynomial monomial(Exponent e, Scalar c = Scalar(1)) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, Scalar(-c));
    return *this;
  }

  Polynomial operator*(const Scalar& s) const {
    Polynomial out;
    for (const auto& [e, c] : terms_) out.add_term(e, Scalar(c * s));
    return out;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

template <typename Scalar>
Polynomial<Scalar> multiply(const std::vector<Generator>& gens, const Polynomial<Scalar>& x,
                            const Polynomial<Scalar>& y) {
  Polynomial<Scalar> out;
  for (const auto& [ea, ca] : x.terms()) {
    for (const auto& [eb, cb] : y.terms()) {
      auto prod = multiply_monomials(gens, ea, eb);
      if (!prod) continue;
      Scalar c = ca * cb;
      if (prod->first < 0) c = -c;
      out.add_term(prod->second, c);
    }
  }
  return out;
}

/// Applies a derivation of the given degree to one monomial, reading the
/// monomial as the ordered word x_1^{e_1} ... x_k^{e_k} and using
/// D(uv) = D(u) v + (-1)^{deg(D) |u|} u D(v).
template <typename Scalar>
Polynomial<Scalar> derivation_on_monomial(
    const std::vector<Generator>& gens, const Exponent& e,
    const std::function<const Polynomial<Scalar>&(std::size_t)>& on_generator, int derivation_degree) {
  Polynomial<Scalar> out;
  const bool odd = derivation_degree % 2 != 0;
  Exponent prefix(gens.size(), 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (e[i] == 0) continue;
    const auto& dg = on_generator(i);
    if (e[i] < 0) {
      if (!dg.is_zero()) throw std::invalid_argument("derivation on a negative power is not supported");
      prefix[i] = e[i];
      continue;
    }
    for (int copy = 0; copy < e[i]; ++copy) {
      if (!dg.is_zero()) {
        Exponent suffix(gens.size(), 0);
        suffix[i] = e[i] - copy - 1;
        for (std::size_t j = i + 1; j < gens.size(); ++j) suffix[j] = e[j];
        auto term = multiply(gens, multiply(gens, Polynomial<Scalar>::monomial(prefix), dg),
                             Polynomial<Scalar>::monomial(suffix));
        if (odd && monomial_degree(gens, prefix) % 2 != 0) term = term * Scalar(-1);
        out += term;
      }
      prefix[i] += 1;
    }
  }
  return out;
}

/// Exponent ranges per generator; hi = INT_MAX means unbounded above.
struct ExponentRange {
  int lo = 0;
  int hi = INT_MAX;
};

/// All exponent vectors of total degree n within the given ranges, in
/// lexicographic order, skipping any that are divisible by an excluded
/// monomial. Every generator with unbounded range must have positive degree.
std::vector<Exponent> enumerate_monomials(const std::vector<Generator>& gens,
                                          const std::vector<ExponentRange>& ranges, int n,
                                          const std::vector<Exponent>& excluded = {});

std::string format_monomial(const std::vector<Generator>& gens, const Exponent& e);

template <typename Scalar>
std::string format_polynomial(const std::vector<Generator>& gens, const Polynomial<Scalar>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string coeff = c.str();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const bool unit_monomial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (coeff != "1" || unit_monomial) {
      out += coeff;
      if (!unit_monomial) out += "*";
    }
    if (!unit_monomial) out += format_monomial(gens, e);
  }
  return out;
}

}  // namespace strtop
