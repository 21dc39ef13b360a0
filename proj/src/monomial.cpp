#include "strtop/monomial.hpp"

namespace strtop {

namespace {

constexpr long long kUnbounded = LLONG_MAX / 4;

struct Enumerator {
  const std::vector<Generator>& gens;
  const std::vector<ExponentRange>& ranges;
  const std::vector<Exponent>& excluded;
  std::vector<long long> suffix_min, suffix_max;
  std::vector<Exponent> out;
  Exponent current;

  bool divisible_by_excluded() const {
    for (const auto& x : excluded) {
      bool divides = true;
      for (std::size_t i = 0; i < x.size() && divides; ++i) divides = current[i] >= x[i];
      if (divides) return true;
    }
    return false;
  }

  void recurse(std::size_t i, long long remaining) {
    if (i == gens.size()) {
      if (remaining == 0 && !divisible_by_excluded()) out.push_back(current);
      return;
    }
    const long long d = gens[i].degree;
    const auto& r = ranges[i];
    for (long long e = r.lo; e <= r.hi; ++e) {
      const long long rest = remaining - e * d;
      if (d > 0 && rest < suffix_min[i + 1]) break;
      if (d < 0 && rest > suffix_max[i + 1]) break;
      if (rest < suffix_min[i + 1] || rest > suffix_max[i + 1]) continue;
      current[i] = static_cast<int>(e);
      recurse(i + 1, rest);
    }
    current[i] = 0;
  }
};

}  // namespace

std::vector<Exponent> enumerate_monomials(const std::vector<Generator>& gens,
                                          const std::vector<ExponentRange>& ranges, int n,
                                          const std::vector<Exponent>& excluded) {
  if (ranges.size() != gens.size()) throw std::invalid_argument("enumerate_monomials: range count mismatch");
  const std::size_t k = gens.size();
  Enumerator en{gens, ranges, excluded, std::vector<long long>(k + 1, 0), std::vector<long long>(k + 1, 0), {},
                Exponent(k, 0)};
  for (std::size_t i = k; i-- > 0;) {
    const long long d = gens[i].degree;
    const auto& r = ranges[i];
    if (r.hi == INT_MAX && d <= 0) {
      throw std::invalid_argument("generator " + gens[i].name + " has unbounded exponent in degree " +
                                  std::to_string(d));
    }
    long long lo = static_cast<long long>(r.lo) * d;
    long long hi = r.hi == INT_MAX ? kUnbounded : static_cast<long long>(r.hi) * d;
    if (lo > hi) std::swap(lo, hi);
    en.suffix_min[i] = en.suffix_min[i + 1] + lo;
    en.suffix_max[i] = hi == kUnbounded || en.suffix_max[i + 1] == kUnbounded ? kUnbounded : en.suffix_max[i + 1] + hi;
  }
  en.recurse(0, n);
  return std::move(en.out);
}

std::string format_monomial(const std::vector<Generator>& gens, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens[i].name;
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace strtop
