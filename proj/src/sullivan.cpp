#include "strtop/sullivan.hpp"

#include "strtop/exact_linalg.hpp"

namespace strtop {

SullivanAlgebra::SullivanAlgebra(std::vector<Generator> generators) : gens_(std::move(generators)) {
  for (auto& g : gens_) {
    if (g.degree <= 0) throw std::invalid_argument("generator " + g.name + " must have positive degree");
    g = make_generator(g.name, g.degree);
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gens_[i].name == gens_[j].name) throw std::invalid_argument("duplicate generator " + gens_[i].name);
    }
  }
  d_.resize(gens_.size());
}

std::size_t SullivanAlgebra::index(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown generator " + name);
}

RatPolynomial SullivanAlgebra::monomial(const std::vector<std::pair<std::string, int>>& powers, Rational c) const {
  Exponent e(gens_.size(), 0);
  for (const auto& [name, k] : powers) e[index(name)] += k;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].kind == GeneratorKind::Exterior && e[i] > 1) return {};
  }
  // Written in generator order, so the word is already sorted.
  return RatPolynomial::monomial(e, c);
}

void SullivanAlgebra::set_differential(const std::string& name, RatPolynomial value) {
  const std::size_t i = index(name);
  for (const auto& [e, c] : value.terms()) {
    if (monomial_degree(gens_, e) != gens_[i].degree + 1) {
      throw std::invalid_argument("d(" + name + ") = " + format_polynomial(gens_, value) + " is not of degree " +
                                  std::to_string(gens_[i].degree + 1));
    }
  }
  d_[i] = std::move(value);
}

RatPolynomial SullivanAlgebra::d(const RatPolynomial& x) const {
  RatPolynomial out;
  const std::function<const RatPolynomial&(std::size_t)> on_gen = [this](std::size_t i) -> const RatPolynomial& {
    return d_[i];
  };
  for (const auto& [e, c] : x.terms()) out += derivation_on_monomial(gens_, e, on_gen, 1) * c;
  return out;
}

void SullivanAlgebra::validate() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const RatPolynomial dd = d(d_[i]);
    if (!dd.is_zero()) {
      throw DifferentialError("d(d(" + gens_[i].name + ")) = " + format_polynomial(gens_, dd) + " is not zero",
                              gens_[i].name);
    }
  }
}

std::vector<Exponent> SullivanAlgebra::monomials_in_degree(int n) const {
  std::vector<ExponentRange> ranges;
  for (const auto& g : gens_) ranges.push_back({0, g.kind == GeneratorKind::Exterior ? 1 : INT_MAX});
  return enumerate_monomials(gens_, ranges, n);
}

std::string SullivanAlgebra::to_string() const {
  std::string out = "Lambda(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    out += (i ? ", " : "") + gens_[i].name + "_" + std::to_string(gens_[i].degree);
  }
  out += ")";
  bool any = false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (d_[i].is_zero()) continue;
    out += (any ? ", " : "; ") + std::string("d") + gens_[i].name + " = " + format_polynomial(gens_, d_[i]);
    any = true;
  }
  if (!any) out += "; d = 0";
  return out;
}

namespace {

// Matrix of d from degree n to degree n + 1 on monomial bases.
RatMatrix differential_matrix(const SullivanAlgebra& A, const std::vector<Exponent>& source,
                              const std::vector<Exponent>& target) {
  std::map<Exponent, Eigen::Index> row;
  for (std::size_t i = 0; i < target.size(); ++i) row[target[i]] = static_cast<Eigen::Index>(i);
  RatMatrix M = RatMatrix::Zero(static_cast<Eigen::Index>(target.size()), static_cast<Eigen::Index>(source.size()));
  for (std::size_t j = 0; j < source.size(); ++j) {
    const RatPolynomial image = A.d(RatPolynomial::monomial(source[j]));
    for (const auto& [e, c] : image.terms()) {
      M(row.at(e), static_cast<Eigen::Index>(j)) = c;
    }
  }
  return M;
}

}  // namespace

std::vector<long> dga_cohomology(const SullivanAlgebra& A, int maxdeg) {
  A.validate();
  std::vector<long> betti;
  std::vector<Exponent> here = A.monomials_in_degree(0);
  Eigen::Index incoming = 0;
  for (int n = 0; n <= maxdeg; ++n) {
    std::vector<Exponent> next = A.monomials_in_degree(n + 1);
    const Eigen::Index outgoing = rational_rank(differential_matrix(A, here, next));
    betti.push_back(static_cast<long>(here.size()) - outgoing - incoming);
    incoming = outgoing;
    here = std::move(next);
  }
  return betti;
}

SullivanAlgebra sphere_model(int n) {
  if (n < 2) throw std::invalid_argument("sphere models need n >= 2, got " + std::to_string(n));
  if (n % 2 != 0) return SullivanAlgebra({make_generator("x", n)});
  SullivanAlgebra A({make_generator("x", n), make_generator("y", 2 * n - 1)});
  A.set_differential("y", A.monomial({{"x", 2}}));
  return A;
}

SullivanAlgebra bundle_model(int k, int n) {
  if (k < 3 || k % 2 == 0) throw PreconditionError("fiber dimension k must be odd and at least 3, got " + std::to_string(k));
  if (n < 2) throw PreconditionError("base dimension n must be at least 2, got " + std::to_string(n));
  if (n % 2 == 0) {
    if (k == n - 1 || k == n + 1) {
      throw PreconditionError("k = " + std::to_string(k) + " is n +- 1 for n = " + std::to_string(n));
    }
    if ((n - 1) % (k - 1) == 0) {
      throw PreconditionError("n - 1 = " + std::to_string(n - 1) + " is a multiple of k - 1 = " + std::to_string(k - 1));
    }
  }
  SullivanAlgebra fiber({make_generator("xk", k)});
  SullivanAlgebra base({make_generator("xn", n)});
  if (n % 2 == 0) {
    base = SullivanAlgebra({make_generator("xn", n), make_generator("yn", 2 * n - 1)});
    base.set_differential("yn", base.monomial({{"xn", 2}}));
  }
  return tensor(fiber, base);
}

SullivanAlgebra tensor(const SullivanAlgebra& A, const SullivanAlgebra& B) {
  std::vector<Generator> gens = A.generators();
  for (Generator g : B.generators()) {
    while (std::any_of(gens.begin(), gens.end(), [&](const Generator& h) { return h.name == g.name; })) g.name += "'";
    gens.push_back(g);
  }
  SullivanAlgebra out(gens);
  const std::size_t na = A.generators().size();
  auto embed = [&](const RatPolynomial& p, std::size_t offset, std::size_t len) {
    RatPolynomial q;
    for (const auto& [e, c] : p.terms()) {
      Exponent big(gens.size(), 0);
      for (std::size_t i = 0; i < len; ++i) big[offset + i] = e[i];
      q.add_term(big, c);
    }
    return q;
  };
  for (std::size_t i = 0; i < na; ++i) out.set_differential(gens[i].name, embed(A.differential(i), 0, na));
  for (std::size_t i = 0; i < B.generators().size(); ++i) {
    out.set_differential(gens[na + i].name, embed(B.differential(i), na, B.generators().size()));
  }
  return out;
}

SullivanAlgebra vigue_sullivan_loop(const SullivanAlgebra& A) {
  A.validate();
  const auto& base = A.generators();
  const std::size_t n = base.size();
  std::vector<Generator> gens = base;
  for (const auto& g : base) {
    if (g.degree == 1) throw PreconditionError("generator " + g.name + " has degree 1; its loop partner would have degree 0");
    gens.push_back(make_generator(g.name + "bar", g.degree - 1));
  }
  SullivanAlgebra out(gens);

  std::vector<RatPolynomial> s_on(2 * n), d_on(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(2 * n, 0);
    e[n + i] = 1;
    s_on[i] = RatPolynomial::monomial(e);
    for (const auto& [ea, c] : A.differential(i).terms()) {
      Exponent big(2 * n, 0);
      std::copy(ea.begin(), ea.end(), big.begin());
      d_on[i].add_term(big, c);
    }
  }
  const std::function<const RatPolynomial&(std::size_t)> s = [&](std::size_t i) -> const RatPolynomial& {
    return s_on[i];
  };
  for (std::size_t i = 0; i < n; ++i) {
    out.set_differential(gens[i].name, d_on[i]);
    RatPolynomial sd;
    for (const auto& [e, c] : d_on[i].terms()) sd += derivation_on_monomial(gens, e, s, -1) * c;
    out.set_differential(gens[n + i].name, sd * Rational(-1));
  }
  out.validate();
  return out;
}

LoopBundleReport rational_loop_bundle(int k, int n, int maxdeg) {
  LoopBundleReport r;
  r.bundle_betti = dga_cohomology(vigue_sullivan_loop(bundle_model(k, n)), maxdeg);
  r.product_betti = dga_cohomology(vigue_sullivan_loop(tensor(sphere_model(k), sphere_model(n))), maxdeg);

  // E^2_{p,q} = H_p(LS^n) (x) H_q(LS^k) with H_*(LS^k) free for odd k.
  const RingPresentation base = cjy_sphere_ring(n);
  std::optional<int> torsion_at;
  for (int p = 0; p <= maxdeg && !torsion_at; ++p) {
    if (!base.component(p - n).is_free()) torsion_at = p;
  }
  const std::string window = "total degree <= " + std::to_string(maxdeg);
  if (torsion_at) {
    r.torsion_free = {"E^2 torsion-free", HypothesisCheck::Status::Violated,
                      "H_" + std::to_string(*torsion_at) + "(LS^" + std::to_string(n) + ") has torsion"};
    r.integral_lift = {"rational collapse lifts to integers", HypothesisCheck::Status::Violated,
                       "not applicable: E^2 has torsion"};
  } else {
    r.torsion_free = {"E^2 torsion-free", HypothesisCheck::Status::Confirmed, window};
    r.integral_lift = {"rational collapse lifts to integers", HypothesisCheck::Status::Assumed,
                       "follows from torsion-freeness by a theorem, not checked by computation"};
  }
  return r;
}

}  // namespace strtop
