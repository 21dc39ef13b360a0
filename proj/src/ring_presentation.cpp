#include "strtop/ring_presentation.hpp"

#include <sstream>

namespace strtop {

IntVector DegreeComponent::to_vector(const IntPolynomial& p) const {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(monomials.size()));
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    // Monomials outside the basis lie in the monomial ideal and vanish.
    if (it != index.end()) v(it->second) += c;
  }
  return v;
}

IntPolynomial DegreeComponent::to_polynomial(const IntVector& v) const {
  IntPolynomial p;
  for (Eigen::Index i = 0; i < v.size(); ++i) p.add_term(monomials[static_cast<std::size_t>(i)], v(i));
  return p;
}

RingPresentation::RingPresentation(std::vector<Generator> generators, std::vector<IntPolynomial> relations,
                                   int prime)
    : generators_(std::move(generators)), relations_(std::move(relations)), prime_(prime) {
  if (prime_ < 0 || prime_ == 1) throw PresentationError("coefficient prime must be 0 or at least 2");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i].name == generators_[j].name) {
        throw PresentationError("duplicate generator name " + generators_[i].name);
      }
    }
  }
  for (const auto& r : relations_) {
    if (r.is_zero()) throw PresentationError("zero relation");
    for (const auto& [e, c] : r.terms()) {
      if (e.size() != generators_.size()) throw PresentationError("relation has wrong exponent length");
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 && generators_[i].kind != GeneratorKind::Laurent) {
          throw PresentationError("negative exponent on non-Laurent generator " + generators_[i].name);
        }
        if (generators_[i].kind == GeneratorKind::Exterior && e[i] > 1) {
          throw PresentationError("exterior generator " + generators_[i].name + " squared in a relation");
        }
      }
    }
    relation_degrees_.push_back(degree(r));
    if (r.terms().size() == 1) {
      const auto& [e, c] = *r.terms().begin();
      bool nonneg = std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
      if (nonneg && abs(c) == 1) monomial_ideal_.push_back(e);
    }
  }

  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    ExponentRange range;
    switch (g.kind) {
      case GeneratorKind::Exterior:
        range = {0, 1};
        break;
      case GeneratorKind::Laurent:
        if (g.laurent_bound < 0) throw PresentationError("negative Laurent bound for " + g.name);
        range = {-g.laurent_bound, g.laurent_bound};
        break;
      case GeneratorKind::Polynomial:
        if (g.degree <= 0) {
          int cap = -1;
          for (const auto& m : monomial_ideal_) {
            bool pure = true;
            for (std::size_t j = 0; j < m.size(); ++j) pure = pure && (j == i ? m[j] > 0 : m[j] == 0);
            if (pure && (cap < 0 || m[i] - 1 < cap)) cap = m[i] - 1;
          }
          if (cap < 0) {
            throw PresentationError("generator " + g.name + " of degree " + std::to_string(g.degree) +
                                    " has no relation " + g.name +
                                    "^k with unit coefficient; the ring is degreewise infinite");
          }
          range = {0, cap};
        }
        break;
    }
    ranges_.push_back(range);
  }
}

std::size_t RingPresentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  throw std::invalid_argument("unknown generator " + name);
}

Exponent RingPresentation::exponent(std::initializer_list<std::pair<std::string, int>> powers) const {
  Exponent e(generators_.size(), 0);
  for (const auto& [name, k] : powers) e[generator_index(name)] += k;
  return e;
}

int RingPresentation::degree(const IntPolynomial& p) const {
  if (p.is_zero()) throw std::invalid_argument("degree of the zero element is undefined");
  const int d = degree(p.terms().begin()->first);
  for (const auto& [e, c] : p.terms()) {
    if (degree(e) != d) throw PresentationError("inhomogeneous element " + format(p));
  }
  return d;
}

bool RingPresentation::graded_commutative() const {
  return std::none_of(generators_.begin(), generators_.end(), [](const Generator& g) {
    return g.degree % 2 != 0 && g.kind != GeneratorKind::Exterior;
  });
}

int RingPresentation::min_degree() const {
  long long total = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const long long d = generators_[i].degree;
    const auto& r = ranges_[i];
    long long lo = r.lo * d;
    if (r.hi != INT_MAX) lo = std::min(lo, static_cast<long long>(r.hi) * d);
    total += lo;
  }
  return static_cast<int>(total);
}

std::vector<Exponent> RingPresentation::monomials_in_degree(int n) const {
  return enumerate_monomials(generators_, ranges_, n, monomial_ideal_);
}

const DegreeComponent& RingPresentation::component_data(int n) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->components.find(n);
    if (it != cache_->components.end()) return *it->second;
  }
  auto data = std::make_shared<DegreeComponent>();
  data->degree = n;
  data->monomials = monomials_in_degree(n);
  for (std::size_t i = 0; i < data->monomials.size(); ++i) {
    data->index.emplace(data->monomials[i], static_cast<Eigen::Index>(i));
  }
  const auto dim = static_cast<Eigen::Index>(data->monomials.size());
  std::vector<IntVector> columns;
  for (std::size_t r = 0; r < relations_.size() && dim > 0; ++r) {
    for (const auto& m : monomials_in_degree(n - relation_degrees_[r])) {
      IntVector v = data->to_vector(multiply(generators_, IntPolynomial::monomial(m), relations_[r]));
      if (!v.isZero()) columns.push_back(std::move(v));
    }
  }
  if (prime_ > 0) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      IntVector v = IntVector::Zero(dim);
      v(i) = prime_;
      columns.push_back(std::move(v));
    }
  }
  data->relations.resize(dim, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) data->relations.col(static_cast<Eigen::Index>(j)) = columns[j];
  data->group = Subquotient::quotient(dim, data->relations);
  data->reducer = EchelonReducer(data->relations);

  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->components.emplace(n, std::move(data));
  return *it->second;
}

GradedGroup RingPresentation::components(int lo, int hi) const {
  GradedGroup out(lo, hi);
  for (int n = lo; n <= hi; ++n) out.set(n, component(n));
  return out;
}

IntPolynomial RingPresentation::normal_form(const IntPolynomial& p) const {
  if (p.is_zero()) return p;
  const auto& data = component_data(degree(p));
  return data.to_polynomial(data.reducer.reduce(data.to_vector(p)));
}

IntPolynomial RingPresentation::product(const IntPolynomial& x, const IntPolynomial& y) const {
  return normal_form(multiply(generators_, x, y));
}

RingPresentation RingPresentation::tensor_product(const RingPresentation& other) const {
  if (prime_ != other.prime_) throw PresentationError("tensor product over different coefficient rings");
  std::vector<Generator> gens = generators_;
  for (auto g : other.generators_) {
    while (std::any_of(gens.begin(), gens.end(), [&](const Generator& h) { return h.name == g.name; })) {
      g.name += "'";
    }
    gens.push_back(g);
  }
  const std::size_t left = generators_.size();
  std::vector<IntPolynomial> rels;
  for (const auto& r : relations_) {
    IntPolynomial padded;
    for (const auto& [e, c] : r.terms()) {
      Exponent x = e;
      x.resize(gens.size(), 0);
      padded.add_term(x, c);
    }
    rels.push_back(padded);
  }
  for (const auto& r : other.relations_) {
    IntPolynomial padded;
    for (const auto& [e, c] : r.terms()) {
      Exponent x(left, 0);
      x.insert(x.end(), e.begin(), e.end());
      padded.add_term(x, c);
    }
    rels.push_back(padded);
  }
  return RingPresentation(std::move(gens), std::move(rels), prime_);
}

std::string RingPresentation::to_string() const {
  std::vector<std::string> exterior, polynomial;
  for (const auto& g : generators_) {
    switch (g.kind) {
      case GeneratorKind::Exterior:
        exterior.push_back(g.name);
        break;
      case GeneratorKind::Polynomial:
        polynomial.push_back(g.name);
        break;
      case GeneratorKind::Laurent:
        polynomial.push_back(g.name + "," + g.name + "^-1");
        break;
    }
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  };
  const std::string base = prime_ > 0 ? "F_" + std::to_string(prime_) : "Z";
  std::ostringstream out;
  if (!exterior.empty()) out << "Lambda(" << join(exterior) << ")";
  if (!exterior.empty() && !polynomial.empty()) out << " (x) ";
  if (!polynomial.empty() || exterior.empty()) out << base << "[" << join(polynomial) << "]";
  if (!relations_.empty()) {
    out << " / (";
    for (std::size_t i = 0; i < relations_.size(); ++i) out << (i ? ", " : "") << format(relations_[i]);
    out << ")";
  }
  if (!generators_.empty()) {
    out << ";";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      out << (i ? ", " : " ") << "|" << generators_[i].name << "| = " << generators_[i].degree;
    }
  }
  return out.str();
}

}  // namespace strtop
