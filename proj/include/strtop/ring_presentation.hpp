#pragma once

#include "strtop/exact_linalg.hpp"
#include "strtop/graded_group.hpp"
#include "strtop/monomial.hpp"

#include <memory>
#include <mutex>

namespace strtop {

/// Raised when a presentation cannot be evaluated degreewise.
class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using IntPolynomial = Polynomial<Integer>;

/// One degree of a presented ring: the monomial basis, the relation lattice
/// and the resulting group.
struct DegreeComponent {
  int degree = 0;
  std::vector<Exponent> monomials;
  std::map<Exponent, Eigen::Index> index;
  IntMatrix relations;  // columns span the degree-n slice of the ideal
  Subquotient group;
  EchelonReducer reducer;

  IntVector to_vector(const IntPolynomial& p) const;
  IntPolynomial to_polynomial(const IntVector& v) const;
};

/// A graded ring given by generators and homogeneous integer relations,
/// optionally reduced mod a prime.
///
/// Generators of negative degree must be nilpotent through a relation g^k with
/// unit coefficient; this is what makes every degree finitely generated.
/// Relations that are a single monomial with unit coefficient are used to
/// drop divisible monomials from the enumeration.
class RingPresentation {
 public:
  RingPresentation() = default;
  RingPresentation(std::vector<Generator> generators, std::vector<IntPolynomial> relations, int prime = 0);

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<IntPolynomial>& relations() const { return relations_; }
  int prime() const { return prime_; }

  std::size_t generator_index(const std::string& name) const;

  /// Monomial from (generator name, exponent) pairs.
  Exponent exponent(std::initializer_list<std::pair<std::string, int>> powers) const;
  IntPolynomial monomial(std::initializer_list<std::pair<std::string, int>> powers, long coeff = 1) const {
    return IntPolynomial::monomial(exponent(powers), Integer(coeff));
  }
  IntPolynomial one() const { return IntPolynomial::monomial(Exponent(generators_.size(), 0)); }

  int degree(const Exponent& e) const { return monomial_degree(generators_, e); }

  /// Degree of a homogeneous polynomial; throws on inhomogeneous input.
  int degree(const IntPolynomial& p) const;

  /// Every odd generator exterior, so x*y = (-1)^{|x||y|} y*x holds exactly.
  bool graded_commutative() const;

  /// Lowest degree carrying any monomial.
  int min_degree() const;

  std::vector<Exponent> monomials_in_degree(int n) const;
  const DegreeComponent& component_data(int n) const;
  FinAbGroup component(int n) const { return component_data(n).group.group(); }
  GradedGroup components(int lo, int hi) const;

  /// Reduces a homogeneous element to its canonical representative.
  IntPolynomial normal_form(const IntPolynomial& p) const;
  IntPolynomial product(const IntPolynomial& x, const IntPolynomial& y) const;

  /// Generators of both factors (renamed on clashes) and both relation sets.
  RingPresentation tensor_product(const RingPresentation& other) const;

  std::string format(const IntPolynomial& p) const { return format_polynomial(generators_, p); }
  std::string to_string() const;

  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.generators_ == b.generators_ && a.relations_ == b.relations_ && a.prime_ == b.prime_;
  }

 private:
  std::vector<Generator> generators_;
  std::vector<IntPolynomial> relations_;
  std::vector<int> relation_degrees_;
  int prime_ = 0;
  std::vector<ExponentRange> ranges_;
  std::vector<Exponent> monomial_ideal_;

  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const DegreeComponent>> components;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace strtop
