#pragma once

#include "strtop/exact_linalg.hpp"
#include "strtop/graded_group.hpp"
#include "strtop/ring_presentation.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace strtop {

struct Bidegree {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }
  Bidegree operator+(Bidegree o) const { return {p + o.p, q + o.q}; }
  Bidegree operator-(Bidegree o) const { return {p - o.p, q - o.q}; }
  auto operator<=>(const Bidegree&) const = default;
  std::string to_string() const { return std::to_string(p) + "," + std::to_string(q); }
};

struct PageWindow {
  int p_min = 0, p_max = 0, q_min = 0, q_max = 0;

  bool contains(Bidegree b) const { return b.p >= p_min && b.p <= p_max && b.q >= q_min && b.q <= q_max; }
  PageWindow shifted(Bidegree by) const { return {p_min - by.p, p_max - by.p, q_min - by.q, q_max - by.q}; }
  friend bool operator==(const PageWindow&, const PageWindow&) = default;
};

class BidegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A ring presentation whose generators carry bidegrees; relations must be
/// bihomogeneous. Used as the multiplicative structure of an E^2 page.
struct BigradedRing {
  RingPresentation ring;
  std::vector<Bidegree> bidegrees;

  BigradedRing() = default;
  BigradedRing(RingPresentation ring, std::vector<Bidegree> bidegrees);

  Bidegree bidegree(const Exponent& e) const;
  std::vector<Exponent> monomials_in_bidegree(Bidegree b) const;

  /// Free module on monomials in bidegree b modulo the bihomogeneous relation slice.
  Subquotient entry(Bidegree b) const;
};

/// Bilinear map on ambient coordinates: (x in bidegree b1, y in b2) -> ambient
/// vector in b1 + b2.
using Pairing = std::function<IntVector(Bidegree, const IntVector&, Bidegree, const IntVector&)>;

/// One page E^r. Every entry is a subquotient Z/B of a fixed free ambient
/// module chosen at the starting page; turning a page shrinks Z and grows B
/// inside the same ambient, so cycle representatives never need re-lifting.
///
/// The differential d_r : E_{p,q} -> E_{p-r,q+r-1} is stored as a lift: one
/// ambient target vector per numerator basis vector of the source. Missing
/// differentials are zero.
class Page {
 public:
  Page() = default;
  Page(int level, PageWindow window);

  int level() const { return level_; }
  const PageWindow& window() const { return window_; }
  Bidegree differential_bidegree() const { return {-level_, level_ - 1}; }
  Bidegree target(Bidegree source) const { return source + differential_bidegree(); }

  void set_entry(Bidegree b, Subquotient entry);
  /// Entry in normal form with the group's generators as basis.
  void set_group(Bidegree b, const FinAbGroup& group);
  const Subquotient& entry(Bidegree b) const;
  bool has_entry(Bidegree b) const { return entries_.count(b) > 0; }
  FinAbGroup group(Bidegree b) const { return entry(b).group(); }
  Eigen::Index ambient_dim(Bidegree b) const { return entry(b).ambient_dim(); }

  /// Bidegrees in the window with a nontrivial group.
  std::vector<Bidegree> support() const;
  /// Direct sum of the entries on the line p + q = k.
  FinAbGroup total_group(int k) const;
  /// Alternating rank sum over the window.
  long long euler_characteristic() const;

  /// D maps the ambient module of `source` to that of its target.
  void set_differential_ambient(Bidegree source, const IntMatrix& D);
  /// Matrix on generator bases: column j is the image of source generator j in
  /// target generator coordinates.
  void set_differential_on_generators(Bidegree source, const IntMatrix& M);
  void set_differential_lift(Bidegree source, IntMatrix lift);
  bool has_differential(Bidegree source) const { return lifts_.count(source) > 0; }
  const std::map<Bidegree, IntMatrix>& differential_lifts() const { return lifts_; }
  void clear_differentials() { lifts_.clear(); }

  /// d_r applied to a cycle z (ambient vector in Z of `source`).
  IntVector apply_differential(Bidegree source, const IntVector& z) const;
  /// Matrix of d_r on generator bases (target generators x source generators).
  IntMatrix differential_on_generators(Bidegree source) const;

  /// Checks that each lift lands in the target cycles, that boundaries map to
  /// boundaries, and that d_r o d_r lands in the boundaries. Throws CompositionError.
  void validate() const;

  void set_ring(std::shared_ptr<const BigradedRing> ring);
  const BigradedRing* ring() const { return ring_.get(); }
  const std::shared_ptr<const BigradedRing>& shared_ring() const { return ring_; }
  const Pairing& product() const { return product_; }
  void set_product(Pairing product) { product_ = std::move(product); }
  bool has_product() const { return static_cast<bool>(product_); }
  IntVector multiply(Bidegree b1, const IntVector& x, Bidegree b2, const IntVector& y) const;

  std::string to_string() const;

 private:
  int level_ = 2;
  PageWindow window_;
  std::map<Bidegree, Subquotient> entries_;
  std::map<Bidegree, IntMatrix> lifts_;
  std::shared_ptr<const BigradedRing> ring_;
  Pairing product_;
};

/// E^{r+1} = H(E^r, d_r). Throws CompositionError when d_r o d_r != 0.
Page turn_page(const Page& E);

/// Entry (p,q) of the result is entry (p+a, q+b) of the input. Products are
/// not carried over; attach a ring in the new bidegrees if one is needed.
Page shift(const Page& E, Bidegree by);

/// Replaces the entries of E by the monomial model of `ring`, after checking
/// that every entry in the window is isomorphic to the corresponding
/// monomial entry. Existing differentials are dropped.
Page attach_ring(const Page& E, std::shared_ptr<const BigradedRing> ring);

/// Page with ring-presented entries and d_r extended from generator values by
/// the graded Leibniz rule. Throws BidegreeError if a value has the wrong bidegree.
Page leibniz_extend(const Page& E, const std::map<std::string, IntPolynomial>& generator_differentials);

struct CheckFailure {
  std::string check;
  Bidegree bidegree;
  int level = 0;
  std::string detail;
};
using Report = std::vector<CheckFailure>;

/// Verifies d(xy) = d(x)y + (-1)^{|x|} x d(y) on all pairs of cycle basis
/// vectors whose product stays in the window.
Report check_leibniz(const Page& E);

/// Verifies d'(x.m) = d(x).m + (-1)^{|x|} x.d'(m) and (xy).m = x.(y.m) for a
/// pairing E x M -> M.
Report check_module_pairing(const Page& E, const Page& M, const Pairing& pairing);

struct SpectralSequence {
  std::vector<Page> pages;

  const Page& page(int level) const;
  bool has_page(int level) const;
  const Page& last() const { return pages.back(); }
};

/// Turns pages (installing no differentials) until the level exceeds the
/// width of the window in p, where every further d_r leaves the window.
SpectralSequence run_to_stable(Page start);

/// A map E -> E' of bidegree (a,b) given from `level` on, as one matrix on
/// generator bases per level and source bidegree (absent = zero).
struct SSMorphism {
  int level = 2;
  Bidegree shift;
  std::map<int, std::map<Bidegree, IntMatrix>> maps;

  const IntMatrix* at(int level, Bidegree b) const;
};

/// The map on E^{n+1} induced by the level-n map in f.
std::map<Bidegree, IntMatrix> induced_map(const std::map<Bidegree, IntMatrix>& fn, Bidegree shift,
                                          const Page& En, const Page& En1, const Page& Fn, const Page& Fn1);

/// Lists every (p,q,r) where f fails to be a morphism; throws
/// std::invalid_argument on matrices of the wrong size.
Report check_morphism(const SSMorphism& f, const SpectralSequence& E, const SpectralSequence& F);

}  // namespace strtop
