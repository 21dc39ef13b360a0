#pragma once

#include "strtop/graded_group.hpp"
#include "strtop/ring_presentation.hpp"
#include "strtop/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strtop {

/// Raised when a data file does not follow its schema.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input violates a documented precondition. `degree` names
/// the offending degree when there is one.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what, std::optional<int> degree = std::nullopt)
      : std::invalid_argument(what), degree(degree) {}
  std::optional<int> degree;
};

struct SpaceSpec {
  enum class Kind { Sphere, ComplexProjective, QuaternionicProjective, SphereBundle };

  Kind kind = Kind::Sphere;
  int n = 2;
  int k = 0;  // fiber sphere dimension for bundles

  static SpaceSpec sphere(int n) { return {Kind::Sphere, n, 0}; }
  static SpaceSpec complex_projective(int n) { return {Kind::ComplexProjective, n, 0}; }
  static SpaceSpec quaternionic_projective(int n) { return {Kind::QuaternionicProjective, n, 0}; }
  static SpaceSpec sphere_bundle(int k, int n) { return {Kind::SphereBundle, n, k}; }

  /// Parses "sphere:3", "CP:2" or "HP:1".
  static SpaceSpec parse(const std::string& text);

  /// Manifold dimension, which is also the grading shift between H and the
  /// shifted grading used for loop homology rings.
  int dimension() const;
  std::string name() const;
};

/// Integral homology of the base: spheres and projective spaces.
GradedGroup base_homology(const SpaceSpec& spec);

/// E^2_{p,q} = H_p(B; h_q(F)) for a trivial coefficient system.
Page serre_e2_trivial(const GradedGroup& base, const GradedGroup& fiber);

/// Loop homology rings in the shifted grading.
RingPresentation cjy_sphere_ring(int n);
RingPresentation projective_ring(char field, int n);
RingPresentation catalog_ring(const SpaceSpec& spec);

/// Pontryagin ring of the based loop space.
RingPresentation loop_fiber_ring(const SpaceSpec& spec);

/// Intersection ring of the base in the shifted grading (unit in degree 0).
RingPresentation base_intersection_ring(const SpaceSpec& spec);

struct HypothesisCheck {
  enum class Status { Confirmed, Assumed, Violated };
  std::string hypothesis;
  Status status = Status::Confirmed;
  std::string detail;
};

std::string to_string(HypothesisCheck::Status status);

struct AssembledRing {
  RingPresentation ring;
  std::vector<HypothesisCheck> hypotheses;
};

/// Reassembles the abutment ring from a polynomial (x) exterior base row and
/// the fiber column, assuming E-infinity is their tensor product on the
/// window [min_degree, max_degree]. Throws PreconditionError if the base row
/// has relations or Laurent generators.
AssembledRing assemble_from_einf(const RingPresentation& base_row, const RingPresentation& fiber_col, int min_degree,
                                 int max_degree);

/// Coefficients h_* of a generalized homology theory over a degree window.
struct CoefficientRing {
  std::string name;
  std::string version;
  int window = 0;
  std::vector<Generator> free_generators;
  std::optional<GradedGroup> graded_table;

  /// The coefficient groups in degrees [min_degree(), window].
  GradedGroup groups() const;
  int min_degree() const;
  /// Ring of the free generators (only for the free-generator form).
  RingPresentation ring() const;
  bool torsion_free() const;

  static CoefficientRing integers();
};

CoefficientRing load_coefficient_ring(const std::string& path);

struct AhssResult {
  GradedGroup groups;
  std::optional<RingPresentation> ring;
  /// Degrees up to this value receive every contribution; above it the
  /// coefficient window truncates the sum.
  int exact_through = 0;
  std::vector<std::string> notes;
};

/// h_n(X) = sum over p+q=n of H_p(X; h_q) on [min_degree, max_degree], for a
/// spectral sequence that degenerates. Free-generator coefficients need H
/// degreewise free; a tabulated coefficient group needs H without odd torsion.
AhssResult ahss_tensor(const GradedGroup& H, const CoefficientRing& coeffs, int min_degree, int max_degree);

/// Ring version: additionally attaches H (x) h_* when H is polynomial (x)
/// exterior without relations and the coefficients are free.
AhssResult ahss_tensor(const RingPresentation& H, const CoefficientRing& coeffs, int min_degree, int max_degree);

/// Generator differentials installed on one page.
struct GeneratorDifferentials {
  int level = 2;
  std::map<std::string, IntPolynomial> values;
};

struct LoopSpectralSequence {
  SpaceSpec spec;
  int shift = 0;  // H_* = HH_{* - shift}
  int max_degree = 0;
  std::shared_ptr<const BigradedRing> e2_ring;
  SpectralSequence sequence;

  /// Sum of the stable entries on p + q = k.
  FinAbGroup stable_group(int k) const { return sequence.last().total_group(k); }
  GradedGroup stable_groups() const;
};

/// E^2 ring of the loop fibration in the shifted grading: base generators in
/// bidegree (deg, 0), fiber generators in (0, deg).
std::shared_ptr<const BigradedRing> loop_e2_ring(const SpaceSpec& spec);

/// The loop-fibration spectral sequence in the shifted grading, with the
/// given generator differentials Leibniz-extended on their pages, turned
/// until stable. Total degrees up to max_degree are reliable.
LoopSpectralSequence build_loop_ss(const SpaceSpec& spec, const std::vector<GeneratorDifferentials>& differentials,
                                   int max_degree);

/// The one-parameter family of generator differentials searched over: on
/// spheres d_n(x) = lambda * a x^2, on projective spaces d_{dn}(z) = lambda * c^n y.
std::vector<GeneratorDifferentials> candidate_differentials(const SpaceSpec& spec, int lambda);

struct SearchOutcome {
  int lambda = 0;
  bool matches = false;
  std::string detail;  // first mismatch, or the reason the candidate is invalid
};

/// Tries every lambda in [lo, hi] and compares the stable page with the
/// catalog ring in total degrees [-dim, max_degree].
std::vector<SearchOutcome> search_differentials(const SpaceSpec& spec, int max_degree, int lo = -3, int hi = 3);

}  // namespace strtop
