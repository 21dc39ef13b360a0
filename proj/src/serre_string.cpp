#include "strtop/serre_string.hpp"

#include "strtop/json_io.hpp"

#include <fstream>

namespace strtop {

namespace {

int projective_step(SpaceSpec::Kind kind) { return kind == SpaceSpec::Kind::ComplexProjective ? 2 : 4; }

bool is_projective(const SpaceSpec& s) {
  return s.kind == SpaceSpec::Kind::ComplexProjective || s.kind == SpaceSpec::Kind::QuaternionicProjective;
}

void require_supported(const SpaceSpec& spec) {
  if (spec.kind == SpaceSpec::Kind::Sphere && spec.n < 2) {
    throw PreconditionError("spheres of dimension " + std::to_string(spec.n) + " are not supported (need n >= 2)");
  }
  if (is_projective(spec) && spec.n < 1) {
    throw PreconditionError("projective spaces need n >= 1, got " + std::to_string(spec.n));
  }
  if (spec.kind == SpaceSpec::Kind::SphereBundle) {
    throw PreconditionError("sphere bundles are only handled rationally");
  }
}

IntPolynomial power(const RingPresentation& r, const std::string& name, int k, long coeff = 1) {
  return r.monomial({{name, k}}, coeff);
}

}  // namespace

SpaceSpec SpaceSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw PreconditionError("space must look like sphere:N, CP:N or HP:N");
  const std::string head = text.substr(0, colon);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw PreconditionError("bad dimension in space " + text);
  }
  SpaceSpec spec;
  if (head == "sphere" || head == "S") {
    spec = sphere(n);
  } else if (head == "CP") {
    spec = complex_projective(n);
  } else if (head == "HP") {
    spec = quaternionic_projective(n);
  } else {
    throw PreconditionError("unknown space kind " + head);
  }
  require_supported(spec);
  return spec;
}

int SpaceSpec::dimension() const {
  switch (kind) {
    case Kind::Sphere:
      return n;
    case Kind::ComplexProjective:
      return 2 * n;
    case Kind::QuaternionicProjective:
      return 4 * n;
    case Kind::SphereBundle:
      return k + n;
  }
  return n;
}

std::string SpaceSpec::name() const {
  switch (kind) {
    case Kind::Sphere:
      return "S^" + std::to_string(n);
    case Kind::ComplexProjective:
      return "CP^" + std::to_string(n);
    case Kind::QuaternionicProjective:
      return "HP^" + std::to_string(n);
    case Kind::SphereBundle:
      return "S^" + std::to_string(k) + "-bundle over S^" + std::to_string(n);
  }
  return "?";
}

GradedGroup base_homology(const SpaceSpec& spec) {
  require_supported(spec);
  GradedGroup H(0, spec.dimension());
  const int step = spec.kind == SpaceSpec::Kind::Sphere ? spec.n : projective_step(spec.kind);
  for (int p = 0; p <= spec.dimension(); p += step) H.set(p, FinAbGroup::free(1));
  return H;
}

Page serre_e2_trivial(const GradedGroup& base, const GradedGroup& fiber) {
  Page E(2, {base.min_degree(), base.max_degree(), fiber.min_degree(), fiber.max_degree()});
  for (int q = fiber.min_degree(); q <= fiber.max_degree(); ++q) {
    if (fiber.at(q).is_trivial()) continue;
    const GradedGroup row = uct_row(base, fiber.at(q));
    for (int p = base.min_degree(); p <= base.max_degree(); ++p) {
      if (!row.at(p).is_trivial()) E.set_group({p, q}, row.at(p));
    }
  }
  return E;
}

RingPresentation cjy_sphere_ring(int n) {
  if (n < 2) throw PreconditionError("the sphere ring needs n >= 2, got " + std::to_string(n));
  if (n % 2 != 0) return RingPresentation({make_generator("a", -n), make_generator("u", n - 1)}, {});
  std::vector<Generator> gens = {make_generator("b", -1), make_generator("a", -n), make_generator("v", 2 * n - 2)};
  const RingPresentation names(gens, {IntPolynomial::monomial({0, 2, 0})});
  return RingPresentation(gens, {names.monomial({{"a", 2}}), names.monomial({{"a", 1}, {"b", 1}}),
                                 names.monomial({{"a", 1}, {"v", 1}}, 2)});
}

RingPresentation projective_ring(char field, int n) {
  if (field != 'C' && field != 'H') throw PreconditionError(std::string("unknown field ") + field + " (use C or H)");
  if (n < 1) throw PreconditionError("projective spaces need n >= 1, got " + std::to_string(n));
  const int d = field == 'C' ? 2 : 4;
  std::vector<Generator> gens = {make_generator("w", -1), make_generator("c", -d),
                                 make_generator("u", d * (n + 1) - 2)};
  const RingPresentation names(gens, {IntPolynomial::monomial({0, n + 1, 0})});
  return RingPresentation(gens, {power(names, "c", n + 1), names.monomial({{"w", 1}, {"c", n}}),
                                 names.monomial({{"c", n}, {"u", 1}}, n + 1)});
}

RingPresentation catalog_ring(const SpaceSpec& spec) {
  require_supported(spec);
  switch (spec.kind) {
    case SpaceSpec::Kind::Sphere:
      return cjy_sphere_ring(spec.n);
    case SpaceSpec::Kind::ComplexProjective:
      return projective_ring('C', spec.n);
    case SpaceSpec::Kind::QuaternionicProjective:
      return projective_ring('H', spec.n);
    case SpaceSpec::Kind::SphereBundle:
      break;
  }
  throw PreconditionError("no catalog ring for " + spec.name());
}

RingPresentation loop_fiber_ring(const SpaceSpec& spec) {
  require_supported(spec);
  if (spec.kind == SpaceSpec::Kind::Sphere) {
    // Z[x] even when |x| = n - 1 is odd: x^2 is not 2-torsion here.
    return RingPresentation({{"x", spec.n - 1, GeneratorKind::Polynomial, 0}}, {});
  }
  const int d = projective_step(spec.kind);
  return RingPresentation({make_generator("y", d * (spec.n + 1) - 2), make_generator("z", d - 1)}, {});
}

RingPresentation base_intersection_ring(const SpaceSpec& spec) {
  require_supported(spec);
  if (spec.kind == SpaceSpec::Kind::Sphere) {
    Generator a = make_generator("a", -spec.n);
    if (a.kind == GeneratorKind::Exterior) return RingPresentation({a}, {});
    return RingPresentation({a}, {IntPolynomial::monomial({2})});
  }
  const int d = projective_step(spec.kind);
  return RingPresentation({make_generator("c", -d)}, {IntPolynomial::monomial({spec.n + 1})});
}

std::string to_string(HypothesisCheck::Status status) {
  switch (status) {
    case HypothesisCheck::Status::Confirmed:
      return "confirmed";
    case HypothesisCheck::Status::Assumed:
      return "assumed";
    case HypothesisCheck::Status::Violated:
      return "violated";
  }
  return "?";
}

AssembledRing assemble_from_einf(const RingPresentation& base_row, const RingPresentation& fiber_col, int min_degree,
                                 int max_degree) {
  if (!base_row.relations().empty()) {
    throw PreconditionError("base row " + base_row.to_string() + " has relations; it must be polynomial (x) exterior");
  }
  for (const auto& g : base_row.generators()) {
    if (g.kind == GeneratorKind::Laurent) {
      throw PreconditionError("base row generator " + g.name + " is a Laurent generator");
    }
  }
  AssembledRing out{base_row.tensor_product(fiber_col), {}};
  std::string gens;
  for (const auto& g : base_row.generators()) gens += (gens.empty() ? "" : ", ") + g.name;
  out.hypotheses.push_back({"base row is polynomial (x) exterior", HypothesisCheck::Status::Confirmed,
                            gens.empty() ? "base row is the coefficient ring" : "free on " + gens});

  bool free = true;
  int first_torsion = 0;
  for (int k = min_degree; k <= max_degree; ++k) {
    const auto g = out.ring.component(k);
    if (!g.is_free() && free) {
      free = false;
      first_torsion = k;
    }
  }
  const std::string window = "[" + std::to_string(min_degree) + ", " + std::to_string(max_degree) + "]";
  out.hypotheses.push_back({"finitely generated in every bidegree", HypothesisCheck::Status::Confirmed,
                            "every degree in " + window + " has a finite monomial basis"});
  if (free) {
    out.hypotheses.push_back({"additive extensions split", HypothesisCheck::Status::Confirmed,
                              "E-infinity is torsion-free on " + window});
  } else {
    out.hypotheses.push_back({"additive extensions split", HypothesisCheck::Status::Assumed,
                              "torsion in degree " + std::to_string(first_torsion)});
  }
  out.hypotheses.push_back({"multiplicative extensions are trivial", HypothesisCheck::Status::Assumed,
                            "not decidable from page data"});
  return out;
}

int CoefficientRing::min_degree() const {
  if (graded_table) return graded_table->min_degree();
  for (const auto& g : free_generators) {
    if (g.kind == GeneratorKind::Laurent) return -window;
  }
  return 0;
}

RingPresentation CoefficientRing::ring() const {
  if (graded_table) throw PreconditionError("coefficient ring " + name + " is given as a table, not by generators");
  return RingPresentation(free_generators, {});
}

GradedGroup CoefficientRing::groups() const {
  if (graded_table) return *graded_table;
  return ring().components(min_degree(), window);
}

bool CoefficientRing::torsion_free() const {
  if (!graded_table) return true;
  for (int k = graded_table->min_degree(); k <= graded_table->max_degree(); ++k) {
    if (!graded_table->at(k).is_free()) return false;
  }
  return true;
}

CoefficientRing CoefficientRing::integers() { return {"Z", "1", 0, {}, std::nullopt}; }

CoefficientRing load_coefficient_ring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open coefficient file " + path);
  try {
    const Json j = Json::parse(in);
    CoefficientRing c;
    c.name = j.at("name").get<std::string>();
    c.version = j.value("version", "");
    c.window = j.at("window").get<int>();
    if (c.window < 0) throw DataError("negative window");
    for (const auto& g : j.value("free_generators", Json::array())) {
      Generator gen = make_generator(g.at("name").get<std::string>(), g.at("degree").get<int>());
      if (gen.degree <= 0) throw DataError("free generator " + gen.name + " must have positive degree");
      if (g.value("laurent", false)) {
        gen.kind = GeneratorKind::Laurent;
        gen.laurent_bound = c.window / gen.degree;
      }
      c.free_generators.push_back(gen);
    }
    if (j.contains("graded_table")) {
      if (!c.free_generators.empty()) throw DataError("give either free_generators or graded_table, not both");
      GradedGroup table(0, c.window);
      for (const auto& [q, g] : j.at("graded_table").items()) table.set(std::stoi(q), group_from_json(g));
      c.graded_table = table;
    }
    const auto unit = c.groups().at(0);
    if (unit.rank() < 1) throw DataError("degree 0 of " + c.name + " does not contain a unit");
    return c;
  } catch (const Json::exception& e) {
    throw DataError(path + ": " + e.what());
  } catch (const std::logic_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

AhssResult ahss_tensor(const GradedGroup& H, const CoefficientRing& coeffs, int min_degree, int max_degree) {
  const bool table = coeffs.graded_table.has_value();
  for (int p = H.min_degree(); p <= H.max_degree(); ++p) {
    if (table && H.at(p).has_odd_torsion()) {
      throw PreconditionError("H_" + std::to_string(p) + " = " + H.at(p).to_string() + " has odd torsion", p);
    }
    if (!table && !H.at(p).is_free()) {
      throw PreconditionError("H_" + std::to_string(p) + " = " + H.at(p).to_string() + " is not free", p);
    }
  }
  const GradedGroup C = coeffs.groups();
  AhssResult out;
  out.groups = GradedGroup(min_degree, max_degree);
  for (int n = min_degree; n <= max_degree; ++n) {
    FinAbGroup sum;
    for (int q = C.min_degree(); q <= C.max_degree(); ++q) {
      const int p = n - q;
      sum = direct_sum(sum, direct_sum(tensor(H.at(p), C.at(q)), tor(H.at(p - 1), C.at(q))));
    }
    out.groups.set(n, sum);
  }
  out.exact_through = C.max_degree() + H.min_degree();
  out.notes.push_back(std::string(table ? "no odd torsion in H" : "H degreewise free") + " on [" +
                      std::to_string(H.min_degree()) + ", " + std::to_string(H.max_degree()) + "]");
  out.notes.push_back("coefficients " + coeffs.name + " known in degrees [" + std::to_string(C.min_degree()) + ", " +
                      std::to_string(C.max_degree()) + "]");
  if (coeffs.min_degree() < 0) {
    out.notes.push_back("periodic coefficients: each degree is infinitely generated; the table is the truncated sum");
  }
  return out;
}

AhssResult ahss_tensor(const RingPresentation& H, const CoefficientRing& coeffs, int min_degree, int max_degree) {
  const int c_min = coeffs.graded_table ? coeffs.graded_table->min_degree() : coeffs.min_degree();
  const GradedGroup groups = H.components(H.min_degree(), max_degree - c_min);
  AhssResult out = ahss_tensor(groups, coeffs, min_degree, max_degree);
  const bool poly_ext = H.relations().empty() &&
                        std::none_of(H.generators().begin(), H.generators().end(),
                                     [](const Generator& g) { return g.kind == GeneratorKind::Laurent; });
  if (poly_ext && !coeffs.graded_table) {
    out.ring = H.tensor_product(coeffs.ring());
    out.notes.push_back("multiplicative: H is polynomial (x) exterior and the coefficients are free");
  } else {
    out.notes.push_back(std::string("no ring attached: ") +
                        (poly_ext ? "coefficients are tabulated" : "H has relations"));
  }
  return out;
}

GradedGroup LoopSpectralSequence::stable_groups() const {
  GradedGroup out(-shift, max_degree);
  for (int k = -shift; k <= max_degree; ++k) out.set(k, stable_group(k));
  return out;
}

std::shared_ptr<const BigradedRing> loop_e2_ring(const SpaceSpec& spec) {
  const RingPresentation base = base_intersection_ring(spec);
  const RingPresentation fiber = loop_fiber_ring(spec);
  std::vector<Bidegree> bidegrees;
  for (const auto& g : base.generators()) bidegrees.push_back({g.degree, 0});
  for (const auto& g : fiber.generators()) bidegrees.push_back({0, g.degree});
  return std::make_shared<BigradedRing>(base.tensor_product(fiber), bidegrees);
}

LoopSpectralSequence build_loop_ss(const SpaceSpec& spec, const std::vector<GeneratorDifferentials>& differentials,
                                   int max_degree) {
  require_supported(spec);
  const int d = spec.dimension();
  const int q_max = max_degree + d + 1;
  const Page serre = serre_e2_trivial(base_homology(spec), loop_fiber_ring(spec).components(0, q_max));

  LoopSpectralSequence out;
  out.spec = spec;
  out.shift = d;
  out.max_degree = max_degree;
  out.e2_ring = loop_e2_ring(spec);

  Page page = attach_ring(shift(serre, {d, 0}), out.e2_ring);
  const int width = page.window().p_max - page.window().p_min;
  for (;;) {
    std::map<std::string, IntPolynomial> values;
    for (const auto& gd : differentials) {
      if (gd.level < 2) throw PreconditionError("generator differentials start on page 2");
      if (gd.level == page.level()) {
        for (const auto& [name, v] : gd.values) values[name] += v;
      }
    }
    if (!values.empty()) page = leibniz_extend(page, values);
    out.sequence.pages.push_back(page);
    if (page.level() > width) break;
    page = turn_page(page);
  }
  return out;
}

std::vector<GeneratorDifferentials> candidate_differentials(const SpaceSpec& spec, int lambda) {
  const auto ring = loop_e2_ring(spec);
  const auto& r = ring->ring;
  if (spec.kind == SpaceSpec::Kind::Sphere) {
    return {{spec.n, {{"x", r.monomial({{"a", 1}, {"x", 2}}, lambda)}}}};
  }
  const int d = projective_step(spec.kind);
  return {{d * spec.n, {{"z", r.monomial({{"c", spec.n}, {"y", 1}}, lambda)}}}};
}

std::vector<SearchOutcome> search_differentials(const SpaceSpec& spec, int max_degree, int lo, int hi) {
  const RingPresentation target = catalog_ring(spec);
  std::vector<SearchOutcome> out;
  for (int lambda = lo; lambda <= hi; ++lambda) {
    SearchOutcome o{lambda, true, ""};
    try {
      const auto ss = build_loop_ss(spec, candidate_differentials(spec, lambda), max_degree);
      for (int k = -ss.shift; k <= max_degree && o.matches; ++k) {
        const auto got = ss.stable_group(k);
        const auto want = target.component(k);
        if (!(got == want)) {
          o.matches = false;
          o.detail = "degree " + std::to_string(k) + ": stable page gives " + got.to_string() + ", ring has " +
                     want.to_string();
        }
      }
    } catch (const CompositionError& e) {
      o.matches = false;
      o.detail = std::string("not a differential: ") + e.what();
    }
    out.push_back(o);
  }
  return out;
}

}  // namespace strtop
