#include "strtop/json_io.hpp"

namespace strtop {

Json integer_to_json(const Integer& x) {
  if (auto v = to_int64(x)) return *v;
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Json::type_error::create(302, "expected an integer", &j);
}

Json to_json(const FinAbGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion()) torsion.push_back(integer_to_json(t));
  return {{"rank", g.rank()}, {"torsion", torsion}};
}

FinAbGroup group_from_json(const Json& j) {
  std::vector<Integer> torsion;
  for (const auto& t : j.at("torsion")) torsion.push_back(integer_from_json(t));
  const auto rank = j.at("rank").get<long long>();
  if (rank < 0) throw std::invalid_argument("negative rank");
  return FinAbGroup(static_cast<std::size_t>(rank), torsion);
}

Json to_json(const GradedGroup& g) {
  Json groups = Json::object();
  for (int k = g.min_degree(); k <= g.max_degree(); ++k) {
    if (!g.at(k).is_trivial()) groups[std::to_string(k)] = to_json(g.at(k));
  }
  return {{"min_degree", g.min_degree()}, {"max_degree", g.max_degree()}, {"groups", groups}};
}

GradedGroup graded_group_from_json(const Json& j) {
  GradedGroup g(j.at("min_degree").get<int>(), j.at("max_degree").get<int>());
  for (const auto& [k, v] : j.at("groups").items()) g.set(std::stoi(k), group_from_json(v));
  return g;
}

namespace {

const char* kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Exterior:
      return "exterior";
    case GeneratorKind::Polynomial:
      return "polynomial";
    case GeneratorKind::Laurent:
      return "laurent";
  }
  return "polynomial";
}

GeneratorKind kind_from_name(const std::string& s) {
  if (s == "exterior") return GeneratorKind::Exterior;
  if (s == "polynomial") return GeneratorKind::Polynomial;
  if (s == "laurent") return GeneratorKind::Laurent;
  throw std::invalid_argument("unknown generator kind " + s);
}

}  // namespace

Json to_json(const RingPresentation& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators()) {
    Json jg = {{"name", g.name}, {"degree", g.degree}, {"kind", kind_name(g.kind)}};
    if (g.kind == GeneratorKind::Laurent) jg["laurent_bound"] = g.laurent_bound;
    gens.push_back(jg);
  }
  Json rels = Json::array();
  for (const auto& rel : r.relations()) {
    Json terms = Json::array();
    for (const auto& [e, c] : rel.terms()) terms.push_back({{"exponent", e}, {"coefficient", integer_to_json(c)}});
    rels.push_back(terms);
  }
  return {{"coefficients", r.prime()}, {"generators", gens}, {"relations", rels}, {"text", r.to_string()}};
}

RingPresentation ring_from_json(const Json& j) {
  std::vector<Generator> gens;
  for (const auto& jg : j.at("generators")) {
    Generator g{jg.at("name").get<std::string>(), jg.at("degree").get<int>(),
                kind_from_name(jg.at("kind").get<std::string>()), jg.value("laurent_bound", 0)};
    gens.push_back(g);
  }
  std::vector<IntPolynomial> rels;
  for (const auto& jr : j.at("relations")) {
    IntPolynomial p;
    for (const auto& t : jr) p.add_term(t.at("exponent").get<Exponent>(), integer_from_json(t.at("coefficient")));
    rels.push_back(p);
  }
  return RingPresentation(std::move(gens), std::move(rels), j.value("coefficients", 0));
}

Json matrix_to_json(const IntMatrix& M) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(integer_to_json(M(i, k)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  IntMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j.at(i).size()) != cols) throw std::invalid_argument("ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) M(i, k) = integer_from_json(j.at(i).at(k));
  }
  return M;
}

Json page_summary(const Page& E) {
  const auto& w = E.window();
  Json entries = Json::object();
  for (const auto& b : E.support()) entries[b.to_string()] = to_json(E.group(b));
  Json diffs = Json::array();
  for (const auto& [s, lift] : E.differential_lifts()) {
    IntMatrix M = E.differential_on_generators(s);
    if (M.size() == 0 || M.isZero()) continue;
    diffs.push_back({{"source", s.to_string()}, {"target", E.target(s).to_string()}, {"matrix", matrix_to_json(M)}});
  }
  return {{"level", E.level()},
          {"window", {{"p_min", w.p_min}, {"p_max", w.p_max}, {"q_min", w.q_min}, {"q_max", w.q_max}}},
          {"entries", entries},
          {"differentials", diffs}};
}

}  // namespace strtop
