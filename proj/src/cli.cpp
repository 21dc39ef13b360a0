#include "strtop/cli.hpp"

#include "strtop/gysin.hpp"
#include "strtop/json_io.hpp"
#include "strtop/serre_string.hpp"
#include "strtop/sullivan.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <sstream>

namespace strtop {

namespace {

class FileNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw FileNotFound("file not found: " + path);
}

struct Options {
  int max_degree = 20;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

std::string truncation_stamp(int max_degree) {
  return "truncated: degrees above " + std::to_string(max_degree) + " are not shown";
}

// Rows "HH_k  H_{k+d}  group" over [lo, hi].
void print_graded_table(std::ostream& out, const std::vector<std::pair<int, FinAbGroup>>& rows, int shift) {
  out << pad("HH_k", 8) << pad("H_{k+" + std::to_string(shift) + "}", 10) << "group\n";
  for (const auto& [k, g] : rows) out << pad(std::to_string(k), 8) << pad(std::to_string(k + shift), 10) << g.to_string() << "\n";
}

Json graded_rows_json(const std::vector<std::pair<int, FinAbGroup>>& rows, int shift) {
  Json arr = Json::array();
  for (const auto& [k, g] : rows) arr.push_back({{"hh_degree", k}, {"h_degree", k + shift}, {"group", to_json(g)}});
  return arr;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " must be an integer, got '" + s + "'");
}

SpaceSpec space_from_words(const std::vector<std::string>& words) {
  if (words.size() == 2 && words[0] == "sphere") return SpaceSpec::parse("sphere:" + words[1]);
  if (words.size() == 3 && words[0] == "projective") {
    if (words[1] != "C" && words[1] != "H") throw PreconditionError("unknown field " + words[1] + " (use C or H)");
    return SpaceSpec::parse(words[1] + "P:" + std::to_string(parse_int(words[2], "N")));
  }
  throw UsageError("expected 'sphere N' or 'projective C|H N'");
}

void cmd_ring(const std::vector<std::string>& words, const Options& o, std::ostream& out) {
  const SpaceSpec spec = space_from_words(words);
  const RingPresentation ring = catalog_ring(spec);
  const int d = spec.dimension();
  std::vector<std::pair<int, FinAbGroup>> rows;
  for (int k = -d; k <= o.max_degree; ++k) rows.push_back({k, ring.component(k)});
  if (o.json()) {
    out << Json{{"space", spec.name()},
                {"ring", to_json(ring)},
                {"shift", d},
                {"max_degree", o.max_degree},
                {"truncated", true},
                {"groups", graded_rows_json(rows, d)}}
               .dump(2)
        << "\n";
    return;
  }
  out << "HH_*(L" << spec.name() << ") = " << ring.to_string() << "\n";
  out << "shift: HH_k = H_{k+" << d << "}\n" << truncation_stamp(o.max_degree) << "\n";
  print_graded_table(out, rows, d);
}

std::vector<GeneratorDifferentials> chosen_differentials(const SpaceSpec& spec, std::optional<int> lambda) {
  if (!lambda) return {};
  return candidate_differentials(spec, *lambda);
}

void cmd_ss(const std::vector<std::string>& words, const Options& o, bool pages, bool search, std::optional<int> lambda,
            std::ostream& out) {
  const SpaceSpec spec = space_from_words(words);
  Json j = {{"space", spec.name()}, {"shift", spec.dimension()}, {"max_degree", o.max_degree}, {"truncated", true}};
  std::ostringstream text;
  if (search) {
    const auto outcomes = search_differentials(spec, o.max_degree);
    Json arr = Json::array();
    text << "differential search, lambda in [-3, 3]:\n";
    for (const auto& s : outcomes) {
      arr.push_back({{"lambda", s.lambda}, {"matches", s.matches}, {"detail", s.detail}});
      text << "  lambda = " << std::setw(2) << s.lambda << "  " << (s.matches ? "matches the catalog ring" : s.detail)
           << "\n";
      if (s.matches && !lambda && s.lambda > 0) lambda = s.lambda;
    }
    j["search"] = arr;
  }
  const auto ss = build_loop_ss(spec, chosen_differentials(spec, lambda), o.max_degree);
  const auto ring = catalog_ring(spec);
  j["lambda"] = lambda ? Json(*lambda) : Json(nullptr);
  text << "generator differential: "
       << (lambda ? (spec.kind == SpaceSpec::Kind::Sphere ? "d(x) = " : "d(z) = ") + std::to_string(*lambda) +
                        (spec.kind == SpaceSpec::Kind::Sphere ? " a x^2" : " c^n y")
                  : std::string("none"))
       << "\n";
  text << "bidegrees are shifted by (" << spec.dimension() << ",0): HH_k = H_{k+" << spec.dimension() << "}\n";
  text << truncation_stamp(o.max_degree) << "\n";
  if (pages) {
    Json arr = Json::array();
    for (const auto& E : ss.sequence.pages) {
      arr.push_back(page_summary(E));
      text << E.to_string();
    }
    j["pages"] = arr;
  }
  std::vector<std::pair<int, FinAbGroup>> rows;
  Json cmp = Json::array();
  bool all = true;
  text << pad("HH_k", 8) << pad("H_{k+" + std::to_string(ss.shift) + "}", 10) << pad("stable page", 22) << "ring\n";
  for (int k = -ss.shift; k <= o.max_degree; ++k) {
    const auto got = ss.stable_group(k), want = ring.component(k);
    all = all && got == want;
    cmp.push_back({{"hh_degree", k}, {"h_degree", k + ss.shift}, {"stable", to_json(got)}, {"ring", to_json(want)}});
    text << pad(std::to_string(k), 8) << pad(std::to_string(k + ss.shift), 10) << pad(got.to_string(), 22)
         << want.to_string() << (got == want ? "" : "   differs") << "\n";
  }
  text << (all ? "stable page agrees with the catalog ring\n" : "stable page differs from the catalog ring\n");
  j["stable"] = cmp;
  j["agrees"] = all;
  if (o.json()) {
    out << j.dump(2) << "\n";
  } else {
    out << "loop spectral sequence of " << spec.name() << "\n" << text.str();
  }
}

Json betti_json(const std::vector<long>& b) { return Json(b); }

void print_betti(std::ostream& out, const std::string& label, const std::vector<long>& b) {
  out << label;
  for (long x : b) out << " " << x;
  out << "\n";
}

void cmd_rational(const std::vector<std::string>& words, const Options& o, std::ostream& out) {
  if (words.empty()) throw UsageError("expected 'loop-sphere N' or 'loop-bundle K N'");
  if (words[0] == "loop-sphere" && words.size() == 2) {
    const int n = parse_int(words[1], "N");
    const SullivanAlgebra model = sphere_model(n);
    const SullivanAlgebra loop = vigue_sullivan_loop(model);
    const auto b = dga_cohomology(loop, o.max_degree);
    if (o.json()) {
      out << Json{{"space", "S^" + std::to_string(n)},
                  {"model", model.to_string()},
                  {"loop_model", loop.to_string()},
                  {"max_degree", o.max_degree},
                  {"truncated", true},
                  {"betti", betti_json(b)}}
                 .dump(2)
          << "\n";
      return;
    }
    out << "model of S^" << n << ": " << model.to_string() << "\n";
    out << "loop model: " << loop.to_string() << "\n" << truncation_stamp(o.max_degree) << "\n";
    out << "rational Betti numbers of LS^" << n << " (H grading, degree 0 first):\n";
    print_betti(out, " ", b);
    return;
  }
  if (words[0] == "loop-bundle" && words.size() == 3) {
    const int k = parse_int(words[1], "K"), n = parse_int(words[2], "N");
    const SullivanAlgebra model = bundle_model(k, n);
    const auto r = rational_loop_bundle(k, n, o.max_degree);
    const bool equal = r.bundle_betti == r.product_betti;
    if (o.json()) {
      auto check = [](const HypothesisCheck& h) {
        return Json{{"hypothesis", h.hypothesis}, {"status", to_string(h.status)}, {"detail", h.detail}};
      };
      out << Json{{"fiber", k},
                  {"base", n},
                  {"model", model.to_string()},
                  {"max_degree", o.max_degree},
                  {"truncated", true},
                  {"bundle_betti", betti_json(r.bundle_betti)},
                  {"product_betti", betti_json(r.product_betti)},
                  {"equal", equal},
                  {"checks", Json::array({check(r.torsion_free), check(r.integral_lift)})}}
                 .dump(2)
          << "\n";
      return;
    }
    out << "model of E (S^" << k << " over S^" << n << "): " << model.to_string() << "\n";
    out << truncation_stamp(o.max_degree) << "\n";
    print_betti(out, "LE:              ", r.bundle_betti);
    print_betti(out, "L(S^k x S^n):    ", r.product_betti);
    out << (equal ? "tables agree\n" : "tables differ\n");
    for (const auto& h : {r.torsion_free, r.integral_lift}) {
      out << h.hypothesis << ": " << to_string(h.status) << " (" << h.detail << ")\n";
    }
    return;
  }
  throw UsageError("expected 'loop-sphere N' or 'loop-bundle K N'");
}

void cmd_ahss(const std::string& space, const std::string& coeff_path, const Options& o, std::ostream& out) {
  const SpaceSpec spec = SpaceSpec::parse(space);
  require_file(coeff_path);
  const CoefficientRing coeffs = load_coefficient_ring(coeff_path);
  const RingPresentation H = catalog_ring(spec);
  const int d = spec.dimension();
  const AhssResult r = ahss_tensor(H, coeffs, -d, o.max_degree);
  std::vector<std::pair<int, FinAbGroup>> rows;
  for (int k = -d; k <= o.max_degree; ++k) rows.push_back({k, r.groups.at(k)});
  if (o.json()) {
    Json j = {{"space", spec.name()},
              {"coefficients", coeffs.name},
              {"coefficients_version", coeffs.version},
              {"shift", d},
              {"max_degree", o.max_degree},
              {"exact_through", r.exact_through},
              {"groups", graded_rows_json(rows, d)},
              {"notes", r.notes}};
    j["ring"] = r.ring ? to_json(*r.ring) : Json(nullptr);
    out << j.dump(2) << "\n";
    return;
  }
  out << coeffs.name << " (version " << coeffs.version << ") of L" << spec.name() << ", HH_k = H_{k+" << d << "}\n";
  out << "exact through HH degree " << r.exact_through << "; " << truncation_stamp(o.max_degree) << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  if (r.ring) out << "ring: " << r.ring->to_string() << "\n";
  print_graded_table(out, rows, d);
}

void cmd_gysin(const std::string& path, const Options& o, std::ostream& out) {
  require_file(path);
  const GysinData data = load_gysin_data(path);
  const ChainMap s = gysin_chain_map(data);
  const auto maps = induced_homology_map(s, data);
  if (o.json()) {
    Json chain = Json::array(), homology = Json::array();
    for (std::size_t p = 0; p < s.maps.size(); ++p) chain.push_back({{"degree", p}, {"matrix", matrix_to_json(s.maps[p])}});
    for (const auto& m : maps) {
      homology.push_back({{"degree", m.degree},
                          {"source", to_json(m.source)},
                          {"target", to_json(m.target)},
                          {"matrix", matrix_to_json(m.matrix)}});
    }
    out << Json{{"codim", s.codim}, {"chain_map", chain}, {"homology", homology}, {"chain_map_verified", true}}.dump(2)
        << "\n";
    return;
  }
  out << "cellular Gysin map C_p(B) -> C_{p-" << s.codim << "}(A); s d = d s verified\n";
  for (const auto& m : maps) {
    out << "H_" << m.degree << "(B) = " << m.source.to_string() << " -> H_" << m.degree - s.codim
        << "(A) = " << m.target.to_string() << ":";
    if (m.matrix.size() == 0) {
      out << " 0\n";
      continue;
    }
    for (Eigen::Index i = 0; i < m.matrix.rows(); ++i) {
      out << (i ? "; " : " [");
      for (Eigen::Index k = 0; k < m.matrix.cols(); ++k) out << (k ? " " : "") << m.matrix(i, k);
    }
    out << "]\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loop homology rings, spectral sequences, rational loop models, AHSS tensors and cellular Gysin maps"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "Largest degree shown")->check(CLI::Range(0, 200));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::vector<std::string> ring_words, ss_words, rational_words;
  auto* ring = app.add_subcommand("ring", "Loop homology ring of a sphere or projective space");
  ring->add_option("space", ring_words, "sphere N | projective C|H N")->required();
  add_common(ring);

  bool pages = false, search = false;
  std::optional<int> lambda;
  auto* ss = app.add_subcommand("ss", "Loop spectral sequence in the shifted grading");
  ss->add_option("space", ss_words, "sphere N | projective C|H N")->required();
  ss->add_flag("--pages", pages, "Print every page");
  ss->add_flag("--search-differentials", search, "Search generator differentials with lambda in [-3, 3]");
  ss->add_option("--lambda", lambda, "Generator differential coefficient");
  add_common(ss);

  auto* rational = app.add_subcommand("rational", "Rational loop models");
  rational->add_option("what", rational_words, "loop-sphere N | loop-bundle K N")->required();
  add_common(rational);

  std::string space, coeffs;
  auto* ahss = app.add_subcommand("ahss", "Generalized homology of a loop space by the AHSS tensor formula");
  ahss->add_option("--space", space, "sphere:N, CP:N or HP:N")->required();
  ahss->add_option("--coeffs", coeffs, "Coefficient ring file")->required();
  add_common(ahss);

  std::string input;
  auto* gysin = app.add_subcommand("gysin", "Cellular Gysin map from a fixture");
  gysin->add_option("--input", input, "Fixture file")->required();
  add_common(gysin);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "strtop: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*ring) cmd_ring(ring_words, o, out);
    if (*ss) cmd_ss(ss_words, o, pages, search, lambda, out);
    if (*rational) cmd_rational(rational_words, o, out);
    if (*ahss) cmd_ahss(space, coeffs, o, out);
    if (*gysin) cmd_gysin(input, o, out);
  } catch (const UsageError& e) {
    err << "strtop: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileNotFound& e) {
    err << "strtop: " << e.what() << "\n";
    return kExitFileNotFound;
  } catch (const GysinError& e) {
    err << "strtop: invalid data: " << e.what() << "\n";
    return kExitInvalidData;
  } catch (const DataError& e) {
    err << "strtop: invalid data: " << e.what() << "\n";
    return kExitInvalidData;
  } catch (const PreconditionError& e) {
    err << "strtop: precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "strtop: precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const CompositionError& e) {
    err << "strtop: precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "strtop: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace strtop
