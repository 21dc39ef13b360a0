// Writes the bundled Gysin fixtures. A is a level set of B: it meets each
// crossed edge in one point and each crossed triangle in one segment.

#include "strtop/gysin.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <set>

using namespace strtop;

namespace {

using Triangle = std::vector<int>;
// +1 if the edge u -> v crosses A from the negative to the positive side,
// -1 for the opposite direction, 0 if it misses A.
using Crossing = std::function<int(int, int)>;

GysinData level_set(const std::vector<Triangle>& triangles, const Crossing& crossing) {
  std::set<std::vector<int>> vertices, edges;
  std::set<std::vector<int>> faces;
  for (Triangle t : triangles) {
    std::sort(t.begin(), t.end());
    faces.insert(t);
    for (int a = 0; a < 3; ++a) {
      vertices.insert({t[a]});
      for (int b = a + 1; b < 3; ++b) edges.insert({t[a], t[b]});
    }
  }
  GysinData data;
  data.codim = 1;
  data.B = SimplicialComplex::from_simplices({{vertices.begin(), vertices.end()},
                                              {edges.begin(), edges.end()},
                                              {faces.begin(), faces.end()}});

  std::map<int, int> point_of_edge;
  std::map<int, int> edge_sign;
  const auto& E = data.B.simplices[1];
  for (std::size_t i = 0; i < E.size(); ++i) {
    const int c = crossing(E[i][0], E[i][1]);
    if (c == 0) continue;
    const int point = static_cast<int>(point_of_edge.size());
    point_of_edge[static_cast<int>(i)] = point;
    edge_sign[static_cast<int>(i)] = c;
    data.intersections[{1, static_cast<int>(i)}] = {{point, c}};
  }

  std::vector<std::vector<int>> points, segments;
  for (std::size_t p = 0; p < point_of_edge.size(); ++p) points.push_back({static_cast<int>(p)});
  std::vector<std::pair<int, int>> segment_of_face;
  const IntMatrix& D = data.B.boundary[2];
  for (Eigen::Index f = 0; f < D.cols(); ++f) {
    // s(d f) as a 0-chain on A.
    std::map<int, int> chain;
    for (Eigen::Index e = 0; e < D.rows(); ++e) {
      if (D(e, f) == 0 || !point_of_edge.count(static_cast<int>(e))) continue;
      chain[point_of_edge[static_cast<int>(e)]] += static_cast<int>(*to_int64(D(e, f))) * edge_sign[static_cast<int>(e)];
    }
    std::erase_if(chain, [](const auto& kv) { return kv.second == 0; });
    if (chain.empty()) continue;
    if (chain.size() != 2) throw std::runtime_error("triangle crosses A in more than one segment");
    const int a = chain.begin()->first, b = chain.rbegin()->first;
    const int sign = chain[b] == 1 && chain[a] == -1 ? 1 : -1;
    if (chain[b] != sign || chain[a] != -sign) throw std::runtime_error("crossing signs do not bound a segment");
    data.intersections[{2, static_cast<int>(f)}] = {{static_cast<int>(segments.size()), sign}};
    segments.push_back({a, b});
  }
  data.A = SimplicialComplex::from_simplices({points, segments});
  return data;
}

// Torus on an m x n grid, vertex (i, j) = i * n + j; A is the meridian x = 1/2.
GysinData torus_meridian(int m, int n) {
  auto id = [&](int i, int j) { return (i % m) * n + (j % n); };
  std::vector<Triangle> triangles;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return level_set(triangles, [n](int u, int v) {
    const int iu = u / n, iv = v / n;
    if (iu == 0 && iv == 1) return 1;
    if (iu == 1 && iv == 0) return -1;
    return 0;
  });
}

// Suspension of a k-gon with the ring above the equator: N = 0, S = 1, ring 2..k+1.
GysinData sphere_equator(int k) {
  std::vector<Triangle> triangles;
  for (int i = 0; i < k; ++i) {
    const int a = 2 + i, b = 2 + (i + 1) % k;
    triangles.push_back({0, a, b});
    triangles.push_back({1, a, b});
  }
  return level_set(triangles, [](int u, int v) {
    const int su = u == 1 ? -1 : 1, sv = v == 1 ? -1 : 1;
    return (sv - su) / 2;
  });
}

void write(const std::string& path, const GysinData& data) {
  gysin_chain_map(data);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(data).dump() << "\n";
  std::cout << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Writes the bundled torus/meridian and sphere/equator fixtures"};
  std::string dir = "data/fixtures";
  app.add_option("--out", dir, "Output directory");
  CLI11_PARSE(app, argc, argv);
  try {
    write(dir + "/torus_meridian_3x3.json", torus_meridian(3, 3));
    write(dir + "/torus_meridian_4x5.json", torus_meridian(4, 5));
    write(dir + "/sphere_equator_3.json", sphere_equator(3));
    write(dir + "/sphere_equator_5.json", sphere_equator(5));
  } catch (const std::exception& e) {
    std::cerr << "make_fixtures: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
