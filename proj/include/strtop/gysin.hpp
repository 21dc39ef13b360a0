#pragma once

#include "strtop/exact_linalg.hpp"
#include "strtop/json_io.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strtop {

/// Simplices per dimension as sorted vertex lists, with boundary matrices
/// boundary[p] : C_p -> C_{p-1} (boundary[0] has zero rows).
struct SimplicialComplex {
  std::vector<std::vector<std::vector<int>>> simplices;
  std::vector<IntMatrix> boundary;

  /// Boundaries from the vertex lists: d[v_0..v_p] = sum (-1)^i [.. v_i omitted ..].
  static SimplicialComplex from_simplices(std::vector<std::vector<std::vector<int>>> simplices);

  int top_dimension() const { return static_cast<int>(simplices.size()) - 1; }
  Eigen::Index count(int p) const {
    return p >= 0 && p <= top_dimension() ? static_cast<Eigen::Index>(simplices[p].size()) : 0;
  }
  /// boundary[p], or a zero matrix of the right shape outside the range.
  IntMatrix boundary_matrix(int p) const;
  Homology homology(int p) const;

  /// Throws std::invalid_argument on shape errors or d o d != 0.
  void validate() const;
};

struct IntersectionCell {
  int cell = 0;
  int sign = 1;
};

using SimplexId = std::pair<int, int>;  // (dimension, index)

struct GysinData {
  SimplicialComplex B;
  SimplicialComplex A;
  int codim = 0;
  std::map<SimplexId, std::vector<IntersectionCell>> intersections;

  void validate() const;
};

/// Raised when an intersection table does not give a chain map; lists the
/// simplices of B where s d != d s.
class GysinError : public std::invalid_argument {
 public:
  GysinError(const std::string& what, std::vector<SimplexId> simplices)
      : std::invalid_argument(what), simplices(std::move(simplices)) {}
  std::vector<SimplexId> simplices;
};

/// maps[p] : C_p(B) -> C_{p-codim}(A).
struct ChainMap {
  int codim = 0;
  std::vector<IntMatrix> maps;
};

ChainMap gysin_chain_map(const GysinData& data);

struct HomologyMap {
  int degree = 0;  // source degree p; the target is p - codim
  FinAbGroup source;
  FinAbGroup target;
  /// Target generators x source generators, on the normal-form bases.
  IntMatrix matrix;
};

std::vector<HomologyMap> induced_homology_map(const ChainMap& s, const GysinData& data);

/// {"B": {"simplices": [[[v..], ..], ..], "boundary": optional}, "A": {..}, "codim": d,
///  "intersections": {"p:i": [{"cell": j, "sign": 1}]}}
GysinData gysin_from_json(const Json& j);
Json to_json(const GysinData& data);
GysinData load_gysin_data(const std::string& path);

}  // namespace strtop
