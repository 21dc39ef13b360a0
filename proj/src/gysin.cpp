#include "strtop/gysin.hpp"

#include "strtop/serre_string.hpp"

#include <fstream>

namespace strtop {

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::vector<std::vector<int>>> simplices) {
  SimplicialComplex K;
  for (auto& level : simplices) {
    for (auto& s : level) std::sort(s.begin(), s.end());
  }
  K.simplices = std::move(simplices);
  K.boundary.push_back(IntMatrix::Zero(0, K.count(0)));
  for (int p = 1; p <= K.top_dimension(); ++p) {
    std::map<std::vector<int>, Eigen::Index> faces;
    for (std::size_t i = 0; i < K.simplices[p - 1].size(); ++i) faces[K.simplices[p - 1][i]] = static_cast<Eigen::Index>(i);
    IntMatrix D = IntMatrix::Zero(K.count(p - 1), K.count(p));
    for (std::size_t j = 0; j < K.simplices[p].size(); ++j) {
      const auto& s = K.simplices[p][j];
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<int> face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto it = faces.find(face);
        if (it == faces.end()) {
          throw std::invalid_argument("face of simplex " + std::to_string(p) + ":" + std::to_string(j) +
                                      " is missing from dimension " + std::to_string(p - 1));
        }
        D(it->second, static_cast<Eigen::Index>(j)) = i % 2 == 0 ? 1 : -1;
      }
    }
    K.boundary.push_back(D);
  }
  return K;
}

IntMatrix SimplicialComplex::boundary_matrix(int p) const {
  if (p >= 1 && p <= top_dimension()) return boundary[p];
  return IntMatrix::Zero(count(p - 1), count(p));
}

Homology SimplicialComplex::homology(int p) const { return homology_at(boundary_matrix(p + 1), boundary_matrix(p)); }

void SimplicialComplex::validate() const {
  if (boundary.size() != simplices.size()) throw std::invalid_argument("one boundary matrix per dimension is required");
  for (int p = 0; p <= top_dimension(); ++p) {
    const auto& D = boundary[p];
    if (D.rows() != count(p - 1) || D.cols() != count(p)) {
      throw std::invalid_argument("boundary matrix in dimension " + std::to_string(p) + " has the wrong shape");
    }
    if (p >= 2 && !(boundary[p - 1] * D).isZero()) {
      throw std::invalid_argument("boundary of boundary is not zero in dimension " + std::to_string(p));
    }
  }
}

void GysinData::validate() const {
  B.validate();
  A.validate();
  if (codim < 0) throw std::invalid_argument("negative codimension");
  for (const auto& [id, cells] : intersections) {
    const auto [p, i] = id;
    const std::string name = std::to_string(p) + ":" + std::to_string(i);
    if (i < 0 || i >= B.count(p)) throw std::invalid_argument("intersection entry for unknown simplex " + name);
    for (const auto& c : cells) {
      if (c.cell < 0 || c.cell >= A.count(p - codim)) {
        throw std::invalid_argument("simplex " + name + " meets cell " + std::to_string(c.cell) +
                                    ", which is not a " + std::to_string(p - codim) + "-simplex of A");
      }
    }
  }
}

ChainMap gysin_chain_map(const GysinData& data) {
  data.validate();
  ChainMap s{data.codim, {}};
  for (int p = 0; p <= data.B.top_dimension(); ++p) {
    IntMatrix M = IntMatrix::Zero(data.A.count(p - data.codim), data.B.count(p));
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      auto it = data.intersections.find({p, static_cast<int>(j)});
      if (it == data.intersections.end()) continue;
      for (const auto& c : it->second) M(c.cell, j) += c.sign;
    }
    s.maps.push_back(M);
  }

  std::vector<SimplexId> bad;
  for (int p = 1; p <= data.B.top_dimension(); ++p) {
    const IntMatrix lhs = s.maps[p - 1] * data.B.boundary_matrix(p);
    const IntMatrix rhs = data.A.boundary_matrix(p - data.codim) * s.maps[p];
    for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
      if (lhs.col(j) != rhs.col(j)) bad.push_back({p, static_cast<int>(j)});
    }
  }
  if (!bad.empty()) {
    std::string list;
    for (const auto& [p, i] : bad) list += (list.empty() ? "" : ", ") + std::to_string(p) + ":" + std::to_string(i);
    throw GysinError("intersection table is inconsistent: s d != d s on simplices " + list, bad);
  }
  return s;
}

std::vector<HomologyMap> induced_homology_map(const ChainMap& s, const GysinData& data) {
  std::vector<HomologyMap> out;
  for (int p = 0; p < static_cast<int>(s.maps.size()); ++p) {
    const Homology src = data.B.homology(p);
    const Homology dst = data.A.homology(p - s.codim);
    HomologyMap m{p, src.group, dst.group, IntMatrix::Zero(dst.basis_lift.cols(), src.basis_lift.cols())};
    for (Eigen::Index j = 0; j < src.basis_lift.cols(); ++j) {
      const IntVector image = s.maps[p] * src.basis_lift.col(j);
      if (dst.basis_lift.cols() == 0) continue;
      m.matrix.col(j) = *dst.module.coordinates(image);
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

SimplicialComplex complex_from_json(const Json& j) {
  auto simplices = j.at("simplices").get<std::vector<std::vector<std::vector<int>>>>();
  SimplicialComplex K = SimplicialComplex::from_simplices(simplices);
  if (j.contains("boundary")) {
    K.boundary.clear();
    K.boundary.push_back(IntMatrix::Zero(0, K.count(0)));
    for (const auto& m : j.at("boundary")) K.boundary.push_back(matrix_from_json(m));
  }
  return K;
}

Json complex_to_json(const SimplicialComplex& K) {
  Json j;
  j["simplices"] = K.simplices;
  return j;
}

}  // namespace

GysinData gysin_from_json(const Json& j) {
  GysinData data;
  data.B = complex_from_json(j.at("B"));
  data.A = complex_from_json(j.at("A"));
  data.codim = j.at("codim").get<int>();
  const Json table = j.value("intersections", Json::object());
  for (const auto& [key, cells] : table.items()) {
    const auto colon = key.find(':');
    if (colon == std::string::npos) throw DataError("intersection key " + key + " must look like p:i");
    const SimplexId id{std::stoi(key.substr(0, colon)), std::stoi(key.substr(colon + 1))};
    for (const auto& c : cells) data.intersections[id].push_back({c.at("cell").get<int>(), c.value("sign", 1)});
  }
  return data;
}

Json to_json(const GysinData& data) {
  Json j;
  j["B"] = complex_to_json(data.B);
  j["A"] = complex_to_json(data.A);
  j["codim"] = data.codim;
  Json cells = Json::object();
  for (const auto& [id, list] : data.intersections) {
    Json arr = Json::array();
    for (const auto& c : list) arr.push_back({{"cell", c.cell}, {"sign", c.sign}});
    cells[std::to_string(id.first) + ":" + std::to_string(id.second)] = arr;
  }
  j["intersections"] = cells;
  return j;
}

GysinData load_gysin_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  try {
    return gysin_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw DataError(path + ": " + e.what());
  } catch (const std::logic_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

}  // namespace strtop
