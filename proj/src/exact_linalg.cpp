#include "strtop/exact_linalg.hpp"

#include <algorithm>

namespace strtop {

namespace {

IntMatrix identity(Eigen::Index n) { return IntMatrix::Identity(n, n); }

class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& A) {
    r_.D = A;
    r_.U = identity(A.rows());
    r_.U_inv = identity(A.rows());
    r_.V = identity(A.cols());
    r_.V_inv = identity(A.cols());
  }

  SnfResult run() {
    auto& D = r_.D;
    const Eigen::Index limit = std::min(D.rows(), D.cols());
    Eigen::Index t = 0;
    while (t < limit) {
      auto pivot = smallest_in_block(t);
      if (!pivot) break;
      row_swap(t, pivot->first);
      col_swap(t, pivot->second);
      for (;;) {
        bool residue = false;
        for (Eigen::Index i = t + 1; i < D.rows(); ++i) {
          if (D(i, t) == 0) continue;
          row_addmul(i, t, Integer(D(i, t) / D(t, t)));
          residue = residue || D(i, t) != 0;
        }
        for (Eigen::Index j = t + 1; j < D.cols(); ++j) {
          if (D(t, j) == 0) continue;
          col_addmul(j, t, Integer(D(t, j) / D(t, t)));
          residue = residue || D(t, j) != 0;
        }
        if (residue) {
          repivot_cross(t);
          continue;
        }
        auto bad = first_non_multiple(t);
        if (!bad) break;
        row_addmul(t, *bad, Integer(-1));
      }
      if (D(t, t) < 0) row_negate(t);
      ++t;
    }
    r_.rank = t;
    return std::move(r_);
  }

 private:
  std::optional<std::pair<Eigen::Index, Eigen::Index>> smallest_in_block(Eigen::Index t) const {
    const auto& D = r_.D;
    std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
    Integer best_abs;
    for (Eigen::Index i = t; i < D.rows(); ++i) {
      for (Eigen::Index j = t; j < D.cols(); ++j) {
        if (D(i, j) == 0) continue;
        Integer a = abs(D(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
        }
      }
    }
    return best;
  }

  // Moves the smallest nonzero entry of row t / column t onto (t, t).
  void repivot_cross(Eigen::Index t) {
    auto& D = r_.D;
    Eigen::Index bi = t, bj = t;
    Integer best = abs(D(t, t));
    for (Eigen::Index i = t + 1; i < D.rows(); ++i) {
      if (D(i, t) != 0 && abs(D(i, t)) < best) {
        best = abs(D(i, t));
        bi = i;
        bj = t;
      }
    }
    for (Eigen::Index j = t + 1; j < D.cols(); ++j) {
      if (D(t, j) != 0 && abs(D(t, j)) < best) {
        best = abs(D(t, j));
        bi = t;
        bj = j;
      }
    }
    row_swap(t, bi);
    col_swap(t, bj);
  }

  std::optional<Eigen::Index> first_non_multiple(Eigen::Index t) const {
    const auto& D = r_.D;
    for (Eigen::Index i = t + 1; i < D.rows(); ++i) {
      for (Eigen::Index j = t + 1; j < D.cols(); ++j) {
        if (D(i, j) % D(t, t) != 0) return i;
      }
    }
    return std::nullopt;
  }

  // row_i -= q * row_t
  void row_addmul(Eigen::Index i, Eigen::Index t, const Integer& q) {
    if (q == 0) return;
    r_.D.row(i) -= r_.D.row(t) * q;
    r_.U.row(i) -= r_.U.row(t) * q;
    r_.U_inv.col(t) += r_.U_inv.col(i) * q;
  }

  // col_j -= q * col_t
  void col_addmul(Eigen::Index j, Eigen::Index t, const Integer& q) {
    if (q == 0) return;
    r_.D.col(j) -= r_.D.col(t) * q;
    r_.V.col(j) -= r_.V.col(t) * q;
    r_.V_inv.row(t) += r_.V_inv.row(j) * q;
  }

  void row_swap(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    r_.D.row(a).swap(r_.D.row(b));
    r_.U.row(a).swap(r_.U.row(b));
    r_.U_inv.col(a).swap(r_.U_inv.col(b));
  }

  void col_swap(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    r_.D.col(a).swap(r_.D.col(b));
    r_.V.col(a).swap(r_.V.col(b));
    r_.V_inv.row(a).swap(r_.V_inv.row(b));
  }

  void row_negate(Eigen::Index i) {
    r_.D.row(i) *= Integer(-1);
    r_.U.row(i) *= Integer(-1);
    r_.U_inv.col(i) *= Integer(-1);
  }

  SnfResult r_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& A) { return SnfWorker(A).run(); }

IntMatrix kernel_basis(const IntMatrix& A) {
  auto snf = smith_normal_form(A);
  return snf.V.rightCols(A.cols() - snf.rank);
}

IntMatrix lattice_basis(const IntMatrix& gens) {
  if (gens.cols() == 0) return IntMatrix(gens.rows(), 0);
  auto snf = smith_normal_form(gens);
  IntMatrix gv = gens * snf.V;
  return gv.leftCols(snf.rank);
}

Eigen::Index rational_rank(const IntMatrix& A) {
  IntMatrix M = A;
  Eigen::Index rank = 0;
  Integer prev = 1;
  for (Eigen::Index c = 0; c < M.cols() && rank < M.rows(); ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < M.rows(); ++i) {
      if (M(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    M.row(rank).swap(M.row(pivot));
    for (Eigen::Index i = rank + 1; i < M.rows(); ++i) {
      for (Eigen::Index j = c + 1; j < M.cols(); ++j) {
        M(i, j) = (M(rank, c) * M(i, j) - M(i, c) * M(rank, j)) / prev;
      }
      M(i, c) = 0;
    }
    prev = M(rank, c);
    ++rank;
  }
  return rank;
}

Eigen::Index rational_rank(const RatMatrix& A) {
  IntMatrix M(A.rows(), A.cols());
  for (Eigen::Index j = 0; j < A.cols(); ++j) {
    Integer den = 1;
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      den = lcm(den, Integer(boost::multiprecision::denominator(A(i, j))));
    }
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      Rational scaled = A(i, j) * Rational(den);
      M(i, j) = boost::multiprecision::numerator(scaled);
    }
  }
  return rational_rank(M);
}

IntMatrix hcat(const IntMatrix& A, const IntMatrix& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("hcat: row count mismatch");
  IntMatrix out(A.rows(), A.cols() + B.cols());
  out.leftCols(A.cols()) = A;
  out.rightCols(B.cols()) = B;
  return out;
}

LatticeCoordinates::LatticeCoordinates(IntMatrix basis)
    : basis_(std::move(basis)), snf_(smith_normal_form(basis_)) {
  if (snf_.rank != basis_.cols()) {
    throw std::invalid_argument("LatticeCoordinates: basis is not of full column rank");
  }
}

std::optional<IntVector> LatticeCoordinates::solve(const IntVector& z) const {
  if (z.size() != basis_.rows()) {
    throw std::invalid_argument("LatticeCoordinates: dimension mismatch");
  }
  const Eigen::Index k = basis_.cols();
  IntVector y = snf_.U * z;
  IntVector w(k);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (i < k) {
      const Integer& d = snf_.D(i, i);
      if (y(i) % d != 0) return std::nullopt;
      w(i) = y(i) / d;
    } else if (y(i) != 0) {
      return std::nullopt;
    }
  }
  return IntVector(snf_.V * w);
}

Subquotient::Subquotient(const IntMatrix& numerator_gens, const IntMatrix& denominator_gens)
    : ambient_dim_(numerator_gens.rows()) {
  if (denominator_gens.rows() != ambient_dim_) {
    throw std::invalid_argument("Subquotient: ambient dimension mismatch");
  }
  numerator_ = LatticeCoordinates(lattice_basis(numerator_gens));
  denominator_basis_ = lattice_basis(denominator_gens);
  denominator_ = LatticeCoordinates(denominator_basis_);

  const Eigen::Index k = numerator_.rank();
  IntMatrix relations(k, denominator_basis_.cols());
  for (Eigen::Index j = 0; j < denominator_basis_.cols(); ++j) {
    auto c = numerator_.solve(denominator_basis_.col(j));
    if (!c) throw std::invalid_argument("Subquotient: denominator not contained in numerator");
    relations.col(j) = *c;
  }
  relation_snf_ = smith_normal_form(relations);

  std::size_t free_count = 0;
  std::vector<Integer> torsion;
  for (Eigen::Index i = 0; i < k; ++i) {
    Integer d = relation_snf_.diagonal(i);
    if (d == 1) continue;
    kept_.push_back(i);
    if (d == 0) {
      ++free_count;
    } else {
      torsion.push_back(d);
    }
  }
  group_ = FinAbGroup(free_count, torsion);

  generator_coords_.resize(k, static_cast<Eigen::Index>(kept_.size()));
  for (std::size_t g = 0; g < kept_.size(); ++g) {
    generator_coords_.col(static_cast<Eigen::Index>(g)) = relation_snf_.U_inv.col(kept_[g]);
  }
  generators_ = numerator_.basis() * generator_coords_;
}

Subquotient Subquotient::quotient(Eigen::Index ambient_dim, const IntMatrix& relations) {
  IntMatrix rel = relations.cols() == 0 ? IntMatrix(ambient_dim, 0) : relations;
  return Subquotient(IntMatrix::Identity(ambient_dim, ambient_dim), rel);
}

Integer Subquotient::generator_order(Eigen::Index i) const {
  return relation_snf_.diagonal(kept_.at(static_cast<std::size_t>(i)));
}

bool Subquotient::in_denominator(const IntVector& z) const { return denominator_.contains(z); }

std::optional<IntVector> Subquotient::coordinates(const IntVector& z) const {
  auto c = numerator_.solve(z);
  if (!c) return std::nullopt;
  IntVector e = relation_snf_.U * *c;
  IntVector out(static_cast<Eigen::Index>(kept_.size()));
  for (std::size_t g = 0; g < kept_.size(); ++g) {
    out(static_cast<Eigen::Index>(g)) = e(kept_[g]);
  }
  return reduce(out);
}

IntVector Subquotient::reduce(const IntVector& coords) const {
  IntVector out = coords;
  for (Eigen::Index g = 0; g < out.size(); ++g) {
    Integer d = generator_order(g);
    if (d > 1) out(g) = mod_nonneg(out(g), d);
  }
  return out;
}

Homology homology_at(const IntMatrix& d_in, const IntMatrix& d_out) {
  if (d_in.rows() != d_out.cols()) {
    throw std::invalid_argument("homology_at: d_in and d_out are not composable");
  }
  if (d_out.rows() > 0 && d_in.cols() > 0 && !(d_out * d_in).isZero()) {
    throw CompositionError("homology_at: d_out * d_in is nonzero");
  }
  Subquotient module(kernel_basis(d_out), d_in);
  return {module.group(), module.generators(), module};
}

EchelonReducer::EchelonReducer(const IntMatrix& gens) {
  IntMatrix work = gens;
  std::vector<Eigen::Index> remaining;
  for (Eigen::Index c = 0; c < work.cols(); ++c) remaining.push_back(c);
  std::vector<IntVector> basis;
  for (Eigen::Index row = 0; row < work.rows() && !remaining.empty(); ++row) {
    for (;;) {
      std::vector<Eigen::Index> live;
      for (auto c : remaining) {
        if (work(row, c) != 0) live.push_back(c);
      }
      if (live.empty()) break;
      auto smallest = *std::min_element(live.begin(), live.end(), [&](auto a, auto b) {
        return abs(work(row, a)) < abs(work(row, b));
      });
      if (live.size() == 1) {
        if (work(row, smallest) < 0) work.col(smallest) *= Integer(-1);
        basis.emplace_back(work.col(smallest));
        pivots_.push_back(row);
        std::erase(remaining, smallest);
        break;
      }
      for (auto c : live) {
        if (c == smallest) continue;
        Integer q = work(row, c) / work(row, smallest);
        work.col(c) -= work.col(smallest) * q;
      }
    }
  }
  basis_.resize(gens.rows(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) basis_.col(static_cast<Eigen::Index>(i)) = basis[i];
}

IntVector EchelonReducer::reduce(IntVector v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i);
    const Integer& p = basis_(pivots_[i], idx);
    Integer q = floor_div(v(pivots_[i]), p);
    if (q != 0) v -= basis_.col(idx) * q;
  }
  return v;
}

}  // namespace strtop
