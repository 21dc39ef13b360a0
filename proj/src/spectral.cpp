#include "strtop/spectral.hpp"

#include <algorithm>
#include <sstream>

namespace strtop {

namespace {

const Subquotient& zero_entry() {
  static const Subquotient zero(IntMatrix(0, 0), IntMatrix(0, 0));
  return zero;
}

IntVector fit(const IntVector& v, Eigen::Index dim) {
  if (v.size() == 0) return IntVector::Zero(dim);
  if (v.size() != dim) throw std::invalid_argument("vector has dimension " + std::to_string(v.size()) +
                                                   ", expected " + std::to_string(dim));
  return v;
}

IntVector to_vector(const std::vector<Exponent>& basis, const IntPolynomial& p) {
  IntVector v = IntVector::Zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& [e, c] : p.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), e);
    if (it != basis.end() && *it == e) v(it - basis.begin()) += c;
  }
  return v;
}

IntPolynomial to_polynomial(const std::vector<Exponent>& basis, const IntVector& v) {
  IntPolynomial p;
  for (Eigen::Index i = 0; i < v.size(); ++i) p.add_term(basis[static_cast<std::size_t>(i)], v(i));
  return p;
}

IntMatrix columns_to_matrix(Eigen::Index rows, const std::vector<IntVector>& cols) {
  IntMatrix M(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) M.col(static_cast<Eigen::Index>(j)) = cols[j];
  return M;
}

int sign_of_degree(int degree) { return degree % 2 == 0 ? 1 : -1; }

}  // namespace

BigradedRing::BigradedRing(RingPresentation r, std::vector<Bidegree> b) : ring(std::move(r)), bidegrees(std::move(b)) {
  const auto& gens = ring.generators();
  if (bidegrees.size() != gens.size()) throw std::invalid_argument("one bidegree per generator is required");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (bidegrees[i].total() != gens[i].degree) {
      throw BidegreeError("bidegree of " + gens[i].name + " does not match its degree");
    }
  }
  for (const auto& rel : ring.relations()) {
    const Bidegree first = bidegree(rel.terms().begin()->first);
    for (const auto& [e, c] : rel.terms()) {
      if (bidegree(e) != first) throw BidegreeError("relation " + ring.format(rel) + " is not bihomogeneous");
    }
  }
}

Bidegree BigradedRing::bidegree(const Exponent& e) const {
  Bidegree b;
  for (std::size_t i = 0; i < e.size(); ++i) {
    b.p += e[i] * bidegrees[i].p;
    b.q += e[i] * bidegrees[i].q;
  }
  return b;
}

std::vector<Exponent> BigradedRing::monomials_in_bidegree(Bidegree b) const {
  std::vector<Exponent> out;
  for (auto& e : ring.monomials_in_degree(b.total())) {
    if (bidegree(e) == b) out.push_back(std::move(e));
  }
  return out;
}

Subquotient BigradedRing::entry(Bidegree b) const {
  const auto basis = monomials_in_bidegree(b);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  std::vector<IntVector> rels;
  for (const auto& rel : ring.relations()) {
    const Bidegree rb = bidegree(rel.terms().begin()->first);
    for (const auto& m : monomials_in_bidegree(b - rb)) {
      IntVector v = to_vector(basis, multiply(ring.generators(), IntPolynomial::monomial(m), rel));
      if (!v.isZero()) rels.push_back(std::move(v));
    }
  }
  if (ring.prime() > 0) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      IntVector v = IntVector::Zero(dim);
      v(i) = ring.prime();
      rels.push_back(std::move(v));
    }
  }
  return Subquotient::quotient(dim, columns_to_matrix(dim, rels));
}

Page::Page(int level, PageWindow window) : level_(level), window_(window) {
  if (level < 1) throw std::invalid_argument("page level must be at least 1");
}

void Page::set_entry(Bidegree b, Subquotient entry) {
  if (!window_.contains(b)) throw std::out_of_range("bidegree " + b.to_string() + " outside the page window");
  if (entry.ambient_dim() == 0) {
    entries_.erase(b);
  } else {
    entries_[b] = std::move(entry);
  }
}

void Page::set_group(Bidegree b, const FinAbGroup& group) {
  const auto n = static_cast<Eigen::Index>(group.num_generators());
  IntMatrix rel = IntMatrix::Zero(n, static_cast<Eigen::Index>(group.torsion().size()));
  for (std::size_t i = 0; i < group.torsion().size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    rel(k, k) = group.torsion()[i];
  }
  set_entry(b, Subquotient::quotient(n, rel));
}

const Subquotient& Page::entry(Bidegree b) const {
  auto it = entries_.find(b);
  return it == entries_.end() ? zero_entry() : it->second;
}

std::vector<Bidegree> Page::support() const {
  std::vector<Bidegree> out;
  for (const auto& [b, e] : entries_) {
    if (!e.group().is_trivial()) out.push_back(b);
  }
  return out;
}

FinAbGroup Page::total_group(int k) const {
  FinAbGroup sum;
  for (int p = window_.p_min; p <= window_.p_max; ++p) {
    const Bidegree b{p, k - p};
    if (window_.contains(b)) sum = direct_sum(sum, group(b));
  }
  return sum;
}

long long Page::euler_characteristic() const {
  long long chi = 0;
  for (const auto& [b, e] : entries_) {
    const auto r = static_cast<long long>(e.group().rank());
    chi += b.total() % 2 == 0 ? r : -r;
  }
  return chi;
}

void Page::set_differential_lift(Bidegree source, IntMatrix lift) {
  const Bidegree t = target(source);
  const auto& s = entry(source);
  if (lift.cols() != s.numerator_basis().cols() || lift.rows() != ambient_dim(t)) {
    throw std::invalid_argument("differential at " + source.to_string() + " has the wrong shape");
  }
  if (lift.size() == 0 || lift.isZero()) {
    lifts_.erase(source);
  } else {
    lifts_[source] = std::move(lift);
  }
}

void Page::set_differential_ambient(Bidegree source, const IntMatrix& D) {
  const auto& s = entry(source);
  if (D.cols() != s.ambient_dim() || D.rows() != ambient_dim(target(source))) {
    throw std::invalid_argument("ambient differential at " + source.to_string() + " has the wrong shape");
  }
  set_differential_lift(source, D * s.numerator_basis());
}

void Page::set_differential_on_generators(Bidegree source, const IntMatrix& M) {
  const auto& s = entry(source);
  const auto& t = entry(target(source));
  if (M.cols() != s.generators().cols() || M.rows() != t.generators().cols()) {
    throw std::invalid_argument("differential at " + source.to_string() + " has the wrong shape");
  }
  const auto& Z = s.numerator_basis();
  IntMatrix lift(t.ambient_dim(), Z.cols());
  for (Eigen::Index j = 0; j < Z.cols(); ++j) {
    auto c = s.coordinates(Z.col(j));
    lift.col(j) = t.generators() * (M * *c);
  }
  set_differential_lift(source, std::move(lift));
}

IntVector Page::apply_differential(Bidegree source, const IntVector& z) const {
  const Bidegree t = target(source);
  auto it = lifts_.find(source);
  if (it == lifts_.end()) return IntVector::Zero(ambient_dim(t));
  auto c = entry(source).numerator_coordinates(z);
  if (!c) throw std::invalid_argument("vector at " + source.to_string() + " is not a cycle of this page");
  return it->second * *c;
}

IntMatrix Page::differential_on_generators(Bidegree source) const {
  const auto& s = entry(source);
  const auto& t = entry(target(source));
  IntMatrix M = IntMatrix::Zero(t.generators().cols(), s.generators().cols());
  if (!has_differential(source)) return M;
  for (Eigen::Index j = 0; j < s.generators().cols(); ++j) {
    auto c = t.coordinates(apply_differential(source, s.generators().col(j)));
    if (!c) throw CompositionError("d_" + std::to_string(level_) + " at " + source.to_string() + " leaves the cycles");
    M.col(j) = *c;
  }
  return M;
}

void Page::validate() const {
  const std::string name = "d_" + std::to_string(level_);
  for (const auto& [s, lift] : lifts_) {
    const Bidegree t = target(s);
    const auto& src = entry(s);
    const auto& tgt = entry(t);
    for (Eigen::Index j = 0; j < lift.cols(); ++j) {
      if (!tgt.in_numerator(lift.col(j))) {
        throw CompositionError(name + " at " + s.to_string() + " does not land in the cycles of " + t.to_string());
      }
      if (!entry(target(t)).in_denominator(apply_differential(t, lift.col(j)))) {
        throw CompositionError(name + " o " + name + " is nonzero at " + s.to_string());
      }
    }
    const auto& B = src.denominator_basis();
    for (Eigen::Index j = 0; j < B.cols(); ++j) {
      if (!tgt.in_denominator(apply_differential(s, B.col(j)))) {
        throw CompositionError(name + " at " + s.to_string() + " does not send boundaries to boundaries");
      }
    }
  }
}

void Page::set_ring(std::shared_ptr<const BigradedRing> ring) {
  ring_ = std::move(ring);
  if (!ring_) {
    product_ = nullptr;
    return;
  }
  auto r = ring_;
  auto cache = std::make_shared<std::map<Bidegree, std::vector<Exponent>>>();
  auto mutex = std::make_shared<std::mutex>();
  auto basis = [r, cache, mutex](Bidegree b) {
    std::lock_guard lock(*mutex);
    auto it = cache->find(b);
    if (it == cache->end()) it = cache->emplace(b, r->monomials_in_bidegree(b)).first;
    return it->second;
  };
  product_ = [r, basis](Bidegree b1, const IntVector& x, Bidegree b2, const IntVector& y) {
    const auto bx = basis(b1), by = basis(b2), bz = basis(b1 + b2);
    if (x.size() == 0 || y.size() == 0) return IntVector(IntVector::Zero(static_cast<Eigen::Index>(bz.size())));
    return to_vector(bz, strtop::multiply(r->ring.generators(), to_polynomial(bx, x), to_polynomial(by, y)));
  };
}

IntVector Page::multiply(Bidegree b1, const IntVector& x, Bidegree b2, const IntVector& y) const {
  if (!product_) throw std::logic_error("page has no product");
  return fit(product_(b1, x, b2, y), ambient_dim(b1 + b2));
}

std::string Page::to_string() const {
  std::size_t width = 1;
  for (const auto& [b, e] : entries_) width = std::max(width, e.group().to_string().size());
  std::ostringstream out;
  out << "E^" << level_ << "  p in [" << window_.p_min << ", " << window_.p_max << "], q in [" << window_.q_min
      << ", " << window_.q_max << "]\n";
  auto pad = [&](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  for (int q = window_.q_max; q >= window_.q_min; --q) {
    std::string row;
    bool any = false;
    for (int p = window_.p_min; p <= window_.p_max; ++p) {
      const auto g = group({p, q});
      any = any || !g.is_trivial();
      row += " " + pad(g.is_trivial() ? "." : g.to_string());
    }
    if (any) out << "q=" << q << " |" << row << "\n";
  }
  std::string axis;
  for (int p = window_.p_min; p <= window_.p_max; ++p) axis += " " + pad(std::to_string(p));
  out << "p    " << axis << "\n";
  return out.str();
}

Page turn_page(const Page& E) {
  E.validate();
  Page next(E.level() + 1, E.window());
  const Bidegree step = E.differential_bidegree();
  for (const auto& b : [&] {
         std::vector<Bidegree> all;
         for (int p = E.window().p_min; p <= E.window().p_max; ++p)
           for (int q = E.window().q_min; q <= E.window().q_max; ++q)
             if (E.has_entry({p, q})) all.push_back({p, q});
         return all;
       }()) {
    const auto& e = E.entry(b);
    IntMatrix Z = e.numerator_basis();
    auto out = E.differential_lifts().find(b);
    if (out != E.differential_lifts().end()) {
      const auto& Bt = E.entry(b + step).denominator_basis();
      IntMatrix K = kernel_basis(hcat(out->second, IntMatrix(-Bt)));
      Z = Z * IntMatrix(K.topRows(Z.cols()));
    }
    IntMatrix B = e.denominator_basis();
    auto in = E.differential_lifts().find(b - step);
    if (in != E.differential_lifts().end()) B = hcat(B, in->second);
    try {
      next.set_entry(b, Subquotient(Z, B));
    } catch (const std::invalid_argument&) {
      throw CompositionError("d_" + std::to_string(E.level()) + " o d_" + std::to_string(E.level()) +
                             " is nonzero at " + b.to_string());
    }
  }
  if (E.ring()) {
    next.set_ring(E.shared_ring());
  } else if (E.has_product()) {
    next.set_product(E.product());
  }
  return next;
}

Page shift(const Page& E, Bidegree by) {
  Page out(E.level(), E.window().shifted(by));
  for (int p = E.window().p_min; p <= E.window().p_max; ++p) {
    for (int q = E.window().q_min; q <= E.window().q_max; ++q) {
      if (E.has_entry({p, q})) out.set_entry(Bidegree{p, q} - by, E.entry({p, q}));
    }
  }
  for (const auto& [s, lift] : E.differential_lifts()) out.set_differential_lift(s - by, lift);
  return out;
}

Page attach_ring(const Page& E, std::shared_ptr<const BigradedRing> ring) {
  Page out(E.level(), E.window());
  for (int p = E.window().p_min; p <= E.window().p_max; ++p) {
    for (int q = E.window().q_min; q <= E.window().q_max; ++q) {
      const Bidegree b{p, q};
      auto sq = ring->entry(b);
      if (!(sq.group() == E.group(b))) {
        throw std::invalid_argument("ring entry at " + b.to_string() + " is " + sq.group().to_string() +
                                    " but the page has " + E.group(b).to_string());
      }
      out.set_entry(b, std::move(sq));
    }
  }
  out.set_ring(std::move(ring));
  return out;
}

Page leibniz_extend(const Page& E, const std::map<std::string, IntPolynomial>& generator_differentials) {
  const BigradedRing* ring = E.ring();
  if (!ring) throw std::invalid_argument("leibniz_extend needs a page with ring-presented entries");
  const auto& gens = ring->ring.generators();
  std::vector<IntPolynomial> on_gen(gens.size());
  for (const auto& [name, value] : generator_differentials) {
    const auto i = ring->ring.generator_index(name);
    const Bidegree expected = ring->bidegrees[i] + E.differential_bidegree();
    for (const auto& [e, c] : value.terms()) {
      if (ring->bidegree(e) != expected) {
        throw BidegreeError("d_" + std::to_string(E.level()) + "(" + name + ") must lie in bidegree " +
                            expected.to_string());
      }
    }
    on_gen[i] = value;
  }
  Page out = E;
  out.clear_differentials();
  const std::function<const IntPolynomial&(std::size_t)> lookup = [&](std::size_t i) -> const IntPolynomial& {
    return on_gen[i];
  };
  for (int p = E.window().p_min; p <= E.window().p_max; ++p) {
    for (int q = E.window().q_min; q <= E.window().q_max; ++q) {
      const Bidegree s{p, q};
      const Bidegree t = E.target(s);
      if (!E.has_entry(s) || !E.has_entry(t)) continue;
      const auto source_basis = ring->monomials_in_bidegree(s);
      const auto target_basis = ring->monomials_in_bidegree(t);
      std::vector<IntVector> cols;
      for (const auto& m : source_basis) {
        cols.push_back(to_vector(target_basis, derivation_on_monomial<Integer>(gens, m, lookup, -1)));
      }
      out.set_differential_ambient(s, columns_to_matrix(static_cast<Eigen::Index>(target_basis.size()), cols));
    }
  }
  return out;
}

namespace {

std::vector<Bidegree> cycle_support(const Page& E) {
  std::vector<Bidegree> out;
  for (int p = E.window().p_min; p <= E.window().p_max; ++p) {
    for (int q = E.window().q_min; q <= E.window().q_max; ++q) {
      if (E.has_entry({p, q}) && E.entry({p, q}).numerator_basis().cols() > 0) out.push_back({p, q});
    }
  }
  return out;
}

}  // namespace

Report check_leibniz(const Page& E) {
  Report report;
  if (!E.has_product()) throw std::invalid_argument("check_leibniz needs a page with a product");
  const auto& W = E.window();
  const auto support = cycle_support(E);
  for (const auto& b1 : support) {
    for (const auto& b2 : support) {
      const Bidegree s = b1 + b2;
      if (!W.contains(s) || !W.contains(E.target(b1)) || !W.contains(E.target(b2)) || !W.contains(E.target(s))) {
        continue;
      }
      const auto& X = E.entry(b1).numerator_basis();
      const auto& Y = E.entry(b2).numerator_basis();
      for (Eigen::Index i = 0; i < X.cols(); ++i) {
        const IntVector x = X.col(i);
        const IntVector dx = E.apply_differential(b1, x);
        for (Eigen::Index j = 0; j < Y.cols(); ++j) {
          const IntVector y = Y.col(j);
          const IntVector xy = E.multiply(b1, x, b2, y);
          if (!E.entry(s).in_numerator(xy)) {
            report.push_back({"leibniz", s, E.level(),
                              "product of cycles from " + b1.to_string() + " and " + b2.to_string() +
                                  " is not a cycle"});
            continue;
          }
          IntVector rhs = E.multiply(E.target(b1), dx, b2, y);
          rhs += E.multiply(b1, x, E.target(b2), E.apply_differential(b2, y)) * Integer(sign_of_degree(b1.total()));
          const IntVector lhs = E.apply_differential(s, xy);
          if (!E.entry(E.target(s)).in_denominator(IntVector(lhs - rhs))) {
            report.push_back({"leibniz", s, E.level(),
                              "d(xy) != d(x)y + (-1)^|x| x d(y) for basis cycles " + std::to_string(i) + " at " +
                                  b1.to_string() + " and " + std::to_string(j) + " at " + b2.to_string()});
          }
        }
      }
    }
  }
  return report;
}

Report check_module_pairing(const Page& E, const Page& M, const Pairing& pairing) {
  Report report;
  if (E.level() != M.level()) throw std::invalid_argument("module pairing needs pages of the same level");
  const auto& WE = E.window();
  const auto& WM = M.window();
  auto act = [&](Bidegree b1, const IntVector& x, Bidegree b2, const IntVector& m) {
    return fit(pairing(b1, x, b2, m), M.ambient_dim(b1 + b2));
  };
  const auto e_support = cycle_support(E);
  const auto m_support = cycle_support(M);
  for (const auto& b1 : e_support) {
    for (const auto& b2 : m_support) {
      const Bidegree s = b1 + b2;
      if (!WM.contains(s) || !WE.contains(E.target(b1)) || !WM.contains(M.target(b2)) ||
          !WM.contains(M.target(s))) {
        continue;
      }
      const auto& X = E.entry(b1).numerator_basis();
      const auto& Y = M.entry(b2).numerator_basis();
      for (Eigen::Index i = 0; i < X.cols(); ++i) {
        const IntVector x = X.col(i);
        const IntVector dx = E.apply_differential(b1, x);
        for (Eigen::Index j = 0; j < Y.cols(); ++j) {
          const IntVector m = Y.col(j);
          const IntVector xm = act(b1, x, b2, m);
          if (!M.entry(s).in_numerator(xm)) {
            report.push_back({"module", s, M.level(), "x.m is not a cycle"});
            continue;
          }
          IntVector rhs = act(E.target(b1), dx, b2, m);
          rhs += act(b1, x, M.target(b2), M.apply_differential(b2, m)) * Integer(sign_of_degree(b1.total()));
          if (!M.entry(M.target(s)).in_denominator(IntVector(M.apply_differential(s, xm) - rhs))) {
            report.push_back({"module", s, M.level(),
                              "d'(x.m) != d(x).m + (-1)^|x| x.d'(m) for cycles " + std::to_string(i) + " at " +
                                  b1.to_string() + " and " + std::to_string(j) + " at " + b2.to_string()});
          }
        }
      }
    }
  }
  if (!E.has_product()) return report;
  for (const auto& b1 : e_support) {
    for (const auto& b2 : e_support) {
      if (!WE.contains(b1 + b2)) continue;
      for (const auto& b3 : m_support) {
        const Bidegree s = b1 + b2 + b3;
        if (!WM.contains(s) || !WM.contains(b2 + b3)) continue;
        const auto& X = E.entry(b1).numerator_basis();
        const auto& Y = E.entry(b2).numerator_basis();
        const auto& Z = M.entry(b3).numerator_basis();
        for (Eigen::Index i = 0; i < X.cols(); ++i) {
          for (Eigen::Index j = 0; j < Y.cols(); ++j) {
            const IntVector xy = E.multiply(b1, X.col(i), b2, Y.col(j));
            for (Eigen::Index k = 0; k < Z.cols(); ++k) {
              const IntVector left = act(b1 + b2, xy, b3, Z.col(k));
              const IntVector right = act(b1, X.col(i), b2 + b3, act(b2, Y.col(j), b3, Z.col(k)));
              if (!M.entry(s).in_denominator(IntVector(left - right))) {
                report.push_back({"module-associativity", s, M.level(),
                                  "(xy).m != x.(y.m) for factors at " + b1.to_string() + ", " + b2.to_string() +
                                      ", " + b3.to_string()});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

const Page& SpectralSequence::page(int level) const {
  for (const auto& p : pages) {
    if (p.level() == level) return p;
  }
  throw std::out_of_range("no page at level " + std::to_string(level));
}

bool SpectralSequence::has_page(int level) const {
  return std::any_of(pages.begin(), pages.end(), [&](const Page& p) { return p.level() == level; });
}

SpectralSequence run_to_stable(Page start) {
  SpectralSequence ss;
  ss.pages.push_back(std::move(start));
  const int width = ss.pages.back().window().p_max - ss.pages.back().window().p_min;
  while (ss.pages.back().level() <= width) ss.pages.push_back(turn_page(ss.pages.back()));
  return ss;
}

const IntMatrix* SSMorphism::at(int lvl, Bidegree b) const {
  auto it = maps.find(lvl);
  if (it == maps.end()) return nullptr;
  auto jt = it->second.find(b);
  return jt == it->second.end() ? nullptr : &jt->second;
}

namespace {

IntMatrix map_or_zero(const std::map<Bidegree, IntMatrix>& fn, Bidegree b, Eigen::Index rows, Eigen::Index cols) {
  auto it = fn.find(b);
  if (it == fn.end()) return IntMatrix::Zero(rows, cols);
  if (it->second.rows() != rows || it->second.cols() != cols) {
    throw std::invalid_argument("morphism matrix at " + b.to_string() + " is " + std::to_string(it->second.rows()) +
                                "x" + std::to_string(it->second.cols()) + ", expected " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  }
  return it->second;
}

IntMatrix reduce_columns(const Subquotient& e, IntMatrix M) {
  for (Eigen::Index j = 0; j < M.cols(); ++j) M.col(j) = e.reduce(M.col(j));
  return M;
}

Eigen::Index gens(const Page& E, Bidegree b) { return E.entry(b).generators().cols(); }

}  // namespace

std::map<Bidegree, IntMatrix> induced_map(const std::map<Bidegree, IntMatrix>& fn, Bidegree shift, const Page& En,
                                          const Page& En1, const Page& Fn, const Page& Fn1) {
  std::map<Bidegree, IntMatrix> out;
  for (int p = En1.window().p_min; p <= En1.window().p_max; ++p) {
    for (int q = En1.window().q_min; q <= En1.window().q_max; ++q) {
      const Bidegree s{p, q};
      const Bidegree t = s + shift;
      if (gens(En1, s) == 0 || gens(Fn1, t) == 0) continue;
      const IntMatrix M = map_or_zero(fn, s, gens(Fn, t), gens(En, s));
      const auto& G = En1.entry(s).generators();
      IntMatrix image(gens(Fn1, t), G.cols());
      for (Eigen::Index j = 0; j < G.cols(); ++j) {
        auto c = En.entry(s).coordinates(G.col(j));
        if (!c) throw std::invalid_argument("page " + std::to_string(En1.level()) + " is not a subquotient of page " +
                                            std::to_string(En.level()));
        auto d = Fn1.entry(t).coordinates(Fn.entry(t).generators() * (M * *c));
        if (!d) throw std::domain_error("image of a cycle at " + s.to_string() + " is not a cycle");
        image.col(j) = *d;
      }
      out.emplace(s, std::move(image));
    }
  }
  return out;
}

Report check_morphism(const SSMorphism& f, const SpectralSequence& E, const SpectralSequence& F) {
  Report report;
  for (int n = f.level; E.has_page(n) && F.has_page(n); ++n) {
    if (n > f.level && !f.maps.count(n)) break;
    static const std::map<Bidegree, IntMatrix> none;
    const auto& fn = f.maps.count(n) ? f.maps.at(n) : none;
    const Page& En = E.page(n);
    const Page& Fn = F.page(n);

    for (const auto& [s, M] : fn) map_or_zero(fn, s, gens(Fn, s + f.shift), gens(En, s));

    bool commutes = true;
    for (int p = En.window().p_min; p <= En.window().p_max; ++p) {
      for (int q = En.window().q_min; q <= En.window().q_max; ++q) {
        const Bidegree s{p, q};
        const Bidegree s2 = s + f.shift;
        if (gens(En, s) == 0) continue;
        const IntMatrix M = map_or_zero(fn, s, gens(Fn, s2), gens(En, s));
        const auto& target_entry = Fn.entry(s2);
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
          const Integer order = En.entry(s).generator_order(j);
          if (order > 0 && !target_entry.reduce(IntVector(M.col(j) * order)).isZero()) {
            report.push_back({"well-defined", s, n, "image of a generator of order " + order.str() +
                                                        " is not killed by " + order.str()});
          }
        }
        const Bidegree t = En.target(s);
        const Bidegree t2 = Fn.target(s2);
        if (!En.window().contains(t) || !Fn.window().contains(t2)) continue;
        const IntMatrix lhs = Fn.differential_on_generators(s2) * M;
        const IntMatrix rhs = map_or_zero(fn, t, gens(Fn, t2), gens(En, t)) * En.differential_on_generators(s);
        if (reduce_columns(Fn.entry(t2), lhs) != reduce_columns(Fn.entry(t2), rhs)) {
          commutes = false;
          report.push_back({"commutes", s, n, "d'f != fd from " + s.to_string()});
        }
      }
    }

    if (!commutes || !f.maps.count(n + 1) || !E.has_page(n + 1) || !F.has_page(n + 1)) continue;
    const Page& En1 = E.page(n + 1);
    const Page& Fn1 = F.page(n + 1);
    std::map<Bidegree, IntMatrix> induced;
    try {
      induced = induced_map(fn, f.shift, En, En1, Fn, Fn1);
    } catch (const std::domain_error& err) {
      report.push_back({"induced", {}, n + 1, err.what()});
      continue;
    }
    const auto& given = f.maps.at(n + 1);
    for (int p = En1.window().p_min; p <= En1.window().p_max; ++p) {
      for (int q = En1.window().q_min; q <= En1.window().q_max; ++q) {
        const Bidegree s{p, q};
        const Bidegree s2 = s + f.shift;
        if (gens(En1, s) == 0) continue;
        const IntMatrix expected = map_or_zero(induced, s, gens(Fn1, s2), gens(En1, s));
        const IntMatrix supplied = map_or_zero(given, s, gens(Fn1, s2), gens(En1, s));
        if (reduce_columns(Fn1.entry(s2), expected) != reduce_columns(Fn1.entry(s2), supplied)) {
          report.push_back({"induced", s, n + 1, "H(f^" + std::to_string(n) + ") != f^" + std::to_string(n + 1)});
        }
      }
    }
  }
  return report;
}

}  // namespace strtop
