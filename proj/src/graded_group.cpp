#include "strtop/graded_group.hpp"

#include <sstream>
#include <stdexcept>

namespace strtop {

FinAbGroup tensor(const FinAbGroup& g, const FinAbGroup& h) {
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    orders.insert(orders.end(), g.torsion().begin(), g.torsion().end());
  }
  for (std::size_t i = 0; i < g.rank(); ++i) {
    orders.insert(orders.end(), h.torsion().begin(), h.torsion().end());
  }
  for (const auto& m : g.torsion()) {
    for (const auto& n : h.torsion()) orders.push_back(gcd(m, n));
  }
  return FinAbGroup(g.rank() * h.rank(), std::move(orders));
}

FinAbGroup tor(const FinAbGroup& g, const FinAbGroup& h) {
  std::vector<Integer> orders;
  for (const auto& m : g.torsion()) {
    for (const auto& n : h.torsion()) orders.push_back(gcd(m, n));
  }
  return FinAbGroup(0, std::move(orders));
}

GradedGroup::GradedGroup(int min_degree, int max_degree)
    : min_degree_(min_degree), max_degree_(max_degree) {}

const FinAbGroup& GradedGroup::at(int degree) const {
  static const FinAbGroup zero;
  auto it = groups_.find(degree);
  return it == groups_.end() ? zero : it->second;
}

void GradedGroup::set(int degree, FinAbGroup group) {
  if (!in_window(degree)) {
    throw std::out_of_range("GradedGroup: degree " + std::to_string(degree) + " outside window");
  }
  if (group.is_trivial()) {
    groups_.erase(degree);
  } else {
    groups_[degree] = std::move(group);
  }
}

GradedGroup GradedGroup::shifted(int shift) const {
  GradedGroup out(min_degree_ + shift, max_degree_ + shift);
  for (const auto& [d, g] : groups_) out.groups_[d + shift] = g;
  return out;
}

std::string GradedGroup::to_string() const {
  std::ostringstream out;
  for (int d = min_degree_; d <= max_degree_; ++d) {
    out << d << ": " << at(d).to_string() << "\n";
  }
  return out.str();
}

GradedGroup uct_row(const GradedGroup& H, const FinAbGroup& C) {
  GradedGroup out(H.min_degree(), H.max_degree());
  for (int p = H.min_degree(); p <= H.max_degree(); ++p) {
    out.set(p, direct_sum(tensor(H.at(p), C), tor(H.at(p - 1), C)));
  }
  return out;
}

}  // namespace strtop
