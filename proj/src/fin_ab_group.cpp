#include "strtop/fin_ab_group.hpp"

#include <sstream>

namespace strtop {

FinAbGroup::FinAbGroup(std::size_t rank, std::vector<Integer> cyclic_orders) : rank_(rank) {
  std::vector<Integer> orders;
  for (auto& c : cyclic_orders) {
    Integer a = abs(c);
    if (a == 0) {
      ++rank_;
    } else if (a != 1) {
      orders.push_back(a);
    }
  }
  // gcd/lcm sweep: afterwards orders[i] divides orders[j] for i < j.
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      Integer g = gcd(orders[i], orders[j]);
      Integer l = orders[i] / g * orders[j];
      orders[i] = g;
      orders[j] = l;
    }
  }
  for (auto& o : orders) {
    if (o != 1) torsion_.push_back(o);
  }
}

bool FinAbGroup::has_odd_torsion() const {
  for (Integer t : torsion_) {
    while (t % 2 == 0) t /= 2;
    if (t > 1) return true;
  }
  return false;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank_ > 0) {
    out << "Z";
    if (rank_ > 1) out << "^" << rank_;
    first = false;
  }
  for (const auto& t : torsion_) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

FinAbGroup direct_sum(const FinAbGroup& g, const FinAbGroup& h) {
  std::vector<Integer> orders = g.torsion();
  orders.insert(orders.end(), h.torsion().begin(), h.torsion().end());
  return FinAbGroup(g.rank() + h.rank(), std::move(orders));
}

}  // namespace strtop
