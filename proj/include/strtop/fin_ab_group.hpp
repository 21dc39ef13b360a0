#pragma once

#include "strtop/number.hpp"

#include <string>
#include <vector>

namespace strtop {

/// Finitely generated abelian group Z^rank + Z/t_1 + ... + Z/t_k in invariant
/// factor form: every t_i >= 2 and t_i divides t_{i+1}.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  /// Builds the normal form of Z^rank + sum of Z/c for each cyclic order c.
  /// Orders 0 count as free summands and orders 1 are dropped.
  FinAbGroup(std::size_t rank, std::vector<Integer> cyclic_orders);

  static FinAbGroup trivial() { return {}; }
  static FinAbGroup free(std::size_t rank) { return FinAbGroup(rank, {}); }
  static FinAbGroup cyclic(const Integer& order) { return FinAbGroup(0, {order}); }

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }

  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  bool is_free() const { return torsion_.empty(); }

  /// Number of generators in the normal form (torsion first, then free).
  std::size_t num_generators() const { return torsion_.size() + rank_; }

  /// True when some torsion coefficient has an odd prime factor.
  bool has_odd_torsion() const;

  /// Renders as "0", "Z", "Z^2 + Z/2 + Z/6", ...
  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

FinAbGroup direct_sum(const FinAbGroup& g, const FinAbGroup& h);

}  // namespace strtop
