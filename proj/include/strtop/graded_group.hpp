#pragma once

#include "strtop/fin_ab_group.hpp"

#include <map>
#include <string>

namespace strtop {

FinAbGroup tensor(const FinAbGroup& g, const FinAbGroup& h);
FinAbGroup tor(const FinAbGroup& g, const FinAbGroup& h);

/// A graded abelian group supported in an explicit degree window. Degrees
/// outside the window, and unset degrees inside it, are trivial.
///
/// The window may start below zero: loop homology in the shifted grading
/// lives in degrees >= -dim M.
class GradedGroup {
 public:
  GradedGroup() = default;
  GradedGroup(int min_degree, int max_degree);

  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }
  bool in_window(int degree) const { return degree >= min_degree_ && degree <= max_degree_; }

  const FinAbGroup& at(int degree) const;
  void set(int degree, FinAbGroup group);

  /// Same groups, window [min_degree + shift, max_degree + shift].
  GradedGroup shifted(int shift) const;

  std::string to_string() const;

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

 private:
  int min_degree_ = 0;
  int max_degree_ = -1;
  std::map<int, FinAbGroup> groups_;
};

/// H_*(X; C) from H_*(X; Z) by the universal coefficient theorem:
/// H_p(X; C) = H_p (x) C + Tor(H_{p-1}, C), on the window of H.
GradedGroup uct_row(const GradedGroup& H, const FinAbGroup& C);

}  // namespace strtop
