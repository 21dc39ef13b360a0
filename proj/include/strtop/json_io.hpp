#pragma once

#include "strtop/fin_ab_group.hpp"
#include "strtop/graded_group.hpp"
#include "strtop/ring_presentation.hpp"
#include "strtop/spectral.hpp"

#include <json.hpp>

namespace strtop {

using Json = nlohmann::ordered_json;

/// Integers are written as JSON numbers when they fit in 64 bits, and as
/// decimal strings otherwise; both forms are accepted on input.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// {"rank": r, "torsion": [d1, d2, ...]}
Json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);

/// {"min_degree": a, "max_degree": b, "groups": {"k": group, ...}} (trivial degrees omitted)
Json to_json(const GradedGroup& g);
GradedGroup graded_group_from_json(const Json& j);

/// {"coefficients": 0 | p, "generators": [{"name", "degree", "kind"}], "relations": [[{"exponent": [...], "coefficient": c}]]}
Json to_json(const RingPresentation& r);
RingPresentation ring_from_json(const Json& j);

/// {"level": r, "window": {...}, "entries": {"p,q": group}, "differentials": [{"source", "target", "matrix"}]}
Json page_summary(const Page& E);

Json matrix_to_json(const IntMatrix& M);
IntMatrix matrix_from_json(const Json& j);

}  // namespace strtop
