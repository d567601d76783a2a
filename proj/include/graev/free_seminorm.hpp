#pragma once

#include <map>
#include <utility>
#include <vector>

#include "graev/core.hpp"
#include "graev/graev_norm.hpp"

namespace graev {

/// Nonnegative transshipment on the complete graph of the space. Only arcs
/// with positive flow are stored. The basepoint absorbs the residual supply.
struct FlowCertificate {
  std::map<std::pair<std::size_t, std::size_t>, Rational> flow;
  Rational value;
};

/// A 1-Lipschitz function vanishing at the basepoint.
struct DualWitness {
  std::vector<Rational> f;
};

struct FreeSeminormResult {
  Rational value;
  FlowCertificate flow;
  DualWitness dual;
  std::size_t pivots = 0;
};

/// Maximal seminorm p(v) computed as a min-cost transshipment by an exact
/// network simplex (Bland's rule). The returned flow and node potentials are
/// an optimal primal/dual pair; strong duality is verified before returning.
FreeSeminormResult free_seminorm(const PointedSpace& space, const LinComb& v);

/// Optimal 1-Lipschitz f with f(*) = 0 and sum v(x) f(x) = p(v).
DualWitness dual_witness(const PointedSpace& space, const LinComb& v);

/// sum over x of v(x) * f(x).
Rational dual_objective(const LinComb& v, const DualWitness& witness);

/// f(*) = 0 and |f(x) - f(y)| <= d(x,y) for every pair.
bool witness_is_feasible(const PointedSpace& space, const DualWitness& witness);

/// Nonnegativity, conservation at every non-basepoint node and the value
/// identity value = sum flow * dist.
bool flow_is_feasible(const PointedSpace& space, const LinComb& v, const FlowCertificate& cert);

/// True when every flow amount is an integer.
bool flow_is_integral(const FlowCertificate& cert);

struct TuReport {
  Rational graev;     // matching value of the word
  Rational seminorm;  // transshipment value of the same word as a combination
  bool seminorm_below_graev = false;
  bool equal = false;
  MatchingCertificate matching;
  FlowCertificate flow;
  DualWitness dual;
};

/// Computes both norms of w and compares them exactly.
TuReport tu_check(const PointedSpace& space, const Word& w);

}  // namespace graev
