#include "graev/free_seminorm.hpp"

#include <deque>
#include <stdexcept>

namespace graev {

namespace {

class NetworkSimplex {
 public:
  NetworkSimplex(const PointedSpace& space, const LinComb& v)
      : space_(space), n_(space.size()), root_(space.basepoint()), supply_(n_), in_tree_(n_ * n_, false),
        flow_(n_ * n_) {
    for (const auto& [index, value] : v.coeffs()) {
      supply_[index] = value;
      supply_[root_] -= value;
    }
    // Star around the basepoint; feasible because the supplies balance.
    for (std::size_t x = 0; x < n_; ++x) {
      if (x == root_) continue;
      const std::size_t arc = sgn(supply_[x]) >= 0 ? arc_id(x, root_) : arc_id(root_, x);
      in_tree_[arc] = true;
      flow_[arc] = abs(supply_[x]);
    }
  }

  void solve() {
    while (true) {
      compute_potentials();
      const auto entering = find_entering();
      if (!entering) break;
      pivot(*entering);
      ++pivots_;
    }
  }

  FreeSeminormResult result() const {
    FreeSeminormResult out;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const Rational& amount = flow_[arc_id(i, j)];
        if (i == j || sgn(amount) == 0) continue;
        out.flow.flow.emplace(std::make_pair(i, j), amount);
        out.value += amount * space_.dist(i, j);
      }
    }
    out.flow.value = out.value;
    out.dual.f = potential_;
    out.pivots = pivots_;
    return out;
  }

 private:
  std::size_t arc_id(std::size_t i, std::size_t j) const { return i * n_ + j; }
  std::size_t tail(std::size_t arc) const { return arc / n_; }
  std::size_t head(std::size_t arc) const { return arc % n_; }

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> tree_adjacency() const {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n_);
    for (std::size_t arc = 0; arc < n_ * n_; ++arc) {
      if (!in_tree_[arc]) continue;
      adj[tail(arc)].emplace_back(head(arc), arc);
      adj[head(arc)].emplace_back(tail(arc), arc);
    }
    return adj;
  }

  // pi(tail) - pi(head) = cost on every tree arc, pi(*) = 0.
  void compute_potentials() {
    const auto adj = tree_adjacency();
    potential_.assign(n_, Rational(0));
    std::vector<bool> seen(n_, false);
    std::deque<std::size_t> queue{root_};
    seen[root_] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& [y, arc] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        const Rational& c = space_.dist(tail(arc), head(arc));
        potential_[y] = tail(arc) == x ? Rational(potential_[x] - c) : Rational(potential_[x] + c);
        queue.push_back(y);
      }
    }
  }

  std::optional<std::size_t> find_entering() const {
    for (std::size_t arc = 0; arc < n_ * n_; ++arc) {
      const std::size_t i = tail(arc);
      const std::size_t j = head(arc);
      if (i == j || in_tree_[arc]) continue;
      if (space_.dist(i, j) - potential_[i] + potential_[j] < 0) return arc;
    }
    return std::nullopt;
  }

  void pivot(std::size_t entering) {
    const std::size_t from = tail(entering);
    const std::size_t to = head(entering);
    const auto adj = tree_adjacency();

    // Tree path from `to` back to `from`.
    std::vector<std::size_t> parent_arc(n_, n_ * n_);
    std::vector<std::size_t> parent(n_, n_);
    std::vector<bool> seen(n_, false);
    std::deque<std::size_t> queue{to};
    seen[to] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (const auto& [y, arc] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = x;
        parent_arc[y] = arc;
        queue.push_back(y);
      }
    }
    std::vector<std::size_t> forward;
    std::vector<std::size_t> backward;
    for (std::size_t x = from; x != to; x = parent[x]) {
      // The cycle traverses parent[x] -> x.
      const std::size_t arc = parent_arc[x];
      (tail(arc) == parent[x] ? forward : backward).push_back(arc);
    }
    if (backward.empty()) throw std::logic_error("network simplex: unbounded cycle");

    std::size_t leaving = backward.front();
    for (std::size_t arc : backward) {
      if (flow_[arc] < flow_[leaving] || (flow_[arc] == flow_[leaving] && arc < leaving)) leaving = arc;
    }
    const Rational delta = flow_[leaving];
    flow_[entering] += delta;
    for (std::size_t arc : forward) flow_[arc] += delta;
    for (std::size_t arc : backward) flow_[arc] -= delta;
    in_tree_[leaving] = false;
    in_tree_[entering] = true;
  }

  const PointedSpace& space_;
  std::size_t n_;
  std::size_t root_;
  std::vector<Rational> supply_;
  std::vector<bool> in_tree_;
  std::vector<Rational> flow_;
  std::vector<Rational> potential_;
  std::size_t pivots_ = 0;
};

}  // namespace

FreeSeminormResult free_seminorm(const PointedSpace& space, const LinComb& v) {
  require_compatible(space, v);
  NetworkSimplex solver(space, v);
  solver.solve();
  FreeSeminormResult out = solver.result();
  if (!witness_is_feasible(space, out.dual) || dual_objective(v, out.dual) != out.value ||
      !flow_is_feasible(space, v, out.flow)) {
    throw std::logic_error("network simplex produced a non-optimal primal/dual pair");
  }
  return out;
}

DualWitness dual_witness(const PointedSpace& space, const LinComb& v) {
  return free_seminorm(space, v).dual;
}

Rational dual_objective(const LinComb& v, const DualWitness& witness) {
  Rational total;
  for (const auto& [index, value] : v.coeffs()) total += value * witness.f.at(index);
  return total;
}

bool witness_is_feasible(const PointedSpace& space, const DualWitness& witness) {
  if (witness.f.size() != space.size() || witness.f[space.basepoint()] != 0) return false;
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      if (abs(witness.f[i] - witness.f[j]) > space.dist(i, j)) return false;
    }
  }
  return true;
}

bool flow_is_feasible(const PointedSpace& space, const LinComb& v, const FlowCertificate& cert) {
  std::vector<Rational> net(space.size());
  Rational value;
  for (const auto& [arc, amount] : cert.flow) {
    const auto [i, j] = arc;
    if (i >= space.size() || j >= space.size() || sgn(amount) < 0) return false;
    net[i] += amount;
    net[j] -= amount;
    value += amount * space.dist(i, j);
  }
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (x != space.basepoint() && net[x] != v.coeff(x)) return false;
  }
  return value == cert.value;
}

bool flow_is_integral(const FlowCertificate& cert) {
  for (const auto& [arc, amount] : cert.flow) {
    if (amount.get_den() != 1) return false;
  }
  return true;
}

TuReport tu_check(const PointedSpace& space, const Word& w) {
  TuReport report;
  const auto matching = graev_norm(space, w);
  const auto seminorm = free_seminorm(space, word_to_lincomb(w));
  report.graev = matching.value;
  report.seminorm = seminorm.value;
  report.seminorm_below_graev = seminorm.value <= matching.value;
  report.equal = seminorm.value == matching.value;
  report.matching = matching.certificate;
  report.flow = seminorm.flow;
  report.dual = seminorm.dual;
  return report;
}

}  // namespace graev
