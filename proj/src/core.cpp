#include "graev/core.hpp"

#include <cstdlib>

namespace graev {

PointedSpace::PointedSpace(std::vector<std::string> names, std::size_t basepoint,
                           std::vector<std::vector<Rational>> dist)
    : names_(std::move(names)), basepoint_(basepoint), dist_(std::move(dist)) {}

std::size_t PointedSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InputError("unknown point '" + name + "'");
}

ValidationReport validate_space(const PointedSpace& space) {
  const std::size_t n = space.size();
  if (n == 0) throw StructureError("space has no points");
  if (space.basepoint() >= n) throw StructureError("basepoint index out of range");
  if (space.matrix().size() != n) {
    throw StructureError("distance matrix has " + std::to_string(space.matrix().size()) +
                         " rows for " + std::to_string(n) + " points");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (space.matrix()[i].size() != n) {
      throw StructureError("distance matrix row " + std::to_string(i) + " has " +
                           std::to_string(space.matrix()[i].size()) + " entries");
    }
  }

  ValidationReport report;
  auto push = [&](AxiomViolation::Kind kind, std::size_t i, std::size_t j, std::size_t k,
                  std::string message) {
    report.violations.push_back({kind, i, j, k, std::move(message)});
  };
  const auto& names = space.names();
  for (std::size_t i = 0; i < n; ++i) {
    if (space.dist(i, i) != 0) {
      push(AxiomViolation::Kind::nonzero_diagonal, i, i, i, "d(" + names[i] + "," + names[i] + ") != 0");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(space.dist(i, j)) < 0) {
        push(AxiomViolation::Kind::negative, i, j, j, "d(" + names[i] + "," + names[j] + ") < 0");
      }
      if (j > i && space.dist(i, j) != space.dist(j, i)) {
        push(AxiomViolation::Kind::asymmetric, i, j, j,
             "d(" + names[i] + "," + names[j] + ") != d(" + names[j] + "," + names[i] + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == k || j == k || i >= j) continue;
        if (space.dist(i, j) > space.dist(i, k) + space.dist(k, j)) {
          push(AxiomViolation::Kind::triangle, i, j, k,
               "d(" + names[i] + "," + names[j] + ") > d(" + names[i] + "," + names[k] + ") + d(" +
                   names[k] + "," + names[j] + ")");
        }
      }
    }
  }
  return report;
}

LinComb word_to_lincomb(const Word& w) {
  LinComb out(w.point_count(), w.basepoint());
  for (const auto& [index, value] : w.coeffs()) out.add(index, Rational(static_cast<long>(value)));
  return out;
}

std::int64_t letter_count(const Word& w) {
  std::int64_t total = 0;
  for (const auto& [index, value] : w.coeffs()) total += std::llabs(value);
  return total;
}

}  // namespace graev
