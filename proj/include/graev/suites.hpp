#pragma once

#include <cstdint>
#include <string>

#include "graev/io.hpp"
#include "graev/random_instances.hpp"
#include "graev/report.hpp"
#include "graev/rolewicz.hpp"

/// Seeded property sweeps. Each section draws from its own generator derived
/// from (seed, section name), so adding a section never shifts another one.
namespace graev::suites {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::int64_t coeff_bound = 2;
  Rational grid{1, 512};
  rolewicz::PowerConvention convention = rolewicz::PowerConvention::from_one;
};

random::Rng section_rng(std::uint64_t seed, const std::string& section);

/// Validation, norm extension, Graev/free-seminorm equality, brute-force
/// agreement, LP duality, seminorm axioms, isometric embedding of words,
/// maximality and Lipschitz extension on one space.
void space_checks(RunReport& report, const PointedSpace& space, const std::string& label, const SuiteOptions& options);

/// Circle metric, independence, Kronecker search and net certification.
void torus_checks(RunReport& report, const SuiteOptions& options);

/// Builds and re-verifies generators for depths 1..max_depth with default
/// weights, then approximates random grid targets at the deepest level.
void rolewicz_checks(RunReport& report, const SuiteOptions& options, std::size_t max_depth);

/// Separation, discreteness, density, periodicity and quotient isometry below
/// scale 1, once per metric listed in the model file.
void embedding_checks(RunReport& report, const io::EmbeddingModelFile& file, const std::string& label,
                      const SuiteOptions& options);

}  // namespace graev::suites
