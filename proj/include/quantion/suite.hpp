#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quantion/quantal.hpp"

namespace quantion {

struct VerificationReport {
  std::string algebra;
  std::string identity;  // jacobi | leibniz | petersen | assoc_beta | closure
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double max_residual = 0;
  double tol = kIdentityTol;

  /// NaN residuals never pass.
  bool pass() const { return max_residual <= tol; }
};

struct SuiteOptions {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  double tol = kIdentityTol;
  /// Worker threads; results do not depend on this.
  unsigned threads = 1;
};

/// Runs Jacobi, Leibniz and Petersen over `samples` seeded triples, plus
/// beta associativity for matrix realizations with a = +1.
/// Triple k uses sample indices 3k, 3k+1, 3k+2 of the algebra's stream.
std::vector<VerificationReport> run_suite(const MatrixAlgebra& A, const SuiteOptions& opts);
std::vector<VerificationReport> run_suite(const PoissonAlgebra& A, const SuiteOptions& opts);
std::vector<VerificationReport> run_suite(const AnyAlgebra& A, const SuiteOptions& opts);

/// Max closure residual of `composed` against `reference` over seeded pairs.
VerificationReport run_closure(const MatrixAlgebra& composed, const MatrixAlgebra& reference,
                               const SuiteOptions& opts);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace quantion
