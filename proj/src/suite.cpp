#include "quantion/suite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace quantion {

namespace {

// NaN counts as an infinitely bad residual so it can never hide inside a max.
double worst(double acc, double r) {
  if (std::isnan(r)) return std::numeric_limits<double>::infinity();
  return std::max(acc, r);
}

// Evaluates `checks` on items [0, count) and reduces each column by max.
// Max is order independent, so the split across threads cannot change the result.
template <class PerItem>
std::vector<double> parallel_max(std::uint64_t count, std::size_t columns, unsigned threads, PerItem per_item) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(count, 256))));
  std::vector<std::vector<double>> partial(threads, std::vector<double>(columns, 0.0));
  auto work = [&](unsigned t) {
    for (std::uint64_t k = t; k < count; k += threads) {
      const std::vector<double> r = per_item(k);
      for (std::size_t c = 0; c < columns; ++c) partial[t][c] = worst(partial[t][c], r[c]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::vector<double> out(columns, 0.0);
  for (const auto& p : partial)
    for (std::size_t c = 0; c < columns; ++c) out[c] = worst(out[c], p[c]);
  return out;
}

template <class E>
std::vector<VerificationReport> suite_impl(const BiAlgebra<E>& A, const SuiteOptions& opts, bool with_beta) {
  if (opts.samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::vector<std::string> names{"jacobi", "leibniz", "petersen"};
  if (with_beta) names.emplace_back("assoc_beta");

  const auto maxima = parallel_max(opts.samples, names.size(), opts.threads, [&](std::uint64_t k) {
    const E f = A.sample(opts.seed, 3 * k);
    const E g = A.sample(opts.seed, 3 * k + 1);
    const E h = A.sample(opts.seed, 3 * k + 2);
    std::vector<double> r{check_jacobi(A, f, g, h), check_leibniz(A, g, f, h), check_petersen(A, f, g, h)};
    if constexpr (std::is_same_v<E, Eigen::MatrixXcd>) {
      if (with_beta) r.push_back(check_beta_associativity(A, f, g, h));
    }
    return r;
  });

  std::vector<VerificationReport> reports;
  for (std::size_t i = 0; i < names.size(); ++i)
    reports.push_back({A.id, names[i], opts.samples, opts.seed, maxima[i], opts.tol});
  return reports;
}

}  // namespace

std::vector<VerificationReport> run_suite(const MatrixAlgebra& A, const SuiteOptions& opts) {
  return suite_impl(A, opts, A.a == 1);
}

std::vector<VerificationReport> run_suite(const PoissonAlgebra& A, const SuiteOptions& opts) {
  return suite_impl(A, opts, false);
}

std::vector<VerificationReport> run_suite(const AnyAlgebra& A, const SuiteOptions& opts) {
  return std::visit([&](const auto& alg) { return run_suite(alg, opts); }, A);
}

VerificationReport run_closure(const MatrixAlgebra& composed, const MatrixAlgebra& reference,
                               const SuiteOptions& opts) {
  if (opts.samples < 1) throw std::invalid_argument("samples must be >= 1");
  const auto maxima = parallel_max(opts.samples, 1, opts.threads, [&](std::uint64_t k) {
    const Eigen::MatrixXcd f = composed.sample(opts.seed, 2 * k);
    const Eigen::MatrixXcd g = composed.sample(opts.seed, 2 * k + 1);
    return std::vector<double>{check_closure(composed, reference, f, g)};
  });
  return {composed.id, "closure", opts.samples, opts.seed, maxima[0], opts.tol};
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass(); });
}

}  // namespace quantion
