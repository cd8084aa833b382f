#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "quantion/poly.hpp"

namespace quantion {

/// Default relative tolerance for identity residuals.
inline constexpr double kIdentityTol = 1e-10;
/// Singular values at or below this fraction of the largest count as zero.
inline constexpr double kKernelTol = 1e-10;

/// A realization of a quantal algebra: element space, symmetric product sigma,
/// antisymmetric product alpha, composability class a and unit e.
///
/// Elements need +, - and multiplication by a double.
template <class Element>
struct BiAlgebra {
  using Product = std::function<Element(const Element&, const Element&)>;

  std::string id;
  std::string dimension;
  int a = 1;
  Element unit;
  Product sigma;
  Product alpha;
  /// Deterministic sampler: element number `index` of the stream named by `seed`.
  std::function<Element(std::uint64_t seed, std::uint64_t index)> sample;
  std::function<double(const Element&)> norm;
};

using MatrixAlgebra = BiAlgebra<Eigen::MatrixXcd>;
using PoissonAlgebra = BiAlgebra<PolyObservable>;
using AnyAlgebra = std::variant<MatrixAlgebra, PoissonAlgebra>;

/// a = +1: hermitian n x n matrices, sigma = {f,g}/2, alpha = [f,g]/(2i).
/// a = -1: real symmetric n x n matrices, sigma = {f,g}/2, alpha = [f,g]/2.
/// Products are taken in the full matrix algebra. Requires 2 <= n <= 8.
MatrixAlgebra hermitian_algebra(int n, int a);
MatrixAlgebra realsym_algebra(int n);
/// Standard matrix realization of any size n >= 1 (hermitian products for
/// a = +1, split products for a = -1). Serves as the Kronecker oracle for compose.
MatrixAlgebra reference_algebra(int n, int a);
/// One-dimensional algebra (1x1 matrices) with the products of hermitian_algebra.
MatrixAlgebra scalar_algebra(int a);

/// Polynomials in (x, p): sigma = product, alpha = Poisson bracket, a = 0.
/// Samples have integer coefficients in [-3, 3] and degree <= D, so every
/// identity check is exact. Requires D >= 2.
PoissonAlgebra poisson_algebra(int degree_cap);

/// Same realization with a different Petersen parameter.
template <class E>
BiAlgebra<E> with_a(BiAlgebra<E> alg, int a) {
  alg.a = a;
  alg.id += "[a=" + std::to_string(a) + "]";
  return alg;
}

/// Same realization with alpha multiplied by `factor`; used for sensitivity checks.
template <class E>
BiAlgebra<E> with_alpha_scale(BiAlgebra<E> alg, double factor) {
  alg.alpha = [inner = alg.alpha, factor](const E& f, const E& g) -> E { return factor * inner(f, g); };
  alg.id += "[alpha*" + std::to_string(factor) + "]";
  return alg;
}

/// Relative residual of (f a g) a h + (g a h) a f + (h a f) a g = 0.
template <class E>
double check_jacobi(const BiAlgebra<E>& A, const E& f, const E& g, const E& h);
/// Relative residual of g a (f s h) = (g a f) s h + f s (g a h).
template <class E>
double check_leibniz(const BiAlgebra<E>& A, const E& g, const E& f, const E& h);
/// Relative residual of (f s g) s h - f s (g s h) = a g a (h a f).
template <class E>
double check_petersen(const BiAlgebra<E>& A, const E& f, const E& g, const E& h);

/// The sigma associator [f, g, h].
template <class E>
E associator(const BiAlgebra<E>& A, const E& f, const E& g, const E& h) {
  return E(A.sigma(A.sigma(f, g), h) - A.sigma(f, A.sigma(g, h)));
}

/// f beta g = f sigma g + i f alpha g. Throws std::invalid_argument unless a = +1.
Eigen::MatrixXcd beta_from(const MatrixAlgebra& A, const Eigen::MatrixXcd& f, const Eigen::MatrixXcd& g);
/// Relative residual of (f beta g) beta h - f beta (g beta h).
double check_beta_associativity(const MatrixAlgebra& A, const Eigen::MatrixXcd& f, const Eigen::MatrixXcd& g,
                                const Eigen::MatrixXcd& h);

/// Tensor composition:
///   sigma_T = sigma1 (x) sigma2 - a alpha1 (x) alpha2
///   alpha_T = alpha1 (x) sigma2 + sigma1 (x) alpha2
/// on Kronecker matrices, extended bilinearly through the block decomposition
/// F = sum_ij E_ij (x) F_ij. Samples are sums of 1 to 3 product elements.
/// Throws std::invalid_argument when the a parameters differ.
MatrixAlgebra compose(const MatrixAlgebra& left, const MatrixAlgebra& right);
/// Throws std::invalid_argument for non-matrix realizations.
MatrixAlgebra compose(const AnyAlgebra& left, const AnyAlgebra& right);

/// Relative residual between the products of `alg` and those of `reference`
/// (max over sigma and alpha) on one pair.
double check_closure(const MatrixAlgebra& alg, const MatrixAlgebra& reference, const Eigen::MatrixXcd& f,
                     const Eigen::MatrixXcd& g);

/// |J J + e|_F with the matrix product.
double jj_check(const MatrixAlgebra& A, const Eigen::MatrixXcd& J);

/// Basis of {f in span(basis) : J alpha f = 0}. The basis must be linearly
/// independent; throws std::invalid_argument on an empty or dependent basis.
std::vector<Eigen::MatrixXcd> centralizer(const MatrixAlgebra& A, const Eigen::MatrixXcd& J,
                                          const std::vector<Eigen::MatrixXcd>& basis);

struct KahlerParts {
  double G;  ///< 2 hbar Re <phi, psi>, the metric part
  double W;  ///< 2 hbar Im <phi, psi>, the symplectic part
};

/// Splits <phi, psi> = G/(2 hbar) + i W/(2 hbar) with <.,.> antilinear in phi.
KahlerParts kahler_decompose(const Eigen::VectorXcd& phi, const Eigen::VectorXcd& psi, double hbar = 1.0);

}  // namespace quantion
