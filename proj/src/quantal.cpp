#include "quantion/quantal.hpp"

#include <random>
#include <stdexcept>
#include <tuple>

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "sampling.hpp"

namespace quantion {

namespace {

using Eigen::MatrixXcd;
constexpr std::complex<double> kI{0.0, 1.0};

double relative(double residual, double scale) { return scale > 0 ? residual / scale : residual; }

MatrixAlgebra::Product jordan_product() {
  return [](const MatrixXcd& f, const MatrixXcd& g) -> MatrixXcd { return 0.5 * (f * g + g * f); };
}

// Commutator normalized so that Petersen holds with the given a (+1 or -1).
MatrixAlgebra::Product lie_product(int a) {
  if (a == 1) return [](const MatrixXcd& f, const MatrixXcd& g) -> MatrixXcd { return (f * g - g * f) / (2.0 * kI); };
  return [](const MatrixXcd& f, const MatrixXcd& g) -> MatrixXcd { return 0.5 * (f * g - g * f); };
}

double frobenius(const MatrixXcd& m) { return m.norm(); }

MatrixAlgebra matrix_realization(std::string id, int n, int a) {
  MatrixAlgebra alg;
  alg.id = std::move(id);
  alg.dimension = std::to_string(n) + "x" + std::to_string(n);
  alg.a = a;
  alg.unit = MatrixXcd::Identity(n, n);
  alg.sigma = jordan_product();
  alg.alpha = lie_product(a);
  alg.norm = frobenius;
  const bool complex_entries = a == 1;
  alg.sample = [n, complex_entries](std::uint64_t seed, std::uint64_t index) -> MatrixXcd {
    auto rng = detail::stream_rng(seed, index);
    std::normal_distribution<double> normal;
    MatrixXcd x(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const double re = normal(rng);
        const double im = complex_entries ? normal(rng) : 0.0;
        x(r, c) = {re, im};
      }
    return 0.5 * (x + x.adjoint());
  };
  return alg;
}

// F = sum_ij E_ij (x) F_ij; returns the nonzero (i, j, F_ij).
std::vector<std::tuple<int, int, MatrixXcd>> block_terms(const MatrixXcd& F, int n1, int n2) {
  if (F.rows() != n1 * n2 || F.cols() != n1 * n2)
    throw std::invalid_argument("element does not live in the composed space");
  std::vector<std::tuple<int, int, MatrixXcd>> terms;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      MatrixXcd blk = F.block(i * n2, j * n2, n2, n2);
      if (!blk.isZero(0.0)) terms.emplace_back(i, j, std::move(blk));
    }
  return terms;
}

MatrixXcd matrix_unit(int n, int i, int j) {
  MatrixXcd e = MatrixXcd::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

}  // namespace

MatrixAlgebra hermitian_algebra(int n, int a) {
  if (n < 2 || n > 8) throw std::invalid_argument("matrix dimension must be in [2, 8], got " + std::to_string(n));
  if (a == 1) return matrix_realization("hermitian:" + std::to_string(n), n, 1);
  if (a == -1) return matrix_realization("realsym:" + std::to_string(n), n, -1);
  throw std::invalid_argument("matrix realizations exist for a = +1 or a = -1 only");
}

MatrixAlgebra realsym_algebra(int n) { return hermitian_algebra(n, -1); }

MatrixAlgebra reference_algebra(int n, int a) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
  if (a != 1 && a != -1) throw std::invalid_argument("matrix realizations exist for a = +1 or a = -1 only");
  return matrix_realization("reference:" + std::to_string(n), n, a);
}

MatrixAlgebra scalar_algebra(int a) {
  if (a != 1 && a != -1) throw std::invalid_argument("scalar algebra needs a = +1 or a = -1");
  return matrix_realization("scalar", 1, a);
}

PoissonAlgebra poisson_algebra(int degree_cap) {
  if (degree_cap < 2) throw std::invalid_argument("poisson algebra needs degree cap >= 2");
  if (degree_cap > PolyObservable::kMaxDegreeCap / 4)
    throw std::invalid_argument("poisson degree cap too large for nested products");
  PoissonAlgebra alg;
  alg.id = "poisson:" + std::to_string(degree_cap);
  alg.dimension = "deg<=" + std::to_string(degree_cap);
  alg.a = 0;
  alg.unit = PolyObservable::constant(1.0);
  alg.sigma = [](const PolyObservable& f, const PolyObservable& g) { return f * g; };
  alg.alpha = [](const PolyObservable& f, const PolyObservable& g) { return poisson_bracket(f, g); };
  alg.norm = [](const PolyObservable& f) { return f.norm(); };
  alg.sample = [degree_cap](std::uint64_t seed, std::uint64_t index) {
    auto rng = detail::stream_rng(seed, index);
    std::uniform_int_distribution<int> coef(-3, 3);
    PolyObservable f(degree_cap);
    for (int t = 0; t <= degree_cap; ++t)
      for (int j = 0; j <= t; ++j) f.set_coeff(t - j, j, coef(rng));
    return f;
  };
  return alg;
}

template <class E>
double check_jacobi(const BiAlgebra<E>& A, const E& f, const E& g, const E& h) {
  const E r = E(A.alpha(A.alpha(f, g), h) + A.alpha(A.alpha(g, h), f) + A.alpha(A.alpha(h, f), g));
  return relative(A.norm(r), A.norm(f) * A.norm(g) * A.norm(h));
}

template <class E>
double check_leibniz(const BiAlgebra<E>& A, const E& g, const E& f, const E& h) {
  const E r = E(A.alpha(g, A.sigma(f, h)) - A.sigma(A.alpha(g, f), h) - A.sigma(f, A.alpha(g, h)));
  return relative(A.norm(r), A.norm(f) * A.norm(g) * A.norm(h));
}

template <class E>
double check_petersen(const BiAlgebra<E>& A, const E& f, const E& g, const E& h) {
  const E r = E(associator(A, f, g, h) - static_cast<double>(A.a) * A.alpha(g, A.alpha(h, f)));
  return relative(A.norm(r), A.norm(f) * A.norm(g) * A.norm(h));
}

template double check_jacobi(const MatrixAlgebra&, const MatrixXcd&, const MatrixXcd&, const MatrixXcd&);
template double check_leibniz(const MatrixAlgebra&, const MatrixXcd&, const MatrixXcd&, const MatrixXcd&);
template double check_petersen(const MatrixAlgebra&, const MatrixXcd&, const MatrixXcd&, const MatrixXcd&);
template double check_jacobi(const PoissonAlgebra&, const PolyObservable&, const PolyObservable&,
                             const PolyObservable&);
template double check_leibniz(const PoissonAlgebra&, const PolyObservable&, const PolyObservable&,
                              const PolyObservable&);
template double check_petersen(const PoissonAlgebra&, const PolyObservable&, const PolyObservable&,
                               const PolyObservable&);

MatrixXcd beta_from(const MatrixAlgebra& A, const MatrixXcd& f, const MatrixXcd& g) {
  if (A.a != 1) throw std::invalid_argument("beta = sigma + i alpha needs an elliptic (a = +1) algebra");
  return A.sigma(f, g) + kI * A.alpha(f, g);
}

double check_beta_associativity(const MatrixAlgebra& A, const MatrixXcd& f, const MatrixXcd& g,
                                const MatrixXcd& h) {
  const MatrixXcd r = beta_from(A, beta_from(A, f, g), h) - beta_from(A, f, beta_from(A, g, h));
  return relative(A.norm(r), A.norm(f) * A.norm(g) * A.norm(h));
}

MatrixAlgebra compose(const MatrixAlgebra& left, const MatrixAlgebra& right) {
  if (left.a != right.a)
    throw std::invalid_argument("cannot compose algebras with a = " + std::to_string(left.a) + " and a = " +
                                std::to_string(right.a));
  const int n1 = static_cast<int>(left.unit.rows());
  const int n2 = static_cast<int>(right.unit.rows());
  const double a = left.a;

  MatrixAlgebra out;
  out.id = "(" + left.id + ")x(" + right.id + ")";
  out.dimension = std::to_string(n1 * n2) + "x" + std::to_string(n1 * n2);
  out.a = left.a;
  out.unit = Eigen::kroneckerProduct(left.unit, right.unit).eval();
  out.norm = frobenius;

  // Each pair of blocks contributes s1 (x) s2 - a a1 (x) a2 (sigma) or a1 (x) s2 + s1 (x) a2 (alpha).
  auto combine = [=](bool symmetric) {
    return [=](const MatrixXcd& F, const MatrixXcd& G) -> MatrixXcd {
      MatrixXcd acc = MatrixXcd::Zero(n1 * n2, n1 * n2);
      const auto fs = block_terms(F, n1, n2);
      const auto gs = block_terms(G, n1, n2);
      for (const auto& [i, j, Fij] : fs) {
        const MatrixXcd Eij = matrix_unit(n1, i, j);
        for (const auto& [k, l, Gkl] : gs) {
          const MatrixXcd Ekl = matrix_unit(n1, k, l);
          const MatrixXcd s1 = left.sigma(Eij, Ekl), a1 = left.alpha(Eij, Ekl);
          const MatrixXcd s2 = right.sigma(Fij, Gkl), a2 = right.alpha(Fij, Gkl);
          if (symmetric)
            acc += Eigen::kroneckerProduct(s1, s2) - a * Eigen::kroneckerProduct(a1, a2);
          else
            acc += Eigen::kroneckerProduct(a1, s2) + Eigen::kroneckerProduct(s1, a2);
        }
      }
      return acc;
    };
  };
  out.sigma = combine(true);
  out.alpha = combine(false);

  out.sample = [=, ls = left.sample, rs = right.sample](std::uint64_t seed, std::uint64_t index) -> MatrixXcd {
    const std::uint64_t terms = 1 + index % 3;
    const std::uint64_t lseed = detail::mix(seed, 0x6c656674);
    const std::uint64_t rseed = detail::mix(seed, 0x72696768);
    MatrixXcd acc = MatrixXcd::Zero(n1 * n2, n1 * n2);
    for (std::uint64_t t = 0; t < terms; ++t)
      acc += Eigen::kroneckerProduct(ls(lseed, 3 * index + t), rs(rseed, 3 * index + t));
    return acc;
  };
  return out;
}

MatrixAlgebra compose(const AnyAlgebra& left, const AnyAlgebra& right) {
  const auto* l = std::get_if<MatrixAlgebra>(&left);
  const auto* r = std::get_if<MatrixAlgebra>(&right);
  if (l == nullptr || r == nullptr) throw std::invalid_argument("composition needs matrix realizations");
  return compose(*l, *r);
}

double check_closure(const MatrixAlgebra& alg, const MatrixAlgebra& reference, const MatrixXcd& f,
                     const MatrixXcd& g) {
  const double scale = alg.norm(f) * alg.norm(g);
  const double ds = (alg.sigma(f, g) - reference.sigma(f, g)).norm();
  const double da = (alg.alpha(f, g) - reference.alpha(f, g)).norm();
  return relative(std::max(ds, da), scale);
}

double jj_check(const MatrixAlgebra& A, const MatrixXcd& J) {
  if (J.rows() != A.unit.rows() || J.cols() != A.unit.cols())
    throw std::invalid_argument("J does not live in the algebra's matrix space");
  return (J * J + A.unit).norm();
}

std::vector<MatrixXcd> centralizer(const MatrixAlgebra& A, const MatrixXcd& J, const std::vector<MatrixXcd>& basis) {
  if (basis.empty()) throw std::invalid_argument("centralizer needs a non-empty basis");
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index len = basis.front().size();

  MatrixXcd span(len, k), image(len, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    const MatrixXcd& b = basis[static_cast<std::size_t>(c)];
    if (b.size() != len) throw std::invalid_argument("basis elements differ in shape");
    span.col(c) = b.reshaped();
    image.col(c) = A.alpha(J, b).reshaped();
  }

  auto rank_of = [](const Eigen::JacobiSVD<MatrixXcd>& svd) {
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return Eigen::Index{0};
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > kKernelTol * s(0)) ++r;
    return r;
  };

  if (rank_of(Eigen::JacobiSVD<MatrixXcd>(span)) != k)
    throw std::invalid_argument("centralizer basis is linearly dependent");

  const Eigen::JacobiSVD<MatrixXcd> svd(image, Eigen::ComputeFullV);
  const Eigen::Index r = rank_of(svd);
  const MatrixXcd& V = svd.matrixV();

  std::vector<MatrixXcd> kernel;
  for (Eigen::Index c = r; c < k; ++c) {
    MatrixXcd v = MatrixXcd::Zero(basis.front().rows(), basis.front().cols());
    for (Eigen::Index j = 0; j < k; ++j) v += V(j, c) * basis[static_cast<std::size_t>(j)];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

KahlerParts kahler_decompose(const Eigen::VectorXcd& phi, const Eigen::VectorXcd& psi, double hbar) {
  if (phi.size() != psi.size()) throw std::invalid_argument("state dimensions differ");
  if (!(hbar > 0)) throw std::invalid_argument("hbar must be positive");
  const std::complex<double> inner = phi.dot(psi);
  return {2.0 * hbar * inner.real(), 2.0 * hbar * inner.imag()};
}

}  // namespace quantion
