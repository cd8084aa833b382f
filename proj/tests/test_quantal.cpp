#include <gtest/gtest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "oracles.hpp"
#include "quantion/quantal.hpp"

using namespace quantion;
using Eigen::MatrixXcd;
using oracle::I;

namespace {

MatrixXcd pauli(int k) { return oracle::pauli(k); }

// Hand expansion of the sigma associator for sigma = {f,g}/2: (gfh + hfg - ghf - fhg)/4.
MatrixXcd associator_expansion(const MatrixXcd& f, const MatrixXcd& g, const MatrixXcd& h) {
  return 0.25 * (g * f * h + h * f * g - g * h * f - f * h * g);
}

// Dimension of the commutant of J inside span(basis), by LU rank of the commutator map.
Eigen::Index commutant_dimension(const MatrixXcd& J, const std::vector<MatrixXcd>& basis) {
  MatrixXcd map(J.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    map.col(static_cast<Eigen::Index>(k)) = (J * basis[k] - basis[k] * J).reshaped();
  Eigen::FullPivLU<MatrixXcd> lu(map);
  lu.setThreshold(1e-10);
  return static_cast<Eigen::Index>(basis.size()) - lu.rank();
}

std::vector<MatrixXcd> matrix_units(int n) {
  std::vector<MatrixXcd> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatrixXcd e = MatrixXcd::Zero(n, n);
      e(i, j) = 1.0;
      out.push_back(e);
    }
  return out;
}

}  // namespace

TEST(Hermitian, ProductsAndUnit) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  EXPECT_EQ(A.a, 1);
  const MatrixXcd f = pauli(3);
  EXPECT_EQ(A.sigma(A.unit, f), f);
  EXPECT_EQ(A.sigma(f, A.unit), f);
  EXPECT_TRUE(A.alpha(A.unit, f).isZero(0.0));
  // alpha(s1, s2) = [s1, s2]/(2i) = s3
  EXPECT_TRUE(A.alpha(pauli(1), pauli(2)).isApprox(pauli(3)));
}

TEST(Hermitian, DimensionRange) {
  EXPECT_THROW(hermitian_algebra(1, 1), std::invalid_argument);
  EXPECT_THROW(hermitian_algebra(9, 1), std::invalid_argument);
  EXPECT_THROW(hermitian_algebra(2, 0), std::invalid_argument);
  EXPECT_NO_THROW(hermitian_algebra(8, 1));
}

TEST(Hermitian, SamplesAreHermitianAndDeterministic) {
  const MatrixAlgebra A = hermitian_algebra(3, 1);
  const MatrixXcd f = A.sample(42, 7);
  EXPECT_TRUE(f.isApprox(f.adjoint(), 0.0));
  EXPECT_EQ(f, A.sample(42, 7));
  EXPECT_NE(f, A.sample(42, 8));
  EXPECT_NE(f, A.sample(43, 7));
  const MatrixXcd s = realsym_algebra(3).sample(1, 0);
  EXPECT_TRUE(s.imag().isZero(0.0));
  EXPECT_EQ(s, s.transpose());
}

TEST(Hermitian, SymmetryOfProducts) {
  const MatrixAlgebra A = hermitian_algebra(3, 1);
  for (std::uint64_t k = 0; k < 100; ++k) {
    const MatrixXcd f = A.sample(5, 2 * k), g = A.sample(5, 2 * k + 1);
    EXPECT_TRUE(A.sigma(f, g).isApprox(A.sigma(g, f), 1e-14));
    EXPECT_TRUE(A.alpha(f, g).isApprox(-A.alpha(g, f), 1e-14));
  }
}

TEST(Petersen, HandExpansionMatchesBothSides) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  oracle::Rng rng(11);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const MatrixXcd f = rng.hermitian(2), g = rng.hermitian(2), h = rng.hermitian(2);
    const MatrixXcd expansion = associator_expansion(f, g, h);
    EXPECT_LE((associator(A, f, g, h) - expansion).norm(), 1e-13 * f.norm() * g.norm() * h.norm());
    EXPECT_LE((A.alpha(g, A.alpha(h, f)) - expansion).norm(), 1e-13 * f.norm() * g.norm() * h.norm());
    worst = std::max(worst, check_petersen(A, f, g, h));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Petersen, EqualArgumentsVanish) {
  const MatrixAlgebra A = hermitian_algebra(3, 1);
  const MatrixXcd f = A.sample(3, 0);
  EXPECT_TRUE(associator(A, f, f, f).isZero(1e-12));
  EXPECT_LE(check_petersen(A, f, f, f), 1e-15);
}

TEST(Petersen, HermitianFourByFour) {
  const MatrixAlgebra A = hermitian_algebra(4, 1);
  double worst = 0;
  for (std::uint64_t k = 0; k < 1000; ++k)
    worst = std::max(worst, check_petersen(A, A.sample(9, 3 * k), A.sample(9, 3 * k + 1), A.sample(9, 3 * k + 2)));
  EXPECT_LE(worst, 1e-10);
}

TEST(Petersen, SplitRealizationDetectsWrongA) {
  const MatrixAlgebra split = realsym_algebra(2);
  const MatrixAlgebra wrong = with_a(split, 1);
  oracle::Rng rng(12);
  double right_worst = 0, wrong_worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const MatrixXcd f = rng.symmetric(2), g = rng.symmetric(2), h = rng.symmetric(2);
    // With alpha = [.,.]/2 the double bracket is minus the associator expansion.
    EXPECT_LE((split.alpha(g, split.alpha(h, f)) + associator_expansion(f, g, h)).norm(),
              1e-13 * f.norm() * g.norm() * h.norm());
    right_worst = std::max(right_worst, check_petersen(split, f, g, h));
    wrong_worst = std::max(wrong_worst, check_petersen(wrong, f, g, h));
  }
  EXPECT_LE(right_worst, 1e-10);
  EXPECT_GE(wrong_worst, 1e-3);
}

TEST(Jacobi, HermitianThree) {
  const MatrixAlgebra A = hermitian_algebra(3, 1);
  for (std::uint64_t k = 0; k < 500; ++k)
    ASSERT_LE(check_jacobi(A, A.sample(1, 3 * k), A.sample(1, 3 * k + 1), A.sample(1, 3 * k + 2)), 1e-10);
  const MatrixXcd f = A.sample(2, 0), h = A.sample(2, 1);
  EXPECT_LE(check_jacobi(A, f, f, h), 1e-15);
}

TEST(Leibniz, UnitAndRandom) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  const MatrixXcd f = A.sample(4, 0), h = A.sample(4, 1);
  EXPECT_EQ(check_leibniz(A, A.unit, f, h), 0.0);
  for (std::uint64_t k = 0; k < 500; ++k)
    ASSERT_LE(check_leibniz(A, A.sample(6, 3 * k), A.sample(6, 3 * k + 1), A.sample(6, 3 * k + 2)), 1e-10);
}

TEST(Poisson, Examples) {
  const PoissonAlgebra A = poisson_algebra(3);
  const PolyObservable x = PolyObservable::x(), p = PolyObservable::p();
  EXPECT_EQ(A.a, 0);
  EXPECT_EQ(A.alpha(x, p), PolyObservable::constant(1));
  EXPECT_EQ(A.sigma(A.unit, x * p), x * p);
  EXPECT_EQ(check_jacobi(A, x * x, x * p, p * p), 0.0);
  EXPECT_EQ(check_jacobi(A, x, p, x * p), 0.0);
  EXPECT_EQ(check_leibniz(A, p, x * x, x), 0.0);
  EXPECT_THROW(poisson_algebra(1), std::invalid_argument);
}

TEST(Poisson, IdentitiesExactOnMonomialsUpToDegreeThree) {
  const PoissonAlgebra A = poisson_algebra(3);
  std::vector<PolyObservable> monomials;
  for (int t = 0; t <= 3; ++t)
    for (int j = 0; j <= t; ++j) monomials.push_back(PolyObservable::monomial(t - j, j));
  for (const auto& f : monomials)
    for (const auto& g : monomials)
      for (const auto& h : monomials) {
        ASSERT_EQ(check_petersen(A, f, g, h), 0.0);
        ASSERT_EQ(check_jacobi(A, f, g, h), 0.0);
        ASSERT_EQ(check_leibniz(A, g, f, h), 0.0);
      }
}

TEST(Poisson, RandomSamplesExact) {
  const PoissonAlgebra A = poisson_algebra(4);
  for (std::uint64_t k = 0; k < 200; ++k) {
    const PolyObservable f = A.sample(3, 3 * k), g = A.sample(3, 3 * k + 1), h = A.sample(3, 3 * k + 2);
    ASSERT_EQ(check_petersen(A, f, g, h), 0.0);
    ASSERT_EQ(check_jacobi(A, f, g, h), 0.0);
    ASSERT_EQ(check_leibniz(A, g, f, h), 0.0);
  }
}

TEST(BetaFrom, ReproducesMatrixProduct) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  oracle::Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const MatrixXcd f = rng.hermitian(2), g = rng.hermitian(2), h = rng.hermitian(2);
    EXPECT_LE((beta_from(A, f, g) - f * g).norm(), 1e-14 * f.norm() * g.norm());
    EXPECT_LE(check_beta_associativity(A, f, g, h), 1e-10);
  }
  const MatrixXcd g = rng.hermitian(2);
  EXPECT_TRUE(beta_from(A, A.unit, g).isApprox(g, 1e-15));
}

TEST(BetaFrom, RejectsNonElliptic) {
  const MatrixAlgebra A = realsym_algebra(2);
  EXPECT_THROW(beta_from(A, A.unit, A.unit), std::invalid_argument);
}

TEST(Compose, KroneckerOracleHermitian) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  const MatrixAlgebra T = compose(A, A);
  EXPECT_EQ(T.unit, MatrixXcd::Identity(4, 4));
  for (std::uint64_t k = 0; k < 300; ++k) {
    const MatrixXcd F = T.sample(1, 2 * k), G = T.sample(1, 2 * k + 1);
    const double scale = F.norm() * G.norm();
    EXPECT_LE((T.sigma(F, G) - 0.5 * (F * G + G * F)).norm(), 1e-13 * scale);
    EXPECT_LE((T.alpha(F, G) - (F * G - G * F) / (2.0 * I)).norm(), 1e-13 * scale);
    EXPECT_LE((T.sigma(T.unit, F) - F).norm(), 1e-14 * F.norm());
  }
}

TEST(Compose, ProductElementsFollowTensorRule) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  const MatrixAlgebra B = hermitian_algebra(3, 1);
  const MatrixAlgebra T = compose(A, B);
  const MatrixXcd f1 = A.sample(1, 0), g1 = A.sample(1, 1), f2 = B.sample(1, 0), g2 = B.sample(1, 1);
  const MatrixXcd F = Eigen::kroneckerProduct(f1, f2), G = Eigen::kroneckerProduct(g1, g2);
  const MatrixXcd sigma_rule = Eigen::kroneckerProduct(A.sigma(f1, g1), B.sigma(f2, g2)) -
                               MatrixXcd(Eigen::kroneckerProduct(A.alpha(f1, g1), B.alpha(f2, g2)));
  const MatrixXcd alpha_rule = Eigen::kroneckerProduct(A.alpha(f1, g1), B.sigma(f2, g2)) +
                               MatrixXcd(Eigen::kroneckerProduct(A.sigma(f1, g1), B.alpha(f2, g2)));
  EXPECT_LE((T.sigma(F, G) - sigma_rule).norm(), 1e-13 * F.norm() * G.norm());
  EXPECT_LE((T.alpha(F, G) - alpha_rule).norm(), 1e-13 * F.norm() * G.norm());
}

TEST(Compose, ClosureHermitian) {
  const MatrixAlgebra T = compose(hermitian_algebra(2, 1), hermitian_algebra(2, 1));
  double worst = 0;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const MatrixXcd f = T.sample(2, 3 * k), g = T.sample(2, 3 * k + 1), h = T.sample(2, 3 * k + 2);
    worst = std::max({worst, check_jacobi(T, f, g, h), check_leibniz(T, g, f, h), check_petersen(T, f, g, h)});
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Compose, SplitPairKeepsNegativeA) {
  const MatrixAlgebra T = compose(realsym_algebra(2), realsym_algebra(2));
  EXPECT_EQ(T.a, -1);
  double worst = 0;
  for (std::uint64_t k = 0; k < 300; ++k) {
    const MatrixXcd F = T.sample(3, 3 * k), G = T.sample(3, 3 * k + 1), H = T.sample(3, 3 * k + 2);
    EXPECT_LE((T.alpha(F, G) - 0.5 * (F * G - G * F)).norm(), 1e-13 * F.norm() * G.norm());
    worst = std::max(worst, check_petersen(T, F, G, H));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Compose, TrivialFactorIsIdentity) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  const MatrixAlgebra T = compose(A, scalar_algebra(1));
  const MatrixXcd f = A.sample(1, 0), g = A.sample(1, 1);
  EXPECT_LE((T.sigma(f, g) - A.sigma(f, g)).norm(), 1e-14 * f.norm() * g.norm());
  EXPECT_LE((T.alpha(f, g) - A.alpha(f, g)).norm(), 1e-14 * f.norm() * g.norm());
}

TEST(Compose, Errors) {
  EXPECT_THROW(compose(hermitian_algebra(2, 1), realsym_algebra(2)), std::invalid_argument);
  EXPECT_THROW(compose(AnyAlgebra{hermitian_algebra(2, 1)}, AnyAlgebra{poisson_algebra(2)}), std::invalid_argument);
  const MatrixAlgebra T = compose(hermitian_algebra(2, 1), hermitian_algebra(2, 1));
  EXPECT_THROW(T.sigma(MatrixXcd::Identity(3, 3), MatrixXcd::Identity(3, 3)), std::invalid_argument);
}

TEST(JJ, Examples) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  EXPECT_EQ(jj_check(A, I * pauli(0)), 0.0);
  EXPECT_EQ(jj_check(A, I * pauli(3)), 0.0);
  EXPECT_NEAR(jj_check(A, pauli(1)), 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_THROW(jj_check(A, MatrixXcd::Identity(3, 3)), std::invalid_argument);
}

TEST(Centralizer, DiagonalJ) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  const MatrixXcd J = I * pauli(3);
  const auto basis = matrix_units(2);
  const auto c = centralizer(A, J, basis);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(static_cast<Eigen::Index>(c.size()), commutant_dimension(J, basis));
  for (const auto& v : c) {
    EXPECT_LE(std::abs(v(0, 1)) + std::abs(v(1, 0)), 1e-12);
    EXPECT_LE(A.alpha(J, v).norm(), 1e-10 * J.norm() * v.norm());
  }
}

TEST(Centralizer, UnitCommutesWithEverything) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  EXPECT_EQ(centralizer(A, I * pauli(0), matrix_units(2)).size(), 4u);
}

TEST(Centralizer, RandomJMatchesRankNullity) {
  for (int n : {2, 3}) {
    const MatrixAlgebra A = hermitian_algebra(n, 1);
    const auto basis = matrix_units(n);
    for (std::uint64_t k = 0; k < 20; ++k) {
      const MatrixXcd J = I * A.sample(77, k);
      const auto c = centralizer(A, J, basis);
      EXPECT_EQ(static_cast<Eigen::Index>(c.size()), commutant_dimension(J, basis));
      for (const auto& v : c) EXPECT_LE(A.alpha(J, v).norm(), 1e-10 * J.norm() * v.norm());
    }
  }
}

TEST(Centralizer, Errors) {
  const MatrixAlgebra A = hermitian_algebra(2, 1);
  EXPECT_THROW(centralizer(A, pauli(3), {}), std::invalid_argument);
  EXPECT_THROW(centralizer(A, pauli(3), {pauli(1), 2.0 * pauli(1)}), std::invalid_argument);
}

TEST(Kahler, Examples) {
  Eigen::VectorXcd e(2), ie(2);
  e << 1, 0;
  ie << I, 0;
  const KahlerParts same = kahler_decompose(e, e);
  EXPECT_EQ(same.G, 2.0);
  EXPECT_EQ(same.W, 0.0);
  const KahlerParts rotated = kahler_decompose(e, ie, 0.5);
  EXPECT_EQ(rotated.G, 0.0);
  EXPECT_EQ(rotated.W, 1.0);
  EXPECT_THROW(kahler_decompose(e, Eigen::VectorXcd(3)), std::invalid_argument);
  EXPECT_THROW(kahler_decompose(e, e, 0.0), std::invalid_argument);
}

TEST(Kahler, MetricIsSymplecticOfRotated) {
  oracle::Rng rng(14);
  for (int i = 0; i < 1000; ++i) {
    Eigen::VectorXcd phi(3), psi(3);
    for (int k = 0; k < 3; ++k) {
      phi(k) = rng.complex();
      psi(k) = rng.complex();
    }
    const KahlerParts k = kahler_decompose(phi, psi);
    const KahlerParts rot = kahler_decompose(phi, I * psi);
    EXPECT_NEAR(k.G, rot.W, 1e-12 * phi.norm() * psi.norm());
    // J^2 = -1
    const KahlerParts rot2 = kahler_decompose(phi, I * (I * psi));
    EXPECT_NEAR(rot2.G, -k.G, 1e-12 * phi.norm() * psi.norm());
    const std::complex<double> inner = phi.dot(psi);
    EXPECT_NEAR(std::abs(inner - std::complex<double>(k.G / 2, k.W / 2)), 0.0, 1e-12 * phi.norm() * psi.norm());
  }
}

TEST(Residuals, ScaleInvariant) {
  const MatrixAlgebra A = with_alpha_scale(hermitian_algebra(2, 1), 1.01);
  const MatrixXcd f = A.sample(1, 0), g = A.sample(1, 1), h = A.sample(1, 2);
  const double base = check_petersen(A, f, g, h);
  for (double lambda : {1e-3, 7.0, 1e4}) {
    const MatrixXcd lf = lambda * f, lg = lambda * g, lh = lambda * h;
    EXPECT_NEAR(check_petersen(A, lf, lg, lh), base, 1e-10 * base);
  }
}
