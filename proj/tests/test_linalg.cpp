#include <doctest.h>

#include <cmath>
#include <vector>

#include "fxpca/linalg.hpp"
#include "support/oracles.hpp"

using namespace fxpca;

namespace {

SymmetricOperator mat2(double a, double b, double c, double d) {
  const double data[] = {a, b, c, d};
  return SymmetricOperator::from_row_major(2, data);
}

}  // namespace

TEST_CASE("symmetric_eigen on [[2,1],[1,2]]") {
  const EigenSystem es = symmetric_eigen(mat2(2, 1, 1, 2));
  CHECK(es.eigenvalue(0) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(es.eigenvalue(1) == doctest::Approx(1.0).epsilon(1e-12));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Up to sign; the convention makes the dominant entry positive.
  const auto v0 = es.eigenvector(0);
  const auto v1 = es.eigenvector(1);
  CHECK(std::abs(std::abs(v0[0]) - inv_sqrt2) < 1e-10);
  CHECK(std::abs(v0[0] - v0[1]) < 1e-10);
  CHECK(std::abs(std::abs(v1[0]) - inv_sqrt2) < 1e-10);
  CHECK(std::abs(v1[0] + v1[1]) < 1e-10);
}

TEST_CASE("symmetric_eigen identity and diagonal") {
  const EigenSystem id = symmetric_eigen(SymmetricOperator::identity(3));
  for (std::size_t j = 0; j < 3; ++j) CHECK(id.eigenvalue(j) == doctest::Approx(1.0));

  const double diag[] = {5, 2, 0};
  const EigenSystem es = symmetric_eigen(SymmetricOperator::diagonal(diag));
  CHECK(es.eigenvalue(0) == doctest::Approx(5.0));
  CHECK(es.eigenvalue(1) == doctest::Approx(2.0));
  CHECK(es.eigenvalue(2) == doctest::Approx(0.0));
  CHECK(es.eigenvector(0)[0] == doctest::Approx(1.0));
  CHECK(es.eigenvector(1)[1] == doctest::Approx(1.0));
  CHECK(es.eigenvector(2)[2] == doctest::Approx(1.0));
}

TEST_CASE("eigen invariants on random symmetric matrices") {
  CounterRng rng(101, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng.next_u64() % 9);
    const SymmetricOperator a = oracle::random_symmetric(d, rng);
    const EigenSystem es = symmetric_eigen(a);
    const double norm = hs_norm(a);

    // Columns orthonormal.
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        double dot = 0.0;
        for (std::size_t r = 0; r < d; ++r) dot += es.eigenvector(i)[r] * es.eigenvector(j)[r];
        CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
      }
    }
    // Nonincreasing eigenvalues.
    for (std::size_t j = 0; j + 1 < d; ++j) CHECK(es.eigenvalue(j) >= es.eigenvalue(j + 1));
    // ||A q_j - lambda_j q_j|| small for each pair.
    double resid2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const auto q = es.eigenvector(j);
      for (std::size_t i = 0; i < d; ++i) {
        double av = 0.0;
        for (std::size_t r = 0; r < d; ++r) av += a(i, r) * q[r];
        const double diff = av - es.eigenvalue(j) * q[i];
        resid2 += diff * diff;
      }
    }
    CHECK(std::sqrt(resid2) <= 1e-8 * (1.0 + norm));
  }
}

TEST_CASE("eigenvalues match characteristic polynomial roots for d <= 3") {
  CounterRng rng(202, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + static_cast<std::size_t>(rng.next_u64() % 3);
    const SymmetricOperator a = oracle::random_symmetric(d, rng);
    const EigenSystem es = symmetric_eigen(a);
    const auto roots = oracle::char_poly_eigenvalues(a);
    for (std::size_t j = 0; j < d; ++j) CHECK(std::abs(es.eigenvalue(j) - roots[j]) < 1e-8);
  }
}

TEST_CASE("hs_norm basics") {
  CHECK(hs_norm(SymmetricOperator(2)) == 0.0);
  CHECK(hs_norm(SymmetricOperator::identity(2)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(hs_norm(mat2(2, 1, 1, 2)) == doctest::Approx(3.1622776601683795).epsilon(1e-14));
}

TEST_CASE("Weyl inequality on random pairs") {
  CounterRng rng(303, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng.next_u64() % 7);
    const SymmetricOperator a = oracle::random_symmetric(d, rng);
    const SymmetricOperator b = oracle::random_symmetric(d, rng);
    const EigenSystem ea = symmetric_eigen(a);
    const EigenSystem eb = symmetric_eigen(b);
    double max_gap = 0.0;
    for (std::size_t j = 0; j < d; ++j)
      max_gap = std::max(max_gap, std::abs(ea.eigenvalue(j) - eb.eigenvalue(j)));
    CHECK(max_gap <= hs_norm(a - b) + 1e-10);
  }
}

TEST_CASE("projection_matrix examples") {
  const Subspace e1(2, {1.0, 0.0});
  const SymmetricOperator p1 = projection_matrix(e1);
  CHECK(p1(0, 0) == doctest::Approx(1.0));
  CHECK(p1(0, 1) == doctest::Approx(0.0));
  CHECK(p1(1, 1) == doctest::Approx(0.0));

  const Subspace full(2, {1.0, 0.0, 0.0, 1.0});
  const SymmetricOperator pf = projection_matrix(full);
  CHECK(pf(0, 0) == doctest::Approx(1.0));
  CHECK(pf(1, 1) == doctest::Approx(1.0));
  CHECK(pf(0, 1) == doctest::Approx(0.0));

  const double s = 1.0 / std::sqrt(2.0);
  const Subspace diag(2, {s, s});
  const SymmetricOperator pd = projection_matrix(diag);
  CHECK(pd(0, 0) == doctest::Approx(0.5));
  CHECK(pd(0, 1) == doctest::Approx(0.5));
  CHECK(pd(1, 1) == doctest::Approx(0.5));
}

TEST_CASE("projector idempotence and trace on random subspaces") {
  CounterRng rng(404, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng.next_u64() % 7);
    const std::size_t p = 1 + static_cast<std::size_t>(rng.next_u64() % d);
    const Subspace v = oracle::random_subspace(d, p, rng);
    const SymmetricOperator proj = projection_matrix(v);
    CHECK(proj.trace() == doctest::Approx(static_cast<double>(p)).epsilon(1e-10));
    // P^2 = P entrywise.
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        double pij = 0.0;
        for (std::size_t r = 0; r < d; ++r) pij += proj(i, r) * proj(r, j);
        CHECK(std::abs(pij - proj(i, j)) < 1e-10);
      }
    }
  }
}

TEST_CASE("rho_distance examples") {
  const Subspace e1(3, {1, 0, 0});
  const Subspace e2(3, {0, 1, 0});
  CHECK(rho_distance(e1, e1) == doctest::Approx(0.0));
  CHECK(rho_distance(e1, e2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  const double s = 1.0 / std::sqrt(2.0);
  const Subspace mid(2, {s, s});
  const Subspace first(2, {1.0, 0.0});
  CHECK(rho_distance(first, mid) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(rho_distance(e1, first), DomainError);
}

TEST_CASE("rho_distance satisfies the trace identity") {
  // Oracle route: rho^2 = p + q - 2 ||B^T C||_F^2.
  CounterRng rng(505, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng.next_u64() % 6);
    const Subspace v = oracle::random_subspace(d, 1 + rng.next_u64() % d, rng);
    const Subspace w = oracle::random_subspace(d, 1 + rng.next_u64() % d, rng);
    double cross = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = 0; j < w.dim(); ++j) {
        double dot = 0.0;
        for (std::size_t r = 0; r < d; ++r)
          dot += v.basis_column(i)[r] * w.basis_column(j)[r];
        cross += dot * dot;
      }
    const double rho2_oracle =
        static_cast<double>(v.dim()) + static_cast<double>(w.dim()) - 2.0 * cross;
    const double rho = rho_distance(v, w);
    CHECK(std::abs(rho * rho - rho2_oracle) < 1e-9);
  }
}

TEST_CASE("rho_distance metric axioms and basis invariance") {
  CounterRng rng(606, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 3 + static_cast<std::size_t>(rng.next_u64() % 5);
    const std::size_t p = 1 + static_cast<std::size_t>(rng.next_u64() % (d - 1));
    const Subspace u = oracle::random_subspace(d, p, rng);
    const Subspace v = oracle::random_subspace(d, 1 + rng.next_u64() % (d - 1), rng);
    const Subspace w = oracle::random_subspace(d, 1 + rng.next_u64() % (d - 1), rng);
    CHECK(rho_distance(u, v) == rho_distance(v, u));  // symmetric exactly
    CHECK(rho_distance(u, w) <= rho_distance(u, v) + rho_distance(v, w) + 1e-12);

    // Rotate u's basis by a random orthonormal mix: the subspace is unchanged.
    if (p >= 2) {
      const double angle = rng.next_uniform() * 6.28;
      std::vector<double> rotated(d * p);
      for (std::size_t i = 0; i < d; ++i) {
        const double b0 = u.basis_column(0)[i];
        const double b1 = u.basis_column(1)[i];
        rotated[0 * d + i] = std::cos(angle) * b0 - std::sin(angle) * b1;
        rotated[1 * d + i] = std::sin(angle) * b0 + std::cos(angle) * b1;
      }
      for (std::size_t j = 2; j < p; ++j)
        for (std::size_t i = 0; i < d; ++i) rotated[j * d + i] = u.basis_column(j)[i];
      const Subspace u2(d, std::move(rotated));
      CHECK(std::abs(rho_distance(u, v) - rho_distance(u2, v)) < 1e-12);
    }
  }
}

TEST_CASE("rho upper bound sqrt(dimV + dimW)") {
  CounterRng rng(707, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng.next_u64() % 6);
    const std::size_t p = 1 + static_cast<std::size_t>(rng.next_u64() % d);
    const std::size_t q = 1 + static_cast<std::size_t>(rng.next_u64() % d);
    const Subspace v = oracle::random_subspace(d, p, rng);
    const Subspace w = oracle::random_subspace(d, q, rng);
    CHECK(rho_distance(v, w) <= std::sqrt(static_cast<double>(p + q)) + 1e-12);
  }
}

TEST_CASE("Subspace rejects non-orthonormal bases") {
  CHECK_THROWS_AS(Subspace(2, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(Subspace(2, {1.0, 0.0, 1.0, 0.0}), DomainError);
}
