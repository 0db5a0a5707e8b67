#include "doctest.h"

#include "seifert/exactalg.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace seifert;

namespace {

IntMatrix random_matrix(gen::Rng& rng, std::size_t n, long lo, long hi) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gen::uniform(rng, lo, hi);
  return m;
}

IntMatrix random_symmetric(gen::Rng& rng, std::size_t n, long lo, long hi) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = gen::uniform(rng, lo, hi);
  return m;
}

bool reduces_to_hyperbolic_mod2(const IntMatrix& w) {
  const IntMatrix h = hyperbolic_planes(w.dim() / 2);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j)
      if ((mpz_odd_p(w(i, j).get_mpz_t()) ? 1 : 0) != h(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("congruence_apply examples") {
  const IntMatrix m{{0, 1}, {0, 0}};
  CHECK(congruence_apply(m, IntMatrix::identity(2)) == m);

  const IntMatrix s{{1, 1}, {0, 1}};
  // expected value from the explicit index-sum oracle, frozen
  CHECK(oracle::congruence_by_sums(m, s) == IntMatrix{{1, 1}, {0, 0}});
  CHECK(congruence_apply(m, s) == IntMatrix{{1, 1}, {0, 0}});

  CHECK(congruence_apply(IntMatrix{{2, 1}, {1, 2}}, IntMatrix{{1, 0}, {-1, 1}}) ==
        IntMatrix{{2, -1}, {-1, 2}});
  CHECK_THROWS_AS(congruence_apply(m, IntMatrix::identity(3)), Error);
}

TEST_CASE("congruence composes") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const IntMatrix m = random_matrix(rng, n, -4, 4);
    const IntMatrix s1 = gen::unimodular(rng, n), s2 = gen::unimodular(rng, n);
    CHECK(congruence_apply(m, s1 * s2) == congruence_apply(congruence_apply(m, s2), s1));
    CHECK(congruence_apply(m, s1) == oracle::congruence_by_sums(m, s1));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
  CHECK(determinant(IntMatrix{{2, 1}, {1, 2}}) == 3);
  CHECK(determinant(IntMatrix()) == 1);
  CHECK(determinant(IntMatrix{{0, 0}, {0, 5}}) == 0);

  gen::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    const IntMatrix m = random_matrix(rng, n, -3, 3);
    CHECK(determinant(m) == oracle::laplace_determinant(m));
    const IntMatrix s = gen::unimodular(rng, n);
    CHECK(determinant(congruence_apply(m, s)) == determinant(m));
  }
}

TEST_CASE("is_unimodular") {
  CHECK(is_unimodular(IntMatrix{{0, 1}, {1, 0}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  const IntMatrix a{{1, 1}, {0, 1}};
  CHECK_FALSE(is_unimodular(a + a.transpose()));
}

TEST_CASE("signature_symmetric examples") {
  CHECK(signature_symmetric(IntMatrix{{2, 1}, {1, 2}}) == SignatureTriple{2, 0, 0});
  CHECK(signature_symmetric(IntMatrix{{0, 1}, {1, 0}}) == SignatureTriple{1, 1, 0});
  CHECK(signature_symmetric(IntMatrix(3)) == SignatureTriple{0, 0, 3});
  CHECK(signature_symmetric(IntMatrix{{-2, 1}, {1, -2}}) == SignatureTriple{0, 2, 0});
  CHECK_THROWS_AS(signature_symmetric(IntMatrix{{0, 1}, {0, 0}}), Error);

  const auto e = oracle::eigenvalue_signs(IntMatrix{{2, 1}, {1, 2}});
  CHECK(e.positive == 2);
  CHECK(e.negative == 0);
}

TEST_CASE("signature agrees with the eigenvalue-sign oracle") {
  gen::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 8));
    IntMatrix m = random_symmetric(rng, n, -3, 3);
    if (trial % 3 == 0) {
      // force a kernel: duplicate a row and column
      for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = m(0, c);
      for (std::size_t r = 0; r < n; ++r) m(r, n - 1) = m(r, 0);
      m(n - 1, n - 1) = m(0, 0);
    }
    if (trial % 5 == 0)
      for (std::size_t i = 0; i < n; ++i) m(i, i) = 0;
    const SignatureTriple got = signature_symmetric(m);
    const auto want = oracle::eigenvalue_signs(m);
    CHECK(got.positive == want.positive);
    CHECK(got.negative == want.negative);
    CHECK(got.zero == want.zero);
    CHECK(got.positive + got.negative + got.zero == n);

    const IntMatrix s = gen::unimodular(rng, n);
    CHECK(signature_symmetric(congruence_apply(m, s)) == got);
  }
}

TEST_CASE("symplectic_basis_mod2") {
  const auto w1 = symplectic_basis_mod2(IntMatrix{{0, 1}, {-1, 0}});
  CHECK(w1.transform == IntMatrix::identity(2));
  CHECK(w1.log.empty());
  const auto w2 = symplectic_basis_mod2(IntMatrix{{0, 3}, {-3, 0}});
  CHECK(w2.transform == IntMatrix::identity(2));

  // intersection form of [[1,1],[0,1]] ⊕ [[1,1],[0,1]]
  const IntMatrix a = direct_sum(IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, 1}, {0, 1}});
  const IntMatrix j = a - a.transpose();
  const auto w = symplectic_basis_mod2(j);
  CHECK(w.is_consistent());
  CHECK(reduces_to_hyperbolic_mod2(congruence_apply(j, w.transform)));

  CHECK_THROWS_AS(symplectic_basis_mod2(IntMatrix(3)), Error);
  CHECK_THROWS_AS(symplectic_basis_mod2(IntMatrix{{0, 2}, {-2, 0}}), Error);
  CHECK_THROWS_AS(symplectic_basis_mod2(IntMatrix{{1, 1}, {-1, 0}}), Error);
}

TEST_CASE("symplectic_basis_mod2 replay on random forms") {
  gen::Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 * static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const IntMatrix j = intersection_form(gen::knot(rng, 0, dim));
    const auto w = symplectic_basis_mod2(j);
    CHECK(w.is_consistent());
    CHECK(reduces_to_hyperbolic_mod2(congruence_apply(j, w.transform)));
  }
}

TEST_CASE("witness log inverts") {
  gen::Rng rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 6));
    CongruenceTracker tr({IntMatrix(n)});
    for (int step = 0; step < 20; ++step) {
      const auto i = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(n) - 1));
      const auto j = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(n) - 1));
      switch (gen::uniform(rng, 0, 2)) {
        case 0: if (i != j) tr.add_multiple(i, j, gen::uniform(rng, -3, 3)); break;
        case 1: tr.swap(i, j); break;
        default: tr.negate(i);
      }
    }
    const auto& w = tr.witness();
    CHECK(w.is_consistent());
    CHECK(w.transform * w.inverse() == IntMatrix::identity(n));
  }
}

TEST_CASE("spans_primitive_sublattice") {
  CHECK(spans_primitive_sublattice({}));
  CHECK(spans_primitive_sublattice({{1, 0, 0}}));
  CHECK(spans_primitive_sublattice({{2, 3}}));
  CHECK_FALSE(spans_primitive_sublattice({{2, 0}}));
  CHECK_FALSE(spans_primitive_sublattice({{1, 1}, {1, -1}}));
  CHECK(spans_primitive_sublattice({{1, 1, 0}, {0, 1, 1}}));
  CHECK_FALSE(spans_primitive_sublattice({{1, 2, 3}, {2, 4, 6}}));
  CHECK_FALSE(spans_primitive_sublattice({{1, 0}, {0, 1}, {1, 1}}));
}
