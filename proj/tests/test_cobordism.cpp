#include "doctest.h"

#include <algorithm>

#include "seifert/cobordism.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace seifert;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

// gcd of the maximal minors by Laplace expansion, stopping once it is 1.
mpz_class minor_gcd(const std::vector<IntVector>& rows) {
  const std::size_t m = rows.size(), n = rows.empty() ? 0 : rows[0].size();
  if (m == 0) return 1;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
  mpz_class g = 0;
  do {
    IntMatrix sq(m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (pick[c]) sq(r, cc++) = rows[r][c];
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), oracle::laplace_determinant(sq).get_mpz_t());
    if (g == 1) break;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

// Independent validity check of a claimed metabolizer.
bool oracle_metabolizer(const Metabolizer& w) {
  const IntMatrix& m = w.context;
  if (2 * w.vectors.size() != m.dim()) return false;
  for (const auto& u : w.vectors)
    for (const auto& v : w.vectors) {
      mpz_class acc = 0;
      for (std::size_t a = 0; a < m.dim(); ++a)
        for (std::size_t b = 0; b < m.dim(); ++b) acc += u[a] * m(a, b) * v[b];
      if (acc != 0) return false;
    }
  return minor_gcd(w.vectors) == 1;
}

}  // namespace

TEST_CASE("cobordism_block") {
  CHECK(cobordism_block(SeifertKnot::trivial(1), SeifertKnot::trivial(1)).empty());
  const SeifertKnot t = validate(1, IntMatrix{{0, 1}, {0, 0}});
  CHECK(cobordism_block(t, t) ==
        IntMatrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}});
  gen::Rng rng(51);
  const SeifertKnot a = gen::knot(rng, 1, 4), b = gen::knot(rng, 1, 6);
  CHECK(cobordism_block(a, b).dim() == 10);
  CHECK(kind_of([&] { cobordism_block(a, gen::knot(rng, 2, 4)); }) == ErrorKind::ParityMismatch);
}

TEST_CASE("metabolizer validation") {
  const IntMatrix m = cobordism_block(SeifertKnot::trivial_blocks(1, 1), SeifertKnot::trivial_blocks(1, 1));
  CHECK(is_valid_metabolizer(Metabolizer{{{1, 0, 1, 0}, {0, 1, 0, 1}}, m}));
  CHECK_FALSE(is_valid_metabolizer(Metabolizer{{{1, 0, 1, 0}}, m}));
  CHECK_FALSE(is_valid_metabolizer(Metabolizer{{{1, 0, 1, 0}, {0, 2, 0, 2}}, m}));
  CHECK_FALSE(is_valid_metabolizer(Metabolizer{{{1, 0, 1, 0}, {0, 1, 0, 0}}, m}));
  CHECK(is_valid_metabolizer(Metabolizer{{}, IntMatrix()}));
}

TEST_CASE("validator primitivity agrees with column reduction") {
  gen::Rng rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    std::vector<IntVector> rows(m, IntVector(2 * m));
    for (auto& r : rows)
      for (auto& x : r) x = gen::uniform(rng, -2, 2);
    // zero form: only the count and primitivity matter
    const Metabolizer w{rows, IntMatrix(2 * m)};
    const bool prim = minor_gcd(rows) == 1;
    CHECK(is_valid_metabolizer(w) == prim);
    CHECK(spans_primitive_sublattice(rows) == prim);
  }
}

TEST_CASE("find_metabolizer on (K, K) at bound 1") {
  const SeifertKnot t = SeifertKnot::trivial_blocks(1, 2);
  const CobordismVerdict tv = find_metabolizer(cobordism_block(t, t), 1);
  REQUIRE(tv.status == CobordismStatus::Cobordant);
  CHECK(oracle_metabolizer(*tv.witness));

  gen::Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned k = static_cast<unsigned>(gen::uniform(rng, 0, 3));
    const SeifertKnot kn = gen::knot(rng, k, 2 * static_cast<std::size_t>(gen::uniform(rng, 1, 4)));
    const CobordismVerdict v = find_metabolizer(cobordism_block(kn, kn), 1);
    REQUIRE(v.status == CobordismStatus::Cobordant);
    CHECK(is_valid_metabolizer(*v.witness));
    CHECK(oracle_metabolizer(*v.witness));
    CHECK(v.witness->context == cobordism_block(kn, kn));
  }
}

TEST_CASE("find_metabolizer edge cases") {
  const CobordismVerdict empty = find_metabolizer(IntMatrix(), 1);
  CHECK(empty.status == CobordismStatus::Cobordant);
  CHECK(empty.witness->vectors.empty());
  CHECK(kind_of([] { find_metabolizer(IntMatrix(3), 1); }) == ErrorKind::OddDimension);
  CHECK(kind_of([] { find_metabolizer(IntMatrix(2), 0); }) == ErrorKind::InvalidArgument);

  // trivial against a signature-8 knot: never cobordant, only inconclusive
  const IntMatrix m = cobordism_block(SeifertKnot::trivial_blocks(1, 1), validate(1, gen::e8_seifert()));
  for (long bound = 1; bound <= 3; ++bound) {
    const CobordismVerdict v = find_metabolizer(m, bound);
    CHECK(v.status == CobordismStatus::Inconclusive);
    CHECK(v.bound == bound);
  }
}

TEST_CASE("necessary_obstructions") {
  const SeifertKnot trefoil = validate(2, IntMatrix{{1, 1}, {0, 1}});
  const CobordismVerdict a = necessary_obstructions(trefoil, SeifertKnot::trivial_blocks(2, 1));
  CHECK(a.status == CobordismStatus::Obstructed);
  CHECK(a.reason == "arf:(1,0)");

  const SeifertKnot e8 = validate(1, gen::e8_seifert());
  CHECK(necessary_obstructions(e8, e8).status == CobordismStatus::Inconclusive);
  CHECK(necessary_obstructions(e8, e8).bound == 0);
  CHECK(necessary_obstructions(SeifertKnot::trivial(1), e8).reason == "sigma:(0,8)");
  CHECK(kind_of([&] { necessary_obstructions(e8, trefoil); }) == ErrorKind::ParityMismatch);
}

TEST_CASE("obstructed pairs never get a metabolizer") {
  gen::Rng rng(54);
  int obstructed = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned k = static_cast<unsigned>(gen::uniform(rng, 0, 3));
    const SeifertKnot a = gen::knot(rng, k, 2 * static_cast<std::size_t>(gen::uniform(rng, 1, 2)));
    const SeifertKnot b = gen::knot(rng, k, 2 * static_cast<std::size_t>(gen::uniform(rng, 1, 2)));
    const CobordismVerdict nec = necessary_obstructions(a, b);
    const CobordismVerdict found = find_metabolizer(cobordism_block(a, b), 1);
    if (nec.status == CobordismStatus::Obstructed) {
      ++obstructed;
      CHECK(found.status != CobordismStatus::Cobordant);
    }
    if (found.status == CobordismStatus::Cobordant) CHECK(oracle_metabolizer(*found.witness));
  }
  CHECK(obstructed > 0);
}

TEST_CASE("algebraically_slice") {
  for (unsigned k = 0; k < 4; ++k)
    for (std::size_t p = 0; p <= 3; ++p) {
      const CobordismVerdict v = algebraically_slice(SeifertKnot::trivial_blocks(k, p));
      REQUIRE(v.status == CobordismStatus::Cobordant);
      CHECK(oracle_metabolizer(*v.witness));
      CHECK(v.algebraic_only == (k == 0));
    }
  CHECK(algebraically_slice(validate(1, gen::e8_seifert())).status == CobordismStatus::Obstructed);
  CHECK(algebraically_slice(validate(0, IntMatrix{{1, 1}, {0, 1}})).status == CobordismStatus::Obstructed);

  gen::Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned k = static_cast<unsigned>(gen::uniform(rng, 0, 3));
    const SeifertKnot kn = gen::knot(rng, k, 2 * static_cast<std::size_t>(gen::uniform(rng, 1, 4)));
    const SeifertKnot d = connected_sum(kn, mirror_variants(kn).minus_k_star);
    const CobordismVerdict v = algebraically_slice(d);
    REQUIRE(v.status == CobordismStatus::Cobordant);
    CHECK(oracle_metabolizer(*v.witness));
  }
}

TEST_CASE("metabolizer search survives a change of basis") {
  gen::Rng rng(56);
  for (int trial = 0; trial < 30; ++trial) {
    const SeifertKnot kn = gen::knot(rng, 1, 2 * static_cast<std::size_t>(gen::uniform(rng, 1, 2)));
    const IntMatrix m = cobordism_block(kn, kn);
    const IntMatrix moved = congruence_apply(m, gen::unimodular(rng, m.dim(), 1, 6));
    const CobordismVerdict v = find_metabolizer(moved, 3);
    REQUIRE(v.status == CobordismStatus::Cobordant);
    CHECK(oracle_metabolizer(*v.witness));
  }
}
