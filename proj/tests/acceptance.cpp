// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "seifert/cobordism.hpp"
#include "seifert/hyperbolic.hpp"
#include "seifert/passmove.hpp"
#include "seifert/realize.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace seifert;

namespace {

struct Outcome {
  long checked = 0;
  long failures = 0;
  std::string note;

  void expect(bool ok) {
    ++checked;
    if (!ok) ++failures;
  }
};

long oracle_sigma(const IntMatrix& a) {
  const auto s = oracle::eigenvalue_signs(a + a.transpose());
  return static_cast<long>(s.positive) - static_cast<long>(s.negative);
}

std::size_t random_dim(gen::Rng& rng, long max_planes) {
  return 2 * static_cast<std::size_t>(gen::uniform(rng, 1, max_planes));
}

Outcome anchor_values() {
  Outcome o;
  o.expect(arf(validate(0, IntMatrix{{1, 1}, {0, 1}})) == 1);
  o.expect(arf(validate(2, IntMatrix{{1, 1}, {0, 1}})) == 1);
  for (unsigned k : {0u, 2u, 4u})
    for (std::size_t p = 1; p <= 6; ++p) o.expect(arf(SeifertKnot::trivial_blocks(k, p)) == 0);
  return o;
}

Outcome passmove_invariance() {
  Outcome o;
  gen::Rng rng(1001);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned k = static_cast<unsigned>(gen::uniform(rng, 0, 3));
    SeifertKnot kn = gen::knot(rng, k, random_dim(rng, 4));
    const IntMatrix form = intersection_form(kn);
    const int arf0 = kn.k_even() ? arf(kn) : 0;
    const long sigma0 = kn.k_even() ? 0 : sigma(kn);
    const int steps = static_cast<int>(gen::uniform(rng, 1, 12));
    bool ok = true;
    for (int s = 0; s < steps; ++s) {
      const long last = static_cast<long>(kn.dim()) - 1;
      PassMoveOp op{static_cast<std::size_t>(gen::uniform(rng, 0, last)),
                    static_cast<std::size_t>(gen::uniform(rng, 0, last)), gen::uniform(rng, 0, 1) ? 1 : -1};
      if (!kn.k_even())
        while (op.j == op.i) op.j = static_cast<std::size_t>(gen::uniform(rng, 0, last));
      kn = apply_passmove(kn, op);
      ok = ok && intersection_form(kn) == form;
      ok = ok && (kn.k_even() ? arf(kn) == arf0 : sigma(kn) == sigma0);
    }
    o.expect(ok);
  }
  return o;
}

Outcome trivializing_schedules() {
  Outcome o;
  gen::Rng rng(1002);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = static_cast<unsigned>(trial % 4);
    const SeifertKnot kn = gen::null_knot(rng, k, random_dim(rng, 4));
    try {
      const TrivializingPlan plan = plan_trivializing_schedule(kn);
      o.expect(static_cast<bool>(verify_schedule(plan.schedule)) &&
               plan.schedule.claimed_end == congruence_apply(kn.matrix(), plan.witness.transform) &&
               plan.witness.is_consistent());
    } catch (const Error&) {
      o.expect(false);
    }
  }
  return o;
}

Outcome decision_table() {
  Outcome o;
  gen::Rng rng(1003);
  long certificates = 0;
  for (unsigned long n : {1ul, 2ul, 3ul, 4ul, 5ul, 7ul}) {
    const unsigned k = static_cast<unsigned>((n - 1) / 2);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t d1 = 2 * static_cast<std::size_t>(gen::uniform(rng, 0, 4));
      const std::size_t d2 = 2 * static_cast<std::size_t>(gen::uniform(rng, 0, 4));
      const SeifertKnot a = d1 ? gen::knot(rng, k, d1) : SeifertKnot::trivial(k);
      const SeifertKnot b = trial % 4 == 0 ? a : (d2 ? gen::knot(rng, k, d2) : SeifertKnot::trivial(k));
      bool rule;
      if (n % 2 == 0)
        rule = true;
      else if (n % 4 == 1)
        rule = oracle::brute_force_arf(a.matrix()) == oracle::brute_force_arf(b.matrix());
      else
        rule = oracle_sigma(a.matrix()) == oracle_sigma(b.matrix());
      const RealizabilityVerdict v = n % 2 == 0 ? decide_realizable(n, std::nullopt, std::nullopt)
                                                : decide_realizable(n, a, b);
      bool ok = v.realizable == rule;
      if (n % 2 == 1 && v.realizable) {
        ok = ok && v.certificate.has_value() && verify_certificate(a, b, *v.certificate);
        ++certificates;
      }
      o.expect(ok);
    }
  }
  o.note = std::to_string(certificates) + " certificates verified";
  return o;
}

Outcome metabolizers() {
  Outcome o;
  gen::Rng rng(1004);
  for (int trial = 0; trial < 100; ++trial) {
    const SeifertKnot kn = gen::knot(rng, static_cast<unsigned>(gen::uniform(rng, 0, 3)), random_dim(rng, 4));
    const CobordismVerdict v = find_metabolizer(cobordism_block(kn, kn), 1);
    o.expect(v.status == CobordismStatus::Cobordant && is_valid_metabolizer(*v.witness));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const SeifertKnot kn = gen::knot(rng, static_cast<unsigned>(gen::uniform(rng, 0, 3)), random_dim(rng, 4));
    const CobordismVerdict v = algebraically_slice(connected_sum(kn, mirror_variants(kn).minus_k_star));
    o.expect(v.status == CobordismStatus::Cobordant && is_valid_metabolizer(*v.witness));
  }
  return o;
}

Outcome hyperbolic_round_trip() {
  Outcome o;
  gen::Rng rng(1005);
  long inconclusive = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const IntMatrix s0 = gen::unimodular(rng, 2 * p, 3);
    const IntMatrix g = congruence_apply(hyperbolic_planes(p), s0);
    try {
      const CongruenceWitness w = hyperbolize(g);
      o.expect(congruence_apply(g, w.transform) == hyperbolic_planes(p) && w.is_consistent());
    } catch (const Error&) {
      ++inconclusive;
      o.expect(false);
    }
  }
  o.note = std::to_string(inconclusive) + " inconclusive";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  long exhaustive = 0;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c)
        for (long d = -3; d <= 3; ++d) {
          const IntMatrix m{{a, b}, {c, d}};
          if (!is_unimodular(intersection_form(0, m))) continue;
          ++exhaustive;
          o.expect(arf(validate(0, m)) == oracle::brute_force_arf(m));
        }
  gen::Rng rng(1006);
  for (int trial = 0; trial < 1500; ++trial) {
    const SeifertKnot kn = gen::knot(rng, 2 * static_cast<unsigned>(trial % 2), random_dim(rng, 3));
    o.expect(arf(kn) == oracle::brute_force_arf(kn.matrix()));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const SeifertKnot kn = gen::knot(rng, 2 * static_cast<unsigned>(trial % 2) + 1, random_dim(rng, 4));
    o.expect(sigma(kn) == oracle_sigma(kn.matrix()));
  }
  o.note = std::to_string(exhaustive) + " exhaustive 2x2 cases";
  return o;
}

Outcome quadratic_refinement() {
  Outcome o;
  gen::Rng rng(1007);
  for (std::size_t dim : {2u, 4u, 6u}) {
    for (int trial = 0; trial < 40; ++trial) {
      const SeifertKnot kn = gen::knot(rng, 2 * static_cast<unsigned>(trial % 2), dim);
      const IntMatrix j = intersection_form(kn);
      const std::uint64_t total = std::uint64_t{1} << dim;
      bool ok = true;
      for (std::uint64_t u = 0; u < total && ok; ++u)
        for (std::uint64_t v = 0; v < total; ++v)
          if (oracle::q_value(kn.matrix(), u ^ v) !=
              (oracle::q_value(kn.matrix(), u) ^ oracle::q_value(kn.matrix(), v) ^ oracle::pairing_mod2(j, u, v))) {
            ok = false;
            break;
          }
      o.expect(ok);
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "anchor values: Arf of [[1,1],[0,1]] is 1, trivial knots 0", 1, anchor_values},
      {2, "pass-move invariance of Arf, signature and intersection form", 30, passmove_invariance},
      {3, "trivializing schedules plan and replay", 120, trivializing_schedules},
      {4, "realizability decision table with certificates", 60, decision_table},
      {5, "metabolizers for (K,K) at bound 1 and K#(-K*) slice", 60, metabolizers},
      {6, "hyperbolic round trip at the default bound", 60, hyperbolic_round_trip},
      {7, "Arf and signature agree with brute-force oracles", 60, oracle_equivalence},
      {8, "quadratic refinement law, exhaustive up to dim 6", 30, quadratic_refinement},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && o.failures == 0 && o.checked > 0 && secs <= c.limit_seconds;
    if (!pass) ++failed;
    std::printf("%s [%d] %s: %ld/%ld checks, %.2fs (limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.checked - o.failures, o.checked, secs, c.limit_seconds,
                o.note.empty() ? "" : (", " + o.note).c_str(), error.empty() ? "" : (", error: " + error).c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
