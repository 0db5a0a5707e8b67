#include "seifert/realize.hpp"

namespace seifert {

namespace {

InvariantPair compare_invariants(const SeifertKnot& k1, const SeifertKnot& k2) {
  if (k1.k_even()) return InvariantPair{"arf", arf(k1), arf(k2)};
  return InvariantPair{"sigma", sigma(k1), sigma(k2)};
}

void require_pair(unsigned long n, const std::optional<SeifertKnot>& k1,
                  const std::optional<SeifertKnot>& k2) {
  if (!k1 || !k2)
    throw Error(ErrorKind::MissingMatrix, "odd n=" + std::to_string(n) + " needs both Seifert matrices");
  const unsigned long k = (n - 1) / 2;
  for (const auto* knot : {&*k1, &*k2})
    if (knot->k() != k)
      throw Error(ErrorKind::ParityMismatch, "n=" + std::to_string(n) + " needs k=" + std::to_string(k) +
                                                 ", got k=" + std::to_string(knot->k()));
}

// Diagonal metabolizer of A1 ⊕ D ⊕ (-A2), D = (-A1) ⊕ A2, carried to the
// coordinates of A1 ⊕ X ⊕ (-A2) where X = S D S^T: the D part w becomes
// (S^-1)^T w, i.e. row i of S^-1 for w = e_i.
Metabolizer transported_metabolizer(const SeifertKnot& k1, const SeifertKnot& k2,
                                    const CongruenceWitness& witness, const IntMatrix& context) {
  const std::size_t d1 = k1.dim(), d2 = k2.dim(), dd = d1 + d2;
  const std::size_t total = d1 + dd + d2;
  const IntMatrix inv = witness.inverse();
  Metabolizer out{{}, context};
  for (std::size_t i = 0; i < dd; ++i) {
    IntVector v(total);
    if (i < d1)
      v[i] = 1;
    else
      v[d1 + dd + (i - d1)] = 1;
    for (std::size_t j = 0; j < dd; ++j) v[d1 + j] = inv(i, j);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace

RealizationCertificate build_certificate(const SeifertKnot& k1, const SeifertKnot& k2,
                                         const SearchBounds& bounds) {
  const CobordismVerdict pre = necessary_obstructions(k1, k2);
  if (pre.status == CobordismStatus::Obstructed)
    throw Error(ErrorKind::ObstructionNonzero, "invariants differ, " + pre.reason);

  const unsigned k = k1.k();
  const SeifertKnot bridge = connected_sum(mirror_variants(k1).minus_k_star, k2);
  TrivializingPlan plan = plan_trivializing_schedule(bridge, bounds.isotropic);
  const SeifertKnot k_tilde = validate(k, plan.schedule.claimed_end);
  SeifertKnot k3 = connected_sum(k1, k_tilde);

  const std::size_t shift = k1.dim();
  std::vector<PassMoveOp> ops;
  ops.reserve(plan.schedule.ops.size());
  for (const auto& op : plan.schedule.ops) ops.push_back(PassMoveOp{op.i + shift, op.j + shift, op.delta});
  PassMoveSchedule schedule{std::move(ops), connected_sum(k1, plan.schedule.start), k3.matrix()};

  const IntMatrix block = cobordism_block(k3, k2);
  Metabolizer witness = transported_metabolizer(k1, k2, plan.witness, block);
  CobordismVerdict metabolizer = is_valid_metabolizer(witness)
                                     ? CobordismVerdict::cobordant(std::move(witness))
                                     : find_metabolizer(block, bounds.metabolizer);
  metabolizer.algebraic_only = k == 0;
  return RealizationCertificate{std::move(k3), std::move(schedule), std::move(metabolizer)};
}

bool verify_certificate(const SeifertKnot& k1, const SeifertKnot& k2,
                        const RealizationCertificate& certificate) {
  const SeifertKnot& k3 = certificate.k3;
  const PassMoveSchedule& schedule = certificate.schedule;
  if (k1.k() != k2.k() || k3.k() != k1.k()) return false;
  if (k3.dim() < k1.dim() || (k3.dim() - k1.dim()) % 2 != 0) return false;

  const std::size_t planes = (k3.dim() - k1.dim()) / 2;
  const IntMatrix start = direct_sum(k1.matrix(), SeifertKnot::trivial_blocks(k1.k(), planes).matrix());
  if (schedule.start.k() != k1.k() || schedule.start.matrix() != start) return false;
  if (schedule.claimed_end != k3.matrix()) return false;
  for (const auto& op : schedule.ops)
    if (op.i < k1.dim() || op.j < k1.dim()) return false;
  if (!verify_schedule(schedule)) return false;

  const CobordismVerdict& m = certificate.metabolizer;
  switch (m.status) {
    case CobordismStatus::Cobordant:
      return m.witness && m.witness->context == cobordism_block(k3, k2) && is_valid_metabolizer(*m.witness);
    case CobordismStatus::Inconclusive:
      return necessary_obstructions(k3, k2).status != CobordismStatus::Obstructed;
    case CobordismStatus::Obstructed:
      return false;
  }
  return false;
}

RealizabilityVerdict decide_realizable(unsigned long n, const std::optional<SeifertKnot>& k1,
                                       const std::optional<SeifertKnot>& k2, const SearchBounds& bounds) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "knot dimension must be positive");
  RealizabilityVerdict verdict;
  verdict.n = n;
  if (n % 2 == 0) {
    verdict.realizable = true;
    return verdict;
  }
  require_pair(n, k1, k2);
  verdict.obstruction = compare_invariants(*k1, *k2);
  verdict.realizable = verdict.obstruction->equal();
  if (verdict.realizable) {
    try {
      verdict.certificate = build_certificate(*k1, *k2, bounds);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchExhausted) throw;
      verdict.certificate_error = e.what();
    }
  }
  return verdict;
}

CobordismVerdict decide_4tuple(unsigned long n, const std::optional<SeifertKnot>& k1,
                               const std::optional<SeifertKnot>& k2, long coeff_bound) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "knot dimension must be positive");
  if (n % 2 == 0) {
    CobordismVerdict v = CobordismVerdict::cobordant(Metabolizer{});
    v.reason = "even n: every 4-tuple is realizable";
    return v;
  }
  require_pair(n, k1, k2);
  const CobordismVerdict s1 = algebraically_slice(*k1, coeff_bound);
  const CobordismVerdict s2 = algebraically_slice(*k2, coeff_bound);
  CobordismVerdict out;
  if (s1.status == CobordismStatus::Obstructed) {
    out = CobordismVerdict::obstructed("K1 not algebraically slice, " + s1.reason);
  } else if (s2.status == CobordismStatus::Obstructed) {
    out = CobordismVerdict::obstructed("K2 not algebraically slice, " + s2.reason);
  } else if (s1.status == CobordismStatus::Cobordant && s2.status == CobordismStatus::Cobordant) {
    const std::size_t d1 = k1->dim(), d2 = k2->dim();
    Metabolizer sum{{}, direct_sum(k1->matrix(), k2->matrix())};
    for (const auto& v : s1.witness->vectors) {
      IntVector w(d1 + d2);
      std::copy(v.begin(), v.end(), w.begin());
      sum.vectors.push_back(std::move(w));
    }
    for (const auto& v : s2.witness->vectors) {
      IntVector w(d1 + d2);
      std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(d1));
      sum.vectors.push_back(std::move(w));
    }
    out = CobordismVerdict::cobordant(std::move(sum));
  } else {
    out = CobordismVerdict::inconclusive(coeff_bound);
  }
  out.algebraic_only = k1->k() == 0;
  return out;
}

}  // namespace seifert
