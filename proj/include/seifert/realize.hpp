#pragma once

// Realizability of a pair of n-knots as the intersection knots of two
// embedded (n+2)-spheres, decided from Arf / signature, with constructive
// certificates for odd n.

#include <optional>
#include <string>

#include "seifert/cobordism.hpp"
#include "seifert/hyperbolic.hpp"
#include "seifert/passmove.hpp"
#include "seifert/seifert.hpp"

namespace seifert {

struct SearchBounds {
  long metabolizer = kDefaultMetabolizerBound;
  long isotropic = kDefaultIsotropicBound;
};

/// Invariant values compared for the verdict, e.g. {"arf", 1, 0}.
struct InvariantPair {
  std::string name;
  long first = 0;
  long second = 0;

  bool equal() const { return first == second; }
};

/// K3 = K1 # K~ where K~ is pass-move equivalent to the trivial knot and
/// cobordant to (-K1*) # K2. Then K3 is pass-move equivalent to K1 (schedule)
/// and cobordant to K2 (metabolizer of K3 ⊕ -K2).
struct RealizationCertificate {
  SeifertKnot k3;
  /// From K1 # trivial to K3; ops only touch the K~ block.
  PassMoveSchedule schedule;
  CobordismVerdict metabolizer;
};

struct RealizabilityVerdict {
  bool realizable = false;
  unsigned long n = 0;
  /// The compared invariants for odd n; unequal exactly when not realizable.
  std::optional<InvariantPair> obstruction;
  std::optional<RealizationCertificate> certificate;
  /// Why a positive odd-n verdict carries no certificate (search exhausted).
  std::string certificate_error;
};

/// Even n: realizable, knots not needed. n = 4m+1: Arf equality.
/// n = 4m+3: signature equality. Positive odd verdicts carry a certificate.
/// Throws InvalidArgument (n = 0), MissingMatrix, ParityMismatch.
RealizabilityVerdict decide_realizable(unsigned long n, const std::optional<SeifertKnot>& k1,
                                       const std::optional<SeifertKnot>& k2,
                                       const SearchBounds& bounds = {});

/// Throws ObstructionNonzero when the invariants of K1 and K2 differ.
RealizationCertificate build_certificate(const SeifertKnot& k1, const SeifertKnot& k2,
                                         const SearchBounds& bounds = {});

/// Re-checks a certificate from scratch against (K1, K2).
bool verify_certificate(const SeifertKnot& k1, const SeifertKnot& k2,
                        const RealizationCertificate& certificate);

/// Sufficient condition for 4-tuples: even n is unconditionally positive;
/// for odd n, Cobordant when both knots are algebraically slice (the witness
/// is the sum of both metabolizers), Obstructed when either sliceness check
/// is obstructed, Inconclusive otherwise. Never a claim that a 4-tuple is
/// unrealizable.
CobordismVerdict decide_4tuple(unsigned long n, const std::optional<SeifertKnot>& k1,
                               const std::optional<SeifertKnot>& k2,
                               long coeff_bound = kDefaultMetabolizerBound);

}  // namespace seifert
