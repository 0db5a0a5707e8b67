#pragma once

// Cobordism of odd-dimensional knots at the Seifert-matrix level: bounded
// search for a metabolizer of A1 ⊕ (-A2), plus the invariant checks that are
// necessary for cobordism.

#include <optional>
#include <string>
#include <vector>

#include "seifert/exactalg.hpp"
#include "seifert/seifert.hpp"

namespace seifert {

inline constexpr long kDefaultMetabolizerBound = 2;

/// Basis of a rank-m sublattice of Z^(2m) on which θ(u,v) = u^T M v vanishes.
struct Metabolizer {
  std::vector<IntVector> vectors;
  IntMatrix context;
};

/// Every pairwise θ value is zero, the count is half the dimension, and the
/// gcd of all maximal minors of the vector matrix is 1.
bool is_valid_metabolizer(const Metabolizer& metabolizer);

enum class CobordismStatus { Cobordant, Obstructed, Inconclusive };

const char* to_string(CobordismStatus status);

struct CobordismVerdict {
  CobordismStatus status = CobordismStatus::Inconclusive;
  /// Present iff status is Cobordant.
  std::optional<Metabolizer> witness;
  /// Why the verdict is Obstructed (names the differing invariant).
  std::string reason;
  /// Coefficient bound an Inconclusive search exhausted (0: no search ran).
  long bound = 0;
  /// Set for k = 0, where the matrix condition carries no geometric claim.
  bool algebraic_only = false;

  static CobordismVerdict cobordant(Metabolizer witness);
  static CobordismVerdict obstructed(std::string reason);
  static CobordismVerdict inconclusive(long bound);
};

/// A1 ⊕ (-A2). Throws ParityMismatch when the handle indices differ.
IntMatrix cobordism_block(const SeifertKnot& k1, const SeifertKnot& k2);

/// Searches primitive vectors with entries in [-coeff_bound, coeff_bound],
/// by increasing max-norm and then lexicographically, extending greedily
/// with backtracking to a rank-m totally isotropic primitive sublattice.
/// Never returns Obstructed. Throws OddDimension.
CobordismVerdict find_metabolizer(const IntMatrix& m, long coeff_bound = kDefaultMetabolizerBound);

/// Obstructed when Arf (k even) or sigma (k odd) differ; Inconclusive(0)
/// otherwise since equal invariants do not imply cobordism.
CobordismVerdict necessary_obstructions(const SeifertKnot& k1, const SeifertKnot& k2);

/// Cobordism to the trivial knot: necessary check first, then
/// find_metabolizer on A itself.
CobordismVerdict algebraically_slice(const SeifertKnot& knot,
                                     long coeff_bound = kDefaultMetabolizerBound);

}  // namespace seifert
