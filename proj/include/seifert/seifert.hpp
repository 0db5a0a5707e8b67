#pragma once

// Knots of dimension n = 2k+1 presented by a Seifert matrix.

#include <optional>

#include "seifert/exactalg.hpp"

namespace seifert {

/// Seifert matrix A of a (2k+1)-knot together with the handle index k.
/// Only constructible through validate(), so every instance satisfies:
/// A has even dimension and A + (-1)^(k+1) A^T is unimodular.
class SeifertKnot {
 public:
  /// The 0x0 trivial knot for handle index k.
  static SeifertKnot trivial(unsigned k);
  /// ⊕ planes copies of [[0,1],[0,0]]; also a trivial knot.
  static SeifertKnot trivial_blocks(unsigned k, std::size_t planes);

  unsigned k() const { return k_; }
  unsigned long n() const { return 2ul * k_ + 1; }
  const IntMatrix& matrix() const { return a_; }
  std::size_t dim() const { return a_.dim(); }
  bool k_even() const { return k_ % 2 == 0; }

  friend SeifertKnot validate(unsigned k, IntMatrix a);

 private:
  SeifertKnot(unsigned k, IntMatrix a) : k_(k), a_(std::move(a)) {}

  unsigned k_ = 0;
  IntMatrix a_;
};

/// Throws OddRank or NonUnimodularIntersectionForm.
SeifertKnot validate(unsigned k, IntMatrix a);

/// A + (-1)^(k+1) A^T for an arbitrary square matrix.
IntMatrix intersection_form(unsigned k, const IntMatrix& a);
/// Antisymmetric when k is even, symmetric when k is odd.
IntMatrix intersection_form(const SeifertKnot& knot);

/// Sum over a mod-2 symplectic basis of q(x_i) q(y_i), q(x) = θ(x,x) mod 2.
/// Throws WrongParity when k is odd.
int arf(const SeifertKnot& knot);

/// Signature of A + A^T. Throws WrongParity when k is even.
long sigma(const SeifertKnot& knot);

struct KnotInvariants {
  std::optional<int> arf;
  std::optional<long> sigma;
  unsigned parity = 0;
};

/// The invariant defined for the knot's parity.
KnotInvariants invariants(const SeifertKnot& knot);

struct MirrorVariants {
  SeifertKnot minus_k;        // (-1)^k A^T
  SeifertKnot k_star;         // (-1)^(k+1) A^T
  SeifertKnot minus_k_star;   // -A
};

MirrorVariants mirror_variants(const SeifertKnot& knot);

/// Block sum A1 ⊕ A2. Throws ParityMismatch when the handle indices differ.
SeifertKnot connected_sum(const SeifertKnot& a, const SeifertKnot& b);

}  // namespace seifert
