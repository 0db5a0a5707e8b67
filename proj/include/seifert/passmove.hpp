#pragma once

// Pass-moves as Seifert-matrix rewrites and the planner that builds a knot
// pass-move equivalent to the trivial knot with a prescribed Seifert matrix.

#include <optional>
#include <string>
#include <vector>

#include "seifert/exactalg.hpp"
#include "seifert/hyperbolic.hpp"
#include "seifert/seifert.hpp"

namespace seifert {

/// One pass-move chart acting on the basis pair (i, j), 0-based.
///
/// Off the diagonal: A_ij += delta and A_ji += (-1)^k delta, which leaves the
/// intersection form untouched. On the diagonal (k even only): A_ii += 2 delta.
struct PassMoveOp {
  std::size_t i = 0;
  std::size_t j = 0;
  int delta = 1;

  friend bool operator==(const PassMoveOp&, const PassMoveOp&) = default;
};

struct PassMoveSchedule {
  std::vector<PassMoveOp> ops;
  SeifertKnot start;
  IntMatrix claimed_end;
};

/// Throws IndexOutOfRange, DiagonalMoveOddK, or InvalidArgument (|delta| != 1).
SeifertKnot apply_passmove(const SeifertKnot& knot, const PassMoveOp& op);

struct ScheduleCheck {
  bool valid = false;
  /// Index of the first op that failed to apply; ops.size() when the replay
  /// ran through but did not reach claimed_end.
  std::optional<std::size_t> failed_at;
  std::string reason;

  explicit operator bool() const { return valid; }
};

ScheduleCheck verify_schedule(const PassMoveSchedule& schedule);

struct TrivializingPlan {
  /// S with X = S A S^T, the normalized matrix the schedule reaches.
  CongruenceWitness witness;
  /// Starts at ⊕[[0,1],[0,0]] and ends at X.
  PassMoveSchedule schedule;
};

/// Requires Arf(K) = 0 (k even) or sigma(K) = 0 (k odd), else throws
/// ObstructionNonzero. For k odd the basis comes from hyperbolize(A + A^T),
/// which may throw SearchExhausted at the given bound.
///
/// The schedule rewrites the trivial matrix into X entry class by entry class:
/// x-x entries below the diagonal, then y-y below the diagonal, then every
/// x-y entry, then x diagonals and y diagonals; each entry is reached with
/// |difference| unit moves (half that on the diagonal).
TrivializingPlan plan_trivializing_schedule(const SeifertKnot& knot,
                                            long search_bound = kDefaultIsotropicBound);

/// Number of unit moves the planner must emit to turn the trivial matrix into
/// target (same intersection form assumed).
std::size_t minimal_unit_moves(unsigned k, const IntMatrix& target);

}  // namespace seifert
