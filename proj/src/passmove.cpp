#include "seifert/passmove.hpp"

namespace seifert {

namespace {

void check_op(const SeifertKnot& knot, const PassMoveOp& op) {
  if (op.i >= knot.dim() || op.j >= knot.dim())
    throw Error(ErrorKind::IndexOutOfRange, "pass-move (" + std::to_string(op.i + 1) + "," +
                                                std::to_string(op.j + 1) + ") outside a " +
                                                std::to_string(knot.dim()) + "x" +
                                                std::to_string(knot.dim()) + " matrix");
  if (op.delta != 1 && op.delta != -1)
    throw Error(ErrorKind::InvalidArgument, "pass-move delta must be +1 or -1");
  if (op.i == op.j && !knot.k_even())
    throw Error(ErrorKind::DiagonalMoveOddK, "diagonal linking is rigid for odd k");
}

int sign_of(const Integer& x) { return x > 0 ? 1 : -1; }

void emit(std::vector<PassMoveOp>& ops, std::size_t i, std::size_t j, const Integer& count, int sign) {
  for (Integer c = 0; c < count; ++c) ops.push_back(PassMoveOp{i, j, sign});
}

// A pass-move leaves the intersection form unchanged, so replay can skip
// revalidation after the start.
void step(IntMatrix& a, bool k_even, const PassMoveOp& op) {
  if (op.i == op.j) {
    a(op.i, op.i) += 2 * op.delta;
  } else {
    a(op.i, op.j) += op.delta;
    a(op.j, op.i) += k_even ? op.delta : -op.delta;
  }
}

}  // namespace

SeifertKnot apply_passmove(const SeifertKnot& knot, const PassMoveOp& op) {
  check_op(knot, op);
  IntMatrix a = knot.matrix();
  step(a, knot.k_even(), op);
  return validate(knot.k(), std::move(a));
}

ScheduleCheck verify_schedule(const PassMoveSchedule& schedule) {
  const SeifertKnot& start = schedule.start;
  IntMatrix current = start.matrix();
  for (std::size_t idx = 0; idx < schedule.ops.size(); ++idx) {
    try {
      check_op(start, schedule.ops[idx]);
    } catch (const Error& e) {
      return ScheduleCheck{false, idx, e.what()};
    }
    step(current, start.k_even(), schedule.ops[idx]);
  }
  if (current != schedule.claimed_end)
    return ScheduleCheck{false, schedule.ops.size(), "replay does not reach the claimed matrix"};
  return ScheduleCheck{true, std::nullopt, {}};
}

std::size_t minimal_unit_moves(unsigned k, const IntMatrix& target) {
  const std::size_t n = target.dim();
  const IntMatrix diff = target - SeifertKnot::trivial_blocks(k, n / 2).matrix();
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // one move per unordered pair: below the diagonal within x-x and y-y,
      // from the x side for x-y
      const bool x_row = i % 2 == 0, x_col = j % 2 == 0;
      const bool counted = x_row == x_col ? i > j : x_row;
      if (counted) total += abs(diff(i, j));
    }
    total += abs(diff(i, i)) / 2;
  }
  return total.get_ui();
}

TrivializingPlan plan_trivializing_schedule(const SeifertKnot& knot, long search_bound) {
  const unsigned k = knot.k();
  CongruenceWitness witness;
  if (knot.k_even()) {
    if (arf(knot) != 0) throw Error(ErrorKind::ObstructionNonzero, "Arf invariant is 1");
    witness = even_diagonal_symplectic(knot);
  } else {
    const long s = sigma(knot);
    if (s != 0) throw Error(ErrorKind::ObstructionNonzero, "signature is " + std::to_string(s));
    witness = hyperbolize(intersection_form(knot), search_bound);
  }

  const std::size_t n = knot.dim();
  const std::size_t planes = n / 2;
  const IntMatrix target = congruence_apply(knot.matrix(), witness.transform);
  SeifertKnot start = SeifertKnot::trivial_blocks(k, planes);
  const IntMatrix diff = target - start.matrix();

  auto x = [](std::size_t i) { return 2 * i; };
  auto y = [](std::size_t i) { return 2 * i + 1; };
  auto entry = [&](std::vector<PassMoveOp>& ops, std::size_t r, std::size_t c) {
    const Integer& nu = diff(r, c);
    if (nu != 0) emit(ops, r, c, abs(nu), sign_of(nu));
  };

  std::vector<PassMoveOp> ops;
  for (std::size_t i = 0; i < planes; ++i)
    for (std::size_t j = 0; j < i; ++j) entry(ops, x(i), x(j));
  for (std::size_t i = 0; i < planes; ++i)
    for (std::size_t j = 0; j < i; ++j) entry(ops, y(i), y(j));
  for (std::size_t i = 0; i < planes; ++i)
    for (std::size_t j = 0; j < planes; ++j) entry(ops, x(i), y(j));
  if (knot.k_even()) {
    for (std::size_t i = 0; i < planes; ++i) {
      const Integer& d = diff(x(i), x(i));
      if (d != 0) emit(ops, x(i), x(i), abs(d) / 2, sign_of(d));
    }
    for (std::size_t i = 0; i < planes; ++i) {
      const Integer& d = diff(y(i), y(i));
      if (d != 0) emit(ops, y(i), y(i), abs(d) / 2, sign_of(d));
    }
  }

  TrivializingPlan plan{std::move(witness), PassMoveSchedule{std::move(ops), std::move(start), target}};
  const ScheduleCheck check = verify_schedule(plan.schedule);
  if (!check) throw Error(ErrorKind::PreconditionFailed, "planned schedule failed replay: " + check.reason);
  return plan;
}

}  // namespace seifert
