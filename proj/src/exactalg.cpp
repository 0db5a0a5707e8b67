#include "seifert/exactalg.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace seifert {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::DegenerateMod2: return "DegenerateMod2";
    case ErrorKind::NonUnimodularIntersectionForm: return "NonUnimodularIntersectionForm";
    case ErrorKind::OddRank: return "OddRank";
    case ErrorKind::WrongParity: return "WrongParity";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DiagonalMoveOddK: return "DiagonalMoveOddK";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ArfNonzero: return "ArfNonzero";
    case ErrorKind::ObstructionNonzero: return "ObstructionNonzero";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::MissingMatrix: return "MissingMatrix";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(rows.size()), data_(rows.size() * rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != dim_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix literal is not square");
    }
    std::size_t j = 0;
    for (long v : r) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& m) {
  for (std::size_t c = 0; c < dim_; ++c) (*this)(target, c) += m * (*this)(source, c);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < dim_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < dim_; ++c) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (other.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (other.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix r(a.dim_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = -a.data_[k];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  const std::size_t n = a.dim_;
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix r = a;
  for (auto& v : r.data_) v *= s;
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  IntMatrix r(na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) r(na + i, na + j) = b(i, j);
  return r;
}

IntMatrix hyperbolic_planes(std::size_t planes) {
  IntMatrix r(2 * planes);
  for (std::size_t p = 0; p < planes; ++p) {
    r(2 * p, 2 * p + 1) = 1;
    r(2 * p + 1, 2 * p) = 1;
  }
  return r;
}

IntMatrix standard_symplectic(std::size_t planes) {
  IntMatrix r(2 * planes);
  for (std::size_t p = 0; p < planes; ++p) {
    r(2 * p, 2 * p + 1) = 1;
    r(2 * p + 1, 2 * p) = -1;
  }
  return r;
}

Integer bilinear(const IntVector& u, const IntMatrix& m, const IntVector& v) {
  if (u.size() != m.dim() || v.size() != m.dim())
    throw Error(ErrorKind::DimensionMismatch, "bilinear form evaluation");
  Integer total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < v.size(); ++j) row += m(i, j) * v[j];
    total += u[i] * row;
  }
  return total;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  IntVector r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

// ---------------------------------------------------------------------------
// Witnesses

const char* to_string(ElementaryOp::Kind kind) {
  switch (kind) {
    case ElementaryOp::Kind::AddMultiple: return "add";
    case ElementaryOp::Kind::Swap: return "swap";
    case ElementaryOp::Kind::Negate: return "negate";
  }
  return "?";
}

namespace {

void apply_row_op(IntMatrix& s, const ElementaryOp& op) {
  if (op.i >= s.dim() || op.j >= s.dim())
    throw Error(ErrorKind::IndexOutOfRange, "elementary operation index");
  switch (op.kind) {
    case ElementaryOp::Kind::AddMultiple:
      if (op.i == op.j) throw Error(ErrorKind::InvalidArgument, "add-multiple needs i != j");
      s.add_row_multiple(op.i, op.j, op.multiplier);
      break;
    case ElementaryOp::Kind::Swap: s.swap_rows(op.i, op.j); break;
    case ElementaryOp::Kind::Negate: s.negate_row(op.i); break;
  }
}

// W <- E W E^T for the elementary matrix E of op.
void apply_congruence_op(IntMatrix& w, const ElementaryOp& op) {
  const std::size_t n = w.dim();
  switch (op.kind) {
    case ElementaryOp::Kind::AddMultiple:
      w.add_row_multiple(op.i, op.j, op.multiplier);
      for (std::size_t r = 0; r < n; ++r) w(r, op.i) += op.multiplier * w(r, op.j);
      break;
    case ElementaryOp::Kind::Swap:
      w.swap_rows(op.i, op.j);
      if (op.i != op.j)
        for (std::size_t r = 0; r < n; ++r) std::swap(w(r, op.i), w(r, op.j));
      break;
    case ElementaryOp::Kind::Negate:
      w.negate_row(op.i);
      for (std::size_t r = 0; r < n; ++r) w(r, op.i) = -w(r, op.i);
      break;
  }
}

}  // namespace

CongruenceWitness CongruenceWitness::identity(std::size_t dim) {
  return CongruenceWitness{IntMatrix::identity(dim), dim, {}};
}

IntMatrix CongruenceWitness::replay() const {
  IntMatrix s = IntMatrix::identity(source_dim);
  for (const auto& op : log) apply_row_op(s, op);
  return s;
}

IntMatrix CongruenceWitness::inverse() const {
  // S = E_t ... E_1, so S^-1 = E_1^-1 ... E_t^-1: right-multiply in log order.
  IntMatrix r = IntMatrix::identity(source_dim);
  const std::size_t n = source_dim;
  for (const auto& op : log) {
    if (op.i >= n || op.j >= n) throw Error(ErrorKind::IndexOutOfRange, "elementary operation index");
    switch (op.kind) {
      case ElementaryOp::Kind::AddMultiple:
        for (std::size_t row = 0; row < n; ++row) r(row, op.j) -= op.multiplier * r(row, op.i);
        break;
      case ElementaryOp::Kind::Swap:
        for (std::size_t row = 0; row < n; ++row) std::swap(r(row, op.i), r(row, op.j));
        break;
      case ElementaryOp::Kind::Negate:
        for (std::size_t row = 0; row < n; ++row) r(row, op.i) = -r(row, op.i);
        break;
    }
  }
  return r;
}

bool CongruenceWitness::is_consistent() const {
  if (transform.dim() != source_dim) return false;
  try {
    if (replay() != transform) return false;
  } catch (const Error&) {
    return false;
  }
  return is_unimodular(transform);
}

CongruenceTracker::CongruenceTracker(std::vector<IntMatrix> forms)
    : forms_(std::move(forms)) {
  if (forms_.empty()) throw Error(ErrorKind::InvalidArgument, "tracker needs a form");
  const std::size_t n = forms_.front().dim();
  for (const auto& f : forms_)
    if (f.dim() != n) throw Error(ErrorKind::DimensionMismatch, "tracked forms differ in size");
  witness_ = CongruenceWitness::identity(n);
}

void CongruenceTracker::apply(const ElementaryOp& op) {
  apply_row_op(witness_.transform, op);
  for (auto& f : forms_) apply_congruence_op(f, op);
  witness_.log.push_back(op);
}

void CongruenceTracker::add_multiple(std::size_t target, std::size_t source, const Integer& m) {
  if (m == 0) return;
  apply(ElementaryOp{ElementaryOp::Kind::AddMultiple, target, source, m});
}

void CongruenceTracker::swap(std::size_t a, std::size_t b) {
  if (a == b) return;
  apply(ElementaryOp{ElementaryOp::Kind::Swap, a, b, 0});
}

void CongruenceTracker::negate(std::size_t i) {
  apply(ElementaryOp{ElementaryOp::Kind::Negate, i, i, 0});
}

// ---------------------------------------------------------------------------
// Operations

IntMatrix congruence_apply(const IntMatrix& m, const IntMatrix& s) {
  if (m.dim() != s.dim())
    throw Error(ErrorKind::DimensionMismatch, "congruence transform has dim " +
                                                  std::to_string(s.dim()) + ", matrix has " +
                                                  std::to_string(m.dim()));
  return s * m * s.transpose();
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) { return abs(determinant(m)) == 1; }

SignatureTriple signature_symmetric(const IntMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "signature of non-symmetric matrix");
  const std::size_t n = m.dim();
  std::vector<mpq_class> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * n + j]; };

  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  SignatureTriple out;

  auto eliminate_single = [&](std::size_t p) {
    const mpq_class piv = at(p, p);
    (piv > 0 ? out.positive : out.negative) += 1;
    alive[p] = false;
    --remaining;
    for (std::size_t r = 0; r < n; ++r) {
      if (!alive[r] || at(r, p) == 0) continue;
      const mpq_class f = at(r, p) / piv;
      for (std::size_t c = 0; c < n; ++c)
        if (alive[c]) at(r, c) -= f * at(p, c);
    }
  };

  // Schur complement against [[0,b],[b,0]]: M_rc -= (M_ri M_jc + M_rj M_ic) / b.
  auto eliminate_pair = [&](std::size_t i, std::size_t j) {
    const mpq_class b = at(i, j);
    out.positive += 1;
    out.negative += 1;
    alive[i] = alive[j] = false;
    remaining -= 2;
    std::vector<mpq_class> ri(n), rj(n);
    for (std::size_t c = 0; c < n; ++c) {
      ri[c] = at(i, c);
      rj[c] = at(j, c);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (!alive[r]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (!alive[c]) continue;
        at(r, c) -= (ri[r] * rj[c] + rj[r] * ri[c]) / b;
      }
    }
  };

  while (remaining > 0) {
    std::optional<std::size_t> diag;
    for (std::size_t i = 0; i < n && !diag; ++i)
      if (alive[i] && at(i, i) != 0) diag = i;
    if (diag) {
      eliminate_single(*diag);
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n && !off; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (alive[j] && at(i, j) != 0) {
          off = {i, j};
          break;
        }
    }
    if (!off) {
      out.zero += remaining;
      break;
    }
    eliminate_pair(off->first, off->second);
  }
  return out;
}

CongruenceWitness symplectic_basis_mod2(const IntMatrix& j) {
  const std::size_t n = j.dim();
  if (n % 2 != 0) throw Error(ErrorKind::OddDimension, "symplectic basis needs even dimension");
  std::vector<std::uint8_t> w(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) w[r * n + c] = mpz_odd_p(j(r, c).get_mpz_t()) ? 1 : 0;
  for (std::size_t r = 0; r < n; ++r)
    if (w[r * n + r])
      throw Error(ErrorKind::DegenerateMod2, "form is not alternating mod 2");
  auto at = [&](std::size_t r, std::size_t c) -> std::uint8_t& { return w[r * n + c]; };

  CongruenceTracker tracker({IntMatrix(n)});
  auto swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    tracker.swap(a, b);
    for (std::size_t c = 0; c < n; ++c) std::swap(at(a, c), at(b, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(at(r, a), at(r, b));
  };
  auto add = [&](std::size_t target, std::size_t source) {
    tracker.add_multiple(target, source, 1);
    for (std::size_t c = 0; c < n; ++c) at(target, c) ^= at(source, c);
    for (std::size_t r = 0; r < n; ++r) at(r, target) ^= at(r, source);
  };

  for (std::size_t t = 0; t < n; t += 2) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t a = t; a < n && !pivot; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (at(a, b)) {
          pivot = {a, b};
          break;
        }
    if (!pivot) throw Error(ErrorKind::DegenerateMod2, "form is degenerate mod 2");
    swap(pivot->first, t);
    swap(pivot->second, t + 1);
    for (std::size_t r = t + 2; r < n; ++r) {
      if (at(r, t + 1)) add(r, t);
      if (at(r, t)) add(r, t + 1);
    }
  }
  return std::move(tracker).take_witness();
}

bool spans_primitive_sublattice(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t t = vectors.size();
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "vectors differ in length");
  if (t > n) return false;

  // Column operations keep the gcd of maximal minors; reduce to [L | 0].
  std::vector<IntVector> a = vectors;
  auto col_sub = [&](std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t r = 0; r < t; ++r) a[r][target] -= q * a[r][source];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t r = 0; r < t; ++r) std::swap(a[r][x], a[r][y]);
  };
  for (std::size_t r = 0; r < t; ++r) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t c = r; c < n; ++c)
        if (a[r][c] != 0 && (!best || abs(a[r][c]) < abs(a[r][*best]))) best = c;
      if (!best) return false;
      col_swap(r, *best);
      bool done = true;
      for (std::size_t c = r + 1; c < n; ++c) {
        if (a[r][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[r][r].get_mpz_t());
        col_sub(c, r, q);
        if (a[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (abs(a[r][r]) != 1) return false;
  }
  return true;
}

}  // namespace seifert
