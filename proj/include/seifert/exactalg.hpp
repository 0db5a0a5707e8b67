#pragma once

// Exact integer matrix kernel: congruence transforms with replayable logs,
// determinants, inertia of symmetric forms and mod-2 symplectic bases.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "seifert/error.hpp"

namespace seifert {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense square matrix of arbitrary-precision integers. A 0x0 matrix is a
/// legal value (it stands for the trivial knot in several places).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dim);
  /// Throws DimensionMismatch unless every row has rows.size() entries.
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  /// Elementary row operations, used when building transforms.
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& m);
  void swap_rows(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  /// Rows as bracketed lists, e.g. "[[0,1],[0,0]]".
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// ⊕ planes copies of [[0,1],[1,0]].
IntMatrix hyperbolic_planes(std::size_t planes);
/// ⊕ planes copies of [[0,1],[-1,0]].
IntMatrix standard_symplectic(std::size_t planes);

/// u^T M v.
Integer bilinear(const IntVector& u, const IntMatrix& m, const IntVector& v);
IntVector mat_vec(const IntMatrix& m, const IntVector& v);

// ---------------------------------------------------------------------------
// Congruence witnesses

/// One elementary row operation on a transform. AddMultiple: row i += m*row j.
/// Swap: rows i and j. Negate: row i *= -1 (j and multiplier unused).
struct ElementaryOp {
  enum class Kind { AddMultiple, Swap, Negate };
  Kind kind = Kind::AddMultiple;
  std::size_t i = 0;
  std::size_t j = 0;
  Integer multiplier = 0;

  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

const char* to_string(ElementaryOp::Kind kind);

/// Unimodular S with the row-operation log that builds it from the identity.
/// Certifies S * M * S^T = M' for whatever M the producer transformed.
struct CongruenceWitness {
  IntMatrix transform;
  std::size_t source_dim = 0;
  std::vector<ElementaryOp> log;

  static CongruenceWitness identity(std::size_t dim);

  /// Applies the log to the identity matrix.
  IntMatrix replay() const;
  /// S^-1, built by undoing the log as column operations.
  IntMatrix inverse() const;
  /// replay() == transform and |det transform| == 1.
  bool is_consistent() const;
};

/// Applies elementary operations to a transform and, by congruence, to any
/// number of tracked forms (W <- E W E^T), recording each step.
class CongruenceTracker {
 public:
  explicit CongruenceTracker(std::vector<IntMatrix> forms);

  void add_multiple(std::size_t target, std::size_t source, const Integer& m);
  void swap(std::size_t a, std::size_t b);
  void negate(std::size_t i);
  void apply(const ElementaryOp& op);

  std::size_t dim() const { return witness_.source_dim; }
  const IntMatrix& form(std::size_t idx) const { return forms_[idx]; }
  const CongruenceWitness& witness() const { return witness_; }
  CongruenceWitness take_witness() && { return std::move(witness_); }

 private:
  CongruenceWitness witness_;
  std::vector<IntMatrix> forms_;
};

// ---------------------------------------------------------------------------
// Operations

/// S * M * S^T.
IntMatrix congruence_apply(const IntMatrix& m, const IntMatrix& s);

/// Exact determinant by Bareiss fraction-free elimination; det of 0x0 is 1.
Integer determinant(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

struct SignatureTriple {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const {
    return static_cast<long>(positive) - static_cast<long>(negative);
  }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

/// Inertia of a symmetric matrix by exact rational symmetric pivoting.
/// Pivot rule: smallest-index nonzero diagonal; failing that the
/// smallest-index nonzero off-diagonal pair as a 2x2 block.
SignatureTriple signature_symmetric(const IntMatrix& m);

/// Integer transform S (det ±1) such that S J S^T reduces mod 2 to
/// ⊕[[0,1],[1,0]], basis ordered x1,y1,...,xp,yp.
/// J must be alternating and nondegenerate mod 2.
CongruenceWitness symplectic_basis_mod2(const IntMatrix& j);

/// True when the rows span a primitive sublattice of Z^n of full row rank,
/// i.e. the gcd of maximal minors is 1. Vectors must share a length.
bool spans_primitive_sublattice(const std::vector<IntVector>& vectors);

}  // namespace seifert
