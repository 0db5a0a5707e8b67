#pragma once

// Constructive normal forms for unimodular forms.

#include "seifert/exactalg.hpp"
#include "seifert/seifert.hpp"

namespace seifert {

inline constexpr long kDefaultIsotropicBound = 10;

/// Splits an even unimodular symmetric form of signature zero into hyperbolic
/// planes: returns S with S G S^T = ⊕[[0,1],[1,0]] exactly.
///
/// Each plane starts from a primitive isotropic vector found by iterative
/// deepening over max-abs coefficient 1..search_bound (lexicographic within a
/// level), which is then completed to a hyperbolic pair using unimodularity.
///
/// Throws PreconditionFailed when G is not symmetric, even, unimodular and of
/// signature zero; SearchExhausted when no isotropic vector lies in the box
/// (inconclusive, a larger bound may succeed).
CongruenceWitness hyperbolize(const IntMatrix& g, long search_bound = kDefaultIsotropicBound);

/// Integral symplectic basis with even self-linking: for k even and Arf 0,
/// returns S such that B = S A S^T has B - B^T = ⊕[[0,1],[-1,0]] and every
/// diagonal entry of B even. Throws WrongParity or ArfNonzero.
CongruenceWitness even_diagonal_symplectic(const SeifertKnot& knot);

/// Integral symplectic reduction of a unimodular antisymmetric form:
/// S J S^T = ⊕[[0,1],[-1,0]]. Throws PreconditionFailed otherwise.
CongruenceWitness integral_symplectic_basis(const IntMatrix& j);

}  // namespace seifert
