#include "seifert/seifert.hpp"

namespace seifert {

SeifertKnot SeifertKnot::trivial(unsigned k) { return SeifertKnot(k, IntMatrix()); }

SeifertKnot SeifertKnot::trivial_blocks(unsigned k, std::size_t planes) {
  IntMatrix a(2 * planes);
  for (std::size_t p = 0; p < planes; ++p) a(2 * p, 2 * p + 1) = 1;
  return SeifertKnot(k, std::move(a));
}

IntMatrix intersection_form(unsigned k, const IntMatrix& a) {
  IntMatrix t = a.transpose();
  return k % 2 == 0 ? a - t : a + t;
}

IntMatrix intersection_form(const SeifertKnot& knot) {
  return intersection_form(knot.k(), knot.matrix());
}

SeifertKnot validate(unsigned k, IntMatrix a) {
  if (a.dim() % 2 != 0)
    throw Error(ErrorKind::OddRank, "Seifert matrix has odd dimension " + std::to_string(a.dim()));
  const Integer det = determinant(intersection_form(k, a));
  if (abs(det) != 1)
    throw Error(ErrorKind::NonUnimodularIntersectionForm,
                "intersection form has determinant " + det.get_str());
  return SeifertKnot(k, std::move(a));
}

int arf(const SeifertKnot& knot) {
  if (!knot.k_even())
    throw Error(ErrorKind::WrongParity, "Arf invariant needs even k, got k=" + std::to_string(knot.k()));
  if (knot.dim() == 0) return 0;
  const CongruenceWitness basis = symplectic_basis_mod2(intersection_form(knot));
  const IntMatrix b = congruence_apply(knot.matrix(), basis.transform);
  int total = 0;
  for (std::size_t i = 0; i < b.dim(); i += 2) {
    const bool qx = mpz_odd_p(b(i, i).get_mpz_t());
    const bool qy = mpz_odd_p(b(i + 1, i + 1).get_mpz_t());
    total ^= (qx && qy) ? 1 : 0;
  }
  return total;
}

long sigma(const SeifertKnot& knot) {
  if (knot.k_even())
    throw Error(ErrorKind::WrongParity, "signature needs odd k, got k=" + std::to_string(knot.k()));
  return signature_symmetric(knot.matrix() + knot.matrix().transpose()).signature();
}

KnotInvariants invariants(const SeifertKnot& knot) {
  KnotInvariants out;
  out.parity = knot.k() % 2;
  if (knot.k_even())
    out.arf = arf(knot);
  else
    out.sigma = sigma(knot);
  return out;
}

MirrorVariants mirror_variants(const SeifertKnot& knot) {
  const IntMatrix t = knot.matrix().transpose();
  const unsigned k = knot.k();
  return MirrorVariants{
      validate(k, k % 2 == 0 ? t : -t),
      validate(k, k % 2 == 0 ? -t : t),
      validate(k, -knot.matrix()),
  };
}

SeifertKnot connected_sum(const SeifertKnot& a, const SeifertKnot& b) {
  if (a.k() != b.k())
    throw Error(ErrorKind::ParityMismatch, "connected sum of knots with k=" + std::to_string(a.k()) +
                                               " and k=" + std::to_string(b.k()));
  return validate(a.k(), direct_sum(a.matrix(), b.matrix()));
}

}  // namespace seifert
