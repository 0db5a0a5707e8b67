#include "seifert/hyperbolic.hpp"

#include <optional>

#include "box_search.hpp"

namespace seifert {

namespace {

IntMatrix trailing_block(const IntMatrix& m, std::size_t from) {
  IntMatrix r(m.dim() - from);
  for (std::size_t i = from; i < m.dim(); ++i)
    for (std::size_t j = from; j < m.dim(); ++j) r(i - from, j - from) = m(i, j);
  return r;
}

Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::optional<std::size_t> smallest_nonzero(const IntVector& v) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0 && (!best || abs(v[i]) < abs(v[*best]))) best = i;
  return best;
}

// Makes the primitive vector with coordinates c (over basis rows
// first..first+c.size()-1) the basis vector at row `first`.
// Row op "a += m b" changes coordinates by c_b -= m c_a.
void move_to_basis(CongruenceTracker& tr, std::size_t first, IntVector c) {
  std::size_t a = 0;
  while (true) {
    a = *smallest_nonzero(c);
    bool single = true;
    for (std::size_t b = 0; b < c.size(); ++b) {
      if (b == a || c[b] == 0) continue;
      const Integer m = truncated_quotient(c[b], c[a]);
      tr.add_multiple(first + a, first + b, m);
      c[b] -= m * c[a];
      if (c[b] != 0) single = false;
    }
    if (single) break;
  }
  if (abs(c[a]) != 1) throw Error(ErrorKind::InvalidArgument, "vector is not primitive");
  tr.swap(first, first + a);
  if (c[a] < 0) tr.negate(first);
}

// Uses rows after `t` to make row t pair to exactly one later row, with
// value 1, placed at t+1. Needs W(t, t+1..) primitive.
void isolate_partner(CongruenceTracker& tr, std::size_t form, std::size_t t) {
  const std::size_t n = tr.dim();
  auto pairing = [&]() {
    IntVector g(n - t - 1);
    for (std::size_t j = t + 1; j < n; ++j) g[j - t - 1] = tr.form(form)(t, j);
    return g;
  };
  std::size_t s = 0;
  while (true) {
    IntVector g = pairing();
    const auto best = smallest_nonzero(g);
    if (!best) throw Error(ErrorKind::PreconditionFailed, "form is degenerate");
    s = *best;
    bool single = true;
    for (std::size_t a = 0; a < g.size(); ++a) {
      if (a == s || g[a] == 0) continue;
      const Integer m = truncated_quotient(g[a], g[s]);
      tr.add_multiple(t + 1 + a, t + 1 + s, -m);
      if (g[a] - m * g[s] != 0) single = false;
    }
    if (single) break;
  }
  tr.swap(t + 1, t + 1 + s);
  const Integer& e = tr.form(form)(t, t + 1);
  if (abs(e) != 1) throw Error(ErrorKind::PreconditionFailed, "form is not unimodular");
  if (e < 0) tr.negate(t + 1);
}

void symplectic_reduce(CongruenceTracker& tr, std::size_t form) {
  const std::size_t n = tr.dim();
  for (std::size_t t = 0; t < n; t += 2) {
    isolate_partner(tr, form, t);
    for (std::size_t j = t + 2; j < n; ++j) {
      tr.add_multiple(j, t, -Integer(tr.form(form)(j, t + 1)));
      tr.add_multiple(j, t + 1, tr.form(form)(j, t));
    }
  }
}

// Pairwise size reduction of transform rows from..n-1 in the Euclidean
// norm. Each step strictly shrinks a row, so it terminates; it only changes
// the basis of the unsplit block.
void reduce_rows(CongruenceTracker& tr, std::size_t from) {
  const std::size_t n = tr.dim();
  auto dot = [&](std::size_t a, std::size_t b) {
    const IntMatrix& s = tr.witness().transform;
    Integer d = 0;
    for (std::size_t j = 0; j < n; ++j) d += s(a, j) * s(b, j);
    return d;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = from; a < n; ++a)
      for (std::size_t b = from; b < n; ++b) {
        if (a == b) continue;
        const Integer nb = dot(b, b), ab = dot(a, b);
        // nearest integer to <a,b>/<b,b>, ties toward zero
        const Integer slack = ab > 0 ? Integer(nb - 1) : Integer(1 - nb);
        const Integer m = truncated_quotient(2 * ab + slack, 2 * nb);
        if (m == 0) continue;
        tr.add_multiple(a, b, -m);
        changed = true;
      }
  }
}

// Rows t, t+1 already read [[0,1],[1,0]] and pair with nothing else.
bool is_split_plane(const IntMatrix& f, std::size_t t) {
  if (f(t, t) != 0 || f(t, t + 1) != 1 || f(t + 1, t + 1) != 0) return false;
  for (std::size_t j = t + 2; j < f.dim(); ++j)
    if (f(t, j) != 0 || f(t + 1, j) != 0) return false;
  return true;
}

}  // namespace

CongruenceWitness hyperbolize(const IntMatrix& g, long search_bound) {
  if (search_bound <= 0) throw Error(ErrorKind::InvalidArgument, "search bound must be positive");
  if (!g.is_symmetric()) throw Error(ErrorKind::PreconditionFailed, "form is not symmetric");
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (mpz_odd_p(g(i, i).get_mpz_t()))
      throw Error(ErrorKind::PreconditionFailed, "form has odd diagonal entry at " + std::to_string(i + 1));
  const long sig = signature_symmetric(g).signature();
  if (sig != 0)
    throw Error(ErrorKind::PreconditionFailed, "form has signature " + std::to_string(sig));
  if (!is_unimodular(g))
    throw Error(ErrorKind::PreconditionFailed,
                "form has determinant " + determinant(g).get_str());

  const std::size_t n = g.dim();
  if (n == 0) return CongruenceWitness::identity(0);
  CongruenceTracker tr({g});
  for (std::size_t t = 0; t < n; t += 2) {
    if (is_split_plane(tr.form(0), t)) continue;
    reduce_rows(tr, t);
    const IntMatrix rest = trailing_block(tr.form(0), t);
    std::optional<IntVector> found;
    for (long level = 1; level <= search_bound && !found; ++level) {
      detail::search_box(rest, {}, level, nullptr, [&](const IntVector& v) {
        found = v;
        return true;
      });
    }
    if (!found)
      throw Error(ErrorKind::SearchExhausted,
                  "no isotropic vector with coefficients up to " + std::to_string(search_bound) +
                      " in a rank " + std::to_string(n - t) + " block");
    move_to_basis(tr, t, *found);
    isolate_partner(tr, 0, t);
    Integer half = tr.form(0)(t + 1, t + 1) / 2;
    tr.add_multiple(t + 1, t, -half);
    for (std::size_t j = t + 2; j < n; ++j) tr.add_multiple(j, t, -Integer(tr.form(0)(j, t + 1)));
  }
  if (tr.form(0) != hyperbolic_planes(n / 2))
    throw Error(ErrorKind::PreconditionFailed, "hyperbolic splitting did not close");
  return std::move(tr).take_witness();
}

CongruenceWitness integral_symplectic_basis(const IntMatrix& j) {
  if (!(j + j.transpose()).is_zero())
    throw Error(ErrorKind::PreconditionFailed, "form is not antisymmetric");
  if (j.dim() % 2 != 0 || !is_unimodular(j))
    throw Error(ErrorKind::PreconditionFailed, "form is not unimodular");
  if (j.dim() == 0) return CongruenceWitness::identity(0);
  CongruenceTracker tr({j});
  symplectic_reduce(tr, 0);
  return std::move(tr).take_witness();
}

CongruenceWitness even_diagonal_symplectic(const SeifertKnot& knot) {
  if (!knot.k_even())
    throw Error(ErrorKind::WrongParity, "even-diagonal normalization needs even k");
  const std::size_t n = knot.dim();
  if (n == 0) return CongruenceWitness::identity(0);
  CongruenceTracker tr({intersection_form(knot), knot.matrix()});
  symplectic_reduce(tr, 0);

  auto q = [&](std::size_t i) { return mpz_odd_p(tr.form(1)(i, i).get_mpz_t()) != 0; };
  std::vector<std::size_t> odd_planes;
  for (std::size_t p = 0; p < n / 2; ++p)
    if (q(2 * p) && q(2 * p + 1)) odd_planes.push_back(p);
  if (odd_planes.size() % 2 != 0)
    throw Error(ErrorKind::ArfNonzero, "Arf invariant is 1; no basis with even self-linking exists");

  // Two planes with q = (1,1): x1 += x2, y2 -= y1 leaves (0,1) and (1,0).
  for (std::size_t k = 0; k < odd_planes.size(); k += 2) {
    const std::size_t p1 = odd_planes[k], p2 = odd_planes[k + 1];
    tr.add_multiple(2 * p1, 2 * p2, 1);
    tr.add_multiple(2 * p2 + 1, 2 * p1 + 1, -1);
  }
  for (std::size_t p = 0; p < n / 2; ++p) {
    const std::size_t x = 2 * p, y = 2 * p + 1;
    if (q(x) && !q(y)) tr.add_multiple(x, y, 1);
    else if (!q(x) && q(y)) tr.add_multiple(y, x, 1);
  }

  for (std::size_t i = 0; i < n; ++i)
    if (q(i)) throw Error(ErrorKind::ArfNonzero, "odd self-linking survived normalization");
  return std::move(tr).take_witness();
}

}  // namespace seifert
