#include "seifert/cobordism.hpp"

#include <algorithm>

#include "box_search.hpp"

namespace seifert {

const char* to_string(CobordismStatus status) {
  switch (status) {
    case CobordismStatus::Cobordant: return "cobordant";
    case CobordismStatus::Obstructed: return "obstructed";
    case CobordismStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

CobordismVerdict CobordismVerdict::cobordant(Metabolizer witness) {
  CobordismVerdict v;
  v.status = CobordismStatus::Cobordant;
  v.witness = std::move(witness);
  return v;
}

CobordismVerdict CobordismVerdict::obstructed(std::string reason) {
  CobordismVerdict v;
  v.status = CobordismStatus::Obstructed;
  v.reason = std::move(reason);
  return v;
}

CobordismVerdict CobordismVerdict::inconclusive(long bound) {
  CobordismVerdict v;
  v.status = CobordismStatus::Inconclusive;
  v.bound = bound;
  return v;
}

namespace {

constexpr unsigned long kMinorEnumerationLimit = 20000;

unsigned long binomial(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r.fits_ulong_p() ? r.get_ui() : ~0ul;
}

// gcd of the determinants of all m x m column selections of the m x n matrix.
Integer gcd_of_maximal_minors(const std::vector<IntVector>& rows, std::size_t n) {
  const std::size_t m = rows.size();
  if (m == 0) return 1;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
  Integer g = 0;
  do {
    IntMatrix minor(m);
    std::size_t col = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!pick[c]) continue;
      for (std::size_t r = 0; r < m; ++r) minor(r, col) = rows[r][c];
      ++col;
    }
    const Integer d = determinant(minor);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) break;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

std::size_t row_rank(const std::vector<IntVector>& rows) {
  IntMatrix gram(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) {
      Integer dot = 0;
      for (std::size_t i = 0; i < rows[a].size(); ++i) dot += rows[a][i] * rows[b][i];
      gram(a, b) = dot;
    }
  return signature_symmetric(gram).positive;
}

class MetabolizerSearch {
 public:
  MetabolizerSearch(const IntMatrix& m, long level, std::size_t support)
      : m_(m), mt_(m.transpose()), sym_(m + mt_), half_(m.dim() / 2), level_(level), support_(support) {}

  std::optional<std::vector<IntVector>> run() {
    if (extend()) return chosen_;
    return std::nullopt;
  }

 private:
  bool extend() {
    if (chosen_.size() == half_) return true;
    std::vector<IntVector> rows;
    rows.reserve(2 * chosen_.size());
    for (const auto& u : chosen_) {
      rows.push_back(mat_vec(mt_, u));  // θ(u, v)
      rows.push_back(mat_vec(m_, u));   // θ(v, u)
    }
    // The rows annihilate any metabolizer through the chosen vectors, so they
    // span at most half the space.
    if (2 * chosen_.size() > half_ && row_rank(rows) > half_) return false;
    const IntVector* after = chosen_.empty() ? nullptr : &chosen_.back();
    for (long level = 1; level <= level_; ++level) {
      const bool stop = detail::search_box(sym_, rows, level, after, [&](const IntVector& v) {
        chosen_.push_back(v);
        if (spans_primitive_sublattice(chosen_) && extend()) return true;
        chosen_.pop_back();
        return false;
      }, support_);
      if (stop) return true;
    }
    return false;
  }

  const IntMatrix& m_;
  IntMatrix mt_;
  IntMatrix sym_;
  std::size_t half_;
  long level_;
  std::size_t support_;
  std::vector<IntVector> chosen_;
};

}  // namespace

bool is_valid_metabolizer(const Metabolizer& metabolizer) {
  const IntMatrix& m = metabolizer.context;
  const auto& vs = metabolizer.vectors;
  if (m.dim() % 2 != 0 || vs.size() != m.dim() / 2) return false;
  for (const auto& v : vs)
    if (v.size() != m.dim()) return false;
  for (const auto& u : vs)
    for (const auto& v : vs)
      if (bilinear(u, m, v) != 0) return false;
  // Minor enumeration is exponential in the dimension; past a few thousand
  // column selections use the column-reduction route, which computes the same gcd.
  if (binomial(m.dim(), vs.size()) <= kMinorEnumerationLimit)
    return gcd_of_maximal_minors(vs, m.dim()) == 1;
  return spans_primitive_sublattice(vs);
}

IntMatrix cobordism_block(const SeifertKnot& k1, const SeifertKnot& k2) {
  if (k1.k() != k2.k())
    throw Error(ErrorKind::ParityMismatch, "cobordism of knots with k=" + std::to_string(k1.k()) +
                                               " and k=" + std::to_string(k2.k()));
  return direct_sum(k1.matrix(), -k2.matrix());
}

CobordismVerdict find_metabolizer(const IntMatrix& m, long coeff_bound) {
  if (coeff_bound <= 0) throw Error(ErrorKind::InvalidArgument, "coefficient bound must be positive");
  if (m.dim() % 2 != 0)
    throw Error(ErrorKind::OddDimension, "metabolizer needs even dimension, got " + std::to_string(m.dim()));
  if (m.dim() == 0) return CobordismVerdict::cobordant(Metabolizer{{}, m});

  // A metabolizer is also isotropic for M + M^T, so half the rank can be at
  // most min(p, n) + z; otherwise no box of any size contains one.
  const SignatureTriple inertia = signature_symmetric(m + m.transpose());
  if (m.dim() / 2 > std::min(inertia.positive, inertia.negative) + inertia.zero)
    return CobordismVerdict::inconclusive(coeff_bound);

  // Exhaust each box before widening it, and within a box try sparse vectors
  // first (support cap 2, 4, 8, ... up to the full dimension).
  for (long level = 1; level <= coeff_bound; ++level) {
    for (std::size_t support = 2;; support *= 2) {
      MetabolizerSearch search(m, level, std::min(support, m.dim()));
      if (auto found = search.run()) return CobordismVerdict::cobordant(Metabolizer{std::move(*found), m});
      if (support >= m.dim()) break;
    }
  }
  return CobordismVerdict::inconclusive(coeff_bound);
}

CobordismVerdict necessary_obstructions(const SeifertKnot& k1, const SeifertKnot& k2) {
  if (k1.k() != k2.k())
    throw Error(ErrorKind::ParityMismatch, "cobordism of knots with k=" + std::to_string(k1.k()) +
                                               " and k=" + std::to_string(k2.k()));
  if (k1.k_even()) {
    const int a1 = arf(k1), a2 = arf(k2);
    if (a1 != a2)
      return CobordismVerdict::obstructed("arf:(" + std::to_string(a1) + "," + std::to_string(a2) + ")");
  } else {
    const long s1 = sigma(k1), s2 = sigma(k2);
    if (s1 != s2)
      return CobordismVerdict::obstructed("sigma:(" + std::to_string(s1) + "," + std::to_string(s2) + ")");
  }
  return CobordismVerdict::inconclusive(0);
}

CobordismVerdict algebraically_slice(const SeifertKnot& knot, long coeff_bound) {
  CobordismVerdict verdict;
  if (knot.dim() == 0) {
    verdict = CobordismVerdict::cobordant(Metabolizer{{}, knot.matrix()});
  } else {
    verdict = necessary_obstructions(knot, SeifertKnot::trivial(knot.k()));
    if (verdict.status != CobordismStatus::Obstructed) verdict = find_metabolizer(knot.matrix(), coeff_bound);
  }
  verdict.algebraic_only = knot.k() == 0;
  return verdict;
}

}  // namespace seifert
