#pragma once

// Depth-first enumeration of integer vectors v in a box with
//   v^T Q v = 0   and   c . v = 0 for every linear row c,
// visiting them in a fixed order: by max-norm, then lexicographically with
// coordinate values ranked 0, 1, -1, 2, -2, ... Only one of ±v is visited
// (the one whose first nonzero coordinate is positive) and only primitive
// vectors (gcd of entries 1) are reported. An optional cap limits the number
// of nonzero coordinates.

#include <climits>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <vector>

#include "seifert/exactalg.hpp"

namespace seifert::detail {

inline unsigned long value_rank(const Integer& x) {
  if (x == 0) return 0;
  const unsigned long a = Integer(abs(x)).get_ui();
  return x > 0 ? 2 * a - 1 : 2 * a;
}

inline long rank_value(unsigned long rank) {
  if (rank == 0) return 0;
  return rank % 2 == 1 ? static_cast<long>((rank + 1) / 2) : -static_cast<long>(rank / 2);
}

inline Integer max_norm(const IntVector& v) {
  Integer m = 0;
  for (const auto& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

/// Returns true iff a comes strictly before b in the enumeration order.
inline bool precedes(const IntVector& a, const IntVector& b) {
  const Integer na = max_norm(a), nb = max_norm(b);
  if (na != nb) return na < nb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ra = value_rank(a[i]), rb = value_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

/// Callback receives each admissible vector; return true to stop the search.
using VectorVisitor = std::function<bool(const IntVector&)>;

template <class T>
class BoxSearch {
 public:
  BoxSearch(const IntMatrix& quad, const std::vector<IntVector>& linear)
      : n_(quad.dim()), quad_(n_ * n_), linear_(linear.size(), std::vector<T>(n_)) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) quad_[i * n_ + j] = convert(quad(i, j));
    for (std::size_t c = 0; c < linear.size(); ++c)
      for (std::size_t j = 0; j < n_; ++j) linear_[c][j] = convert(linear[c][j]);
    quad_tail_.assign(n_ + 1, T(0));
    for (std::size_t p = n_; p-- > 0;) {
      T s = quad_tail_[p + 1];
      for (std::size_t j = p; j < n_; ++j) s += absval(quad_[p * n_ + j]);
      for (std::size_t i = p + 1; i < n_; ++i) s += absval(quad_[i * n_ + p]);
      quad_tail_[p] = s;
    }
    lin_tail_.assign(linear_.size(), std::vector<T>(n_ + 1, T(0)));
    for (std::size_t c = 0; c < linear_.size(); ++c)
      for (std::size_t p = n_; p-- > 0;) lin_tail_[c][p] = lin_tail_[c][p + 1] + absval(linear_[c][p]);
  }

  /// Enumerates vectors of max-norm exactly `level`, strictly after `after`
  /// when given. Returns true if the visitor stopped the search.
  bool run(long level, const IntVector* after, const VectorVisitor& visit,
           std::size_t max_support = SIZE_MAX) {
    if (n_ == 0 || level <= 0) return false;
    level_ = level;
    max_support_ = max_support;
    after_ = after;
    if (after_) {
      const Integer an = max_norm(*after_);
      if (an > level) return false;
      if (an < level) after_ = nullptr;
    }
    visit_ = &visit;
    v_.assign(n_, 0);
    lin_coeff_.assign(n_, T(0));
    residual_.assign(linear_.size(), T(0));
    return descend(0, T(0), false, after_ != nullptr, 0);
  }

 private:
  static T convert(const Integer& x) {
    if constexpr (std::is_same_v<T, Integer>) {
      return x;
    } else {
      return static_cast<T>(x.get_si());
    }
  }
  static T absval(const T& x) { return x < 0 ? T(-x) : x; }

  bool descend(std::size_t p, T q_pre, bool hit, bool tight, std::size_t support) {
    if (p == n_) {
      if (!hit || tight || q_pre != 0) return false;
      for (const auto& r : residual_)
        if (r != 0) return false;
      long g = 0;
      for (long x : v_) g = gcd(g, x < 0 ? -x : x);
      if (g != 1) return false;
      IntVector out(n_);
      for (std::size_t i = 0; i < n_; ++i) out[i] = v_[i];
      return (*visit_)(out);
    }

    const unsigned long max_rank = 2ul * static_cast<unsigned long>(level_);
    unsigned long first = 0;
    if (tight) first = value_rank((*after_)[p]);
    const bool last = p + 1 == n_;
    const bool nonzero = support > 0;
    for (unsigned long rank = first; rank <= max_rank; ++rank) {
      const long x = rank_value(rank);
      if (!nonzero && x < 0) continue;
      if (x != 0 && support == max_support_) break;
      const bool now_hit = hit || x == level_ || x == -level_;
      if (last && !now_hit) continue;
      const bool now_tight = tight && rank == first;

      // extend the prefix: q_pre += Q_pp x^2 + 2 x L_p, L_j += Q_pj x
      const T tx = T(x);
      T q = q_pre;
      if (x != 0) q += quad_[p * n_ + p] * tx * tx + T(2) * tx * lin_coeff_[p];
      if (x != 0) {
        for (std::size_t j = p + 1; j < n_; ++j) lin_coeff_[j] += quad_[p * n_ + j] * tx;
        for (std::size_t c = 0; c < linear_.size(); ++c) residual_[c] += linear_[c][p] * tx;
      }
      v_[p] = x;

      bool feasible = true;
      const T b = T(level_);
      for (std::size_t c = 0; c < linear_.size() && feasible; ++c)
        if (absval(residual_[c]) > b * lin_tail_[c][p + 1]) feasible = false;
      if (feasible) {
        T reach = b * b * quad_tail_[p + 1];
        for (std::size_t j = p + 1; j < n_; ++j) reach += T(2) * b * absval(lin_coeff_[j]);
        if (absval(q) > reach) feasible = false;
      }

      bool stop = false;
      if (feasible) stop = descend(p + 1, q, now_hit, now_tight, support + (x != 0 ? 1 : 0));

      v_[p] = 0;
      if (x != 0) {
        for (std::size_t j = p + 1; j < n_; ++j) lin_coeff_[j] -= quad_[p * n_ + j] * tx;
        for (std::size_t c = 0; c < linear_.size(); ++c) residual_[c] -= linear_[c][p] * tx;
      }
      if (stop) return true;
    }
    return false;
  }

  static long gcd(long a, long b) {
    while (b != 0) {
      const long t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::size_t n_;
  std::vector<T> quad_;
  std::vector<std::vector<T>> linear_;
  std::vector<T> quad_tail_;
  std::vector<std::vector<T>> lin_tail_;

  long level_ = 0;
  std::size_t max_support_ = SIZE_MAX;
  const IntVector* after_ = nullptr;
  const VectorVisitor* visit_ = nullptr;
  std::vector<long> v_;
  std::vector<T> lin_coeff_;
  std::vector<T> residual_;
};

/// True when every intermediate of a search at this level fits in int64.
inline bool fits_machine_words(const IntMatrix& quad, const std::vector<IntVector>& linear,
                               long level) {
  const std::size_t n = quad.dim();
  Integer big = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (abs(quad(i, j)) > big) big = abs(quad(i, j));
  for (const auto& row : linear)
    for (const auto& x : row)
      if (abs(x) > big) big = abs(x);
  const Integer limit = Integer(1) << 60;
  const Integer nn = static_cast<unsigned long>(n + 1);
  return big * nn * nn * level * level * 4 < limit;
}

/// Dispatches to a machine-word or multiprecision search.
inline bool search_box(const IntMatrix& quad, const std::vector<IntVector>& linear, long level,
                       const IntVector* after, const VectorVisitor& visit,
                       std::size_t max_support = SIZE_MAX) {
  if (fits_machine_words(quad, linear, level)) {
    BoxSearch<std::int64_t> s(quad, linear);
    return s.run(level, after, visit, max_support);
  }
  BoxSearch<Integer> s(quad, linear);
  return s.run(level, after, visit, max_support);
}

}  // namespace seifert::detail
