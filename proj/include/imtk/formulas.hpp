#ifndef IMTK_FORMULAS_HPP
#define IMTK_FORMULAS_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace imtk {

enum class CaseKind { TrivialObs1, Thm1Case1, Thm1Case2, OutOfScope };

enum class Exactness { Exact, UpperBoundOnly, LowerBoundOnly };

/// Which case of the bipartite classification applies.  Inputs are first
/// normalized to k <= l by swapping (k,l) together with (p,q); a case
/// condition may then hold with the parts in either orientation, recorded in
/// swapped_pq.
struct TheoremCase {
  CaseKind kind = CaseKind::OutOfScope;
  bool swapped_kl = false;
  bool swapped_pq = false;
  long long r = 0;  // Thm1Case2 decomposition p = (l-k)r + e
  long long e = 0;
  std::string reason;  // for OutOfScope
};

struct ExtremalFormulaResult {
  long long value = 0;
  TheoremCase theorem_case;
  Exactness exactness = Exactness::UpperBoundOnly;
};

/// The closed form (l-1)(p-k+1) + q(k-1) shared by Lemma 1 and Theorem 1.
inline long long bipartite_extremal_value(long long p, long long q, long long k, long long l) {
  return (l - 1) * (p - k + 1) + q * (k - 1);
}

namespace detail {

inline void check_positive(std::initializer_list<long long> vals, const char* what) {
  for (long long v : vals)
    if (v < 1) throw std::invalid_argument(std::string(what) + " must all be >= 1");
}

// The long side needed by the staircase construction: q' = (l-k)(r+1)+(k-1).
inline long long staircase_min_q(long long p, long long k, long long l, long long& r,
                                 long long& e) {
  r = (p - k + 1) / (l - k);
  e = p - (l - k) * r;
  return (l - k) * (r + 1) + (k - 1);
}

}  // namespace detail

/// Decides which exact case (if any) covers m(p,q,k,l).  The trivial case is
/// checked first; Theorem 1(1) and 1(2) are then tried with the parts in both
/// orientations, since m is symmetric under exchanging the parts.  Theorem
/// 1(2) is only claimed when the other part reaches the length q' its
/// construction needs; smaller q is not settled and classifies OutOfScope.
inline TheoremCase classify(long long p, long long q, long long k, long long l) {
  detail::check_positive({p, q, k, l}, "p, q, k, l");
  TheoremCase c;
  if (k > l) {
    std::swap(k, l);
    std::swap(p, q);
    c.swapped_kl = true;
  }
  if (std::min(p, q) < k || std::max(p, q) < l) {
    c.kind = CaseKind::TrivialObs1;
    return c;
  }
  if (k <= p && p <= l - 1) {
    c.kind = CaseKind::Thm1Case1;
    return c;
  }
  if (k <= q && q <= l - 1) {
    c.kind = CaseKind::Thm1Case1;
    c.swapped_pq = true;
    return c;
  }
  if (k == l) {
    c.kind = CaseKind::OutOfScope;
    c.reason = "k = l leaves both case ranges of Theorem 1 empty";
    return c;
  }
  if (k == 1) {
    // beyond p <= l-1 the staircase argument is unavailable: its closure
    // step (concatenation of avoiding graphs) holds only for k >= 2, and
    // small cases show the Theorem 1(2) value is wrong here
    c.kind = CaseKind::OutOfScope;
    c.reason = "k = 1 with min(p,q) >= l is not settled (closure needs k >= 2)";
    return c;
  }
  long long r = 0, e = 0;
  if (q >= detail::staircase_min_q(p, k, l, r, e)) {
    c.kind = CaseKind::Thm1Case2;
    c.r = r;
    c.e = e;
    return c;
  }
  if (p >= detail::staircase_min_q(q, k, l, r, e)) {
    c.kind = CaseKind::Thm1Case2;
    c.swapped_pq = true;
    c.r = r;
    c.e = e;
    return c;
  }
  c.kind = CaseKind::OutOfScope;
  c.reason = "Theorem 1(2) needs the other part >= q' in some orientation; here q < q' both ways";
  return c;
}

/// m(p,q,k,l) when a proved case applies, otherwise the tightest proved upper
/// bound (Lemma 1 over both orientations, capped at pq).
inline ExtremalFormulaResult m_formula(long long p, long long q, long long k, long long l) {
  ExtremalFormulaResult out;
  out.theorem_case = classify(p, q, k, l);
  const TheoremCase& c = out.theorem_case;
  long long np = p, nq = q, nk = k, nl = l;
  if (c.swapped_kl) {
    std::swap(nk, nl);
    std::swap(np, nq);
  }
  switch (c.kind) {
    case CaseKind::TrivialObs1:
      out.value = p * q;
      out.exactness = Exactness::Exact;
      return out;
    case CaseKind::Thm1Case1:
    case CaseKind::Thm1Case2: {
      const long long x = c.swapped_pq ? nq : np;
      const long long y = c.swapped_pq ? np : nq;
      out.value = bipartite_extremal_value(x, y, nk, nl);
      out.exactness = Exactness::Exact;
      return out;
    }
    case CaseKind::OutOfScope: {
      // non-trivial inputs have min(p,q) >= k, so Lemma 1 applies both ways
      out.value = std::min({bipartite_extremal_value(np, nq, nk, nl),
                            bipartite_extremal_value(nq, np, nk, nl), np * nq});
      out.exactness = Exactness::UpperBoundOnly;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

/// Lemma 1: m(p,q,k,l) <= (l-1)(p-k+1)+q(k-1), asserted for p >= k (after
/// normalizing to k <= l).  Smaller p is an error: the bound is not asserted.
inline long long upper_bound_lemma1(long long p, long long q, long long k, long long l) {
  detail::check_positive({p, q, k, l}, "p, q, k, l");
  if (k > l) {
    std::swap(k, l);
    std::swap(p, q);
  }
  if (p < k)
    throw std::invalid_argument("Lemma 1 requires p >= k (after normalization to k <= l)");
  return bipartite_extremal_value(p, q, k, l);
}

/// Compact label for table rows.
inline std::string short_label(const TheoremCase& c) {
  switch (c.kind) {
    case CaseKind::TrivialObs1:
      return "Observation 1(2)";
    case CaseKind::Thm1Case1:
      return "Theorem 1(1)";
    case CaseKind::Thm1Case2:
      return "Theorem 1(2) r=" + std::to_string(c.r) + " e=" + std::to_string(c.e);
    case CaseKind::OutOfScope:
      return "out of scope";
  }
  return "?";
}

/// Human-readable label for a classification, e.g. "Theorem 1(2), r=3, e=1".
inline std::string describe(const TheoremCase& c) {
  switch (c.kind) {
    case CaseKind::TrivialObs1:
      return "Observation 1(2)";
    case CaseKind::Thm1Case1:
      return std::string("Theorem 1(1)") + (c.swapped_pq ? ", parts exchanged" : "");
    case CaseKind::Thm1Case2:
      return "Theorem 1(2), r=" + std::to_string(c.r) + ", e=" + std::to_string(c.e) +
             (c.swapped_pq ? ", parts exchanged" : "");
    case CaseKind::OutOfScope:
      return "out of scope (" + c.reason + "); Lemma 1 upper bound";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Multipartite
// ---------------------------------------------------------------------------

enum class MultipartiteCaseKind {
  TrivialNoFit,     // pattern cannot embed, the complete host avoids it
  Theorem2,         // exact: Lemma 4 construction meets the Lemma 5 bound
  Lemma5BoundOnly,  // hypothesis n_i < l_{i+1} fails; only the upper bound
  Lemma4LowerOnly,  // t >= 3 with l_1 = 1: the construction is a valid lower
                    // bound but the claimed maximality is false (small cases
                    // beat it), so no upper bound is asserted
  TrivialBoundOnly  // t >= 3 with l_1 = 1 and no construction: only the
                    // complete-host edge count bounds from above
};

struct MultipartiteFormulaResult {
  long long value = 0;
  MultipartiteCaseKind kind = MultipartiteCaseKind::Lemma5BoundOnly;
  Exactness exactness = Exactness::UpperBoundOnly;
  /// Theorem 2's closed form as displayed, which drops the -n1*n2 term the
  /// matching bounds of Lemmas 4 and 5 both carry; kept for comparison.
  long long displayed_form_value = 0;
};

/// Edge count of the complete multipartite graph with the given part sizes.
inline long long complete_multipartite_edge_count(std::span<const long long> n) {
  long long total = 0;
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j) total += n[i] * n[j];
  return total;
}

namespace detail {

inline void check_strictly_increasing(std::span<const long long> v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) throw std::invalid_argument(std::string(what) + " must all be >= 1");
    if (i > 0 && v[i] <= v[i - 1])
      throw std::invalid_argument(std::string(what) + " must be strictly increasing");
  }
}

}  // namespace detail

/// m(n_1..n_t, l_1..l_t): exact when the pattern cannot fit at all (complete
/// host avoids it) or when the Theorem 2 hypothesis n_i < l_{i+1} holds with
/// l_1 >= 2 (or t = 2); otherwise a one-sided bound.  With t >= 3 and
/// l_1 = 1 the Theorem 2 value is provably not maximal (e.g. on hosts
/// (2,3,4) a single missing cross edge outside the (1,2) pair already
/// avoids K_{1,3,4}), so only the construction's lower bound is claimed.
inline MultipartiteFormulaResult multipartite_m_formula(std::span<const long long> n,
                                                        std::span<const long long> l) {
  if (n.size() != l.size()) throw std::invalid_argument("part and pattern counts differ");
  if (n.size() < 2) throw std::invalid_argument("multipartite formula needs t >= 2 parts");
  detail::check_strictly_increasing(n, "part sizes");
  detail::check_strictly_increasing(l, "pattern sizes");
  const std::size_t t = n.size();
  const long long full = complete_multipartite_edge_count(n);
  MultipartiteFormulaResult out;
  out.displayed_form_value = full - (l[1] - 1) * n[0] + (n[1] - l[1] + 1) * (l[0] - 1);
  bool fits = true;
  for (std::size_t i = 0; i < t; ++i) fits = fits && n[i] >= l[i];
  if (!fits) {
    out.value = full;
    out.kind = MultipartiteCaseKind::TrivialNoFit;
    out.exactness = Exactness::Exact;
    return out;
  }
  const long long pair_value =
      full - n[0] * n[1] + (l[0] - 1) * n[1] + (n[0] - l[0] + 1) * (l[1] - 1);
  bool hypothesis = true;
  for (std::size_t i = 0; i + 1 < t; ++i) hypothesis = hypothesis && n[i] < l[i + 1];
  if (t >= 3 && l[0] == 1) {
    if (hypothesis) {
      out.value = pair_value;
      out.kind = MultipartiteCaseKind::Lemma4LowerOnly;
      out.exactness = Exactness::LowerBoundOnly;
    } else {
      out.value = full;
      out.kind = MultipartiteCaseKind::TrivialBoundOnly;
      out.exactness = Exactness::UpperBoundOnly;
    }
    return out;
  }
  out.value = pair_value;
  out.kind = hypothesis ? MultipartiteCaseKind::Theorem2 : MultipartiteCaseKind::Lemma5BoundOnly;
  out.exactness = hypothesis ? Exactness::Exact : Exactness::UpperBoundOnly;
  return out;
}

inline std::string describe(MultipartiteCaseKind k) {
  switch (k) {
    case MultipartiteCaseKind::TrivialNoFit:
      return "pattern cannot fit (complete host avoids it)";
    case MultipartiteCaseKind::Theorem2:
      return "Theorem 2 (Lemmas 4 and 5)";
    case MultipartiteCaseKind::Lemma5BoundOnly:
      return "Lemma 5 upper bound";
    case MultipartiteCaseKind::Lemma4LowerOnly:
      return "construction lower bound (maximality not settled for l_1 = 1)";
    case MultipartiteCaseKind::TrivialBoundOnly:
      return "complete-host upper bound (l_1 = 1 not settled)";
  }
  return "?";
}

}  // namespace imtk

#endif
