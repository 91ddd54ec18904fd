#pragma once

#include <vector>

#include "hlpadic/rational.hpp"

namespace hlpadic {

// (a;t)_n = prod_{i=0}^{n-1} (1 - a t^i), n >= 0.
Rat pochhammer(const Rat& a, const Rat& t, long long n);

// (a;t)_inf for 0 < t < 1.  Exact 1 for a = 0 and exact 0 when a = t^{-j};
// otherwise a certified approximation with error_bound <= tol.
EvalResult pochhammer_inf(const Rat& a, const Rat& t, double tol);

// Certified lower bound on (a;t)_inf, for a, t in (0,1) where the product is
// positive.  Handy for turning exact tail arguments into concrete numbers.
double pochhammer_inf_lower(const Rat& a, const Rat& t);

// t-binomial [a choose b]_t = (t;t)_a / ((t;t)_b (t;t)_{a-b}); zero unless
// 0 <= b <= a.
Rat qbinomial(long long a, long long b, const Rat& t);

// [n choose lam]_t = (t;t)_n / prod_x (t;t)_{m_x(lam)} where the product runs
// over the multiplicities of the distinct values of lam.  `mults` is that list
// of multiplicities; they must sum to at most n (parts equal to an implicit
// padding value must be included by the caller).
Rat qmultinomial(long long n, const std::vector<long long>& mults, const Rat& t);

// Terminating basic hypergeometric sum in the normalization that keeps every
// term polynomial:
//   sum_{k=0}^{n} z^k (t^{-n};t)_k / (t;t)_k *
//       prod_i (a_i;t)_k (b_i t^k;t)_{n-k}
// `as` and `bs` must have equal length.
Rat qhyp_bar(long long n, const std::vector<Rat>& as, const std::vector<Rat>& bs,
             const Rat& t, const Rat& z);

} // namespace hlpadic
