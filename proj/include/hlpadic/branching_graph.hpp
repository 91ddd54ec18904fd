#pragma once

#include "hlpadic/hall_littlewood.hpp"

namespace hlpadic {

// Stochastic link between level len(mu) and level len(lam) of the branching
// graph of signatures, len(mu) >= len(lam), in hypergeometric closed form.
// Translation invariant; equal lengths degenerate to a point mass.
Rat link(const Signature& mu, const Signature& lam, const Rat& t);

// The same quantity straight from its definition,
//   P_{mu/lam}(t^n, ..., t^{m-1}) P_lam(1, ..., t^{n-1}) / P_mu(1, ..., t^{m-1}),
// evaluated after translating both signatures to nonnegative parts.
Rat link_via_definition(const Signature& mu, const Signature& lam, const Rat& t);

// Extreme boundary measure on Sig_n attached to an infinite signature with
// constant tail D: support is the box D <= lam_i <= mu_i, total mass exactly 1.
Measure<Signature> boundary_measure(const InfSignature& mu, long long n, const Rat& t);

// Exact coherency check: the level-(n+1) measure pushed through the link
// equals the level-n measure atom by atom, and both have total mass 1.
bool verify_coherency(const InfSignature& mu, long long n, const Rat& t);

// Extreme boundary measure of the rank-k graph: mu in Sig_k, level >= 1.
// Support is infinite downward (lam_i <= mu_i), so atoms are enumerated with
// parts >= floor and the uncovered mass is reported via the deficit.
Measure<Signature> finite_k_boundary_measure(const Signature& mu, long long level,
                                             const Rat& t, long long floor);

// Single atom of the rank-k boundary measure, exact.
Rat finite_k_boundary_weight(const Signature& mu, const Signature& lam,
                             long long level, const Rat& t);

// One-step link of the rank-k graph from level+1 down to level.
Rat link_rank_k(const Signature& nu, const Signature& lam, long long level, const Rat& t);

// Two-dimensional corner graph.  A vertex (m, n) carries signatures of length
// min(m, n) extended by -inf parts when the rank is deficient; m counts
// columns and n counts rows.

// Link from vertex (m+1, n) to (m, n) (dropping one column), and from
// (m, n+1) to (m, n) (dropping one row).
Rat link2d_drop_col(const ExtendedSignature& mu, const ExtendedSignature& lam,
                    long long m, long long n, const Rat& t);
Rat link2d_drop_row(const ExtendedSignature& mu, const ExtendedSignature& lam,
                    long long m, long long n, const Rat& t);

// Push a measure at vertex (m+1, n) one column down to (m, n), truncating
// infinite enumeration at parts >= floor.
Measure<ExtendedSignature> push_drop_col(const Measure<ExtendedSignature>& src,
                                         long long m, long long n, const Rat& t,
                                         long long floor);
Measure<ExtendedSignature> push_drop_row(const Measure<ExtendedSignature>& src,
                                         long long m, long long n, const Rat& t,
                                         long long floor);

// Boundary measure of the two-dimensional graph at vertex (m, n) for a
// boundary point mu (constant tail: full-rank regime; -inf tail: fixed finite
// rank).  Atoms with parts below `floor` are truncated into the deficit.
Measure<ExtendedSignature> boundary_measure_2d(const InfSignature& mu, long long m,
                                               long long n, const Rat& t, long long floor);

// Multiplicative one-step kernel on Sig_n: lam -> nu moves by a horizontal
// strip with weight phi_{nu/lam} alpha^{|nu|-|lam|}, biased by the principal
// specialization ratio and normalized to a stochastic row.
Rat gamma_kernel(const Signature& lam, const Signature& nu, const Rat& alpha, const Rat& t);

// Boundary version acting on infinite signatures with equal constant tails.
Rat gamma_inf(const InfSignature& mu, const InfSignature& kappa, const Rat& alpha, const Rat& t);

struct CommutationReport {
    double max_diff = 0;
    double tail_bound = 0;
    long long cap_used = 0;
    size_t targets_checked = 0;
    bool pass = false;
};

// Checks that the multiplicative kernel commutes with the link: for mu in
// Sig_m and every nu in the finite window dictated by mu and window_extra,
//   sum_kappa Gamma_alpha^m(mu, kappa) L(kappa, nu)
//     = sum_lam L(mu, lam) Gamma_alpha^n(lam, nu).
// The kappa sum is truncated at kappa_1 <= cap with a certified tail bound;
// the cap is raised until the bound is below target_tail.
CommutationReport verify_commutation(const Signature& mu, long long n, const Rat& alpha,
                                     const Rat& t, long long cap, double target_tail,
                                     long long window_extra = 6);

} // namespace hlpadic
