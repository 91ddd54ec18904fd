#pragma once

#include <map>
#include <vector>

#include "hlpadic/qseries.hpp"
#include "hlpadic/signatures.hpp"

namespace hlpadic {

// Branching coefficient for a vertical step lam -> mu with mu one part longer
// and interlacing mu_i >= lam_i >= mu_{i+1}; zero when not interlaced:
//   prod over x with m_x(mu) = m_x(lam) + 1 of (1 - t^{m_x(mu)}).
Rat psi_coeff(const Signature& lam, const Signature& mu, const Rat& t);

// Branching coefficient for a horizontal step lam -> nu at equal length with
// nu_i >= lam_i >= nu_{i+1}; zero when not interlaced:
//   prod over x with m_x(nu) = m_x(lam) + 1 of (1 - t^{m_x(nu)}).
Rat phi_coeff(const Signature& lam, const Signature& nu, const Rat& t);

// Q_lam = b_coeff(lam) * P_lam with b = prod_x (t;t)_{m_x(lam)} over the
// distinct part values of lam (a value of 0 counts when present).
Rat b_coeff(const Signature& lam, const Rat& t);

// Skew P via summation over interlacing chains: mu must be len(lam)+|xs|.
Rat eval_skewP_chain(const Signature& mu, const Signature& lam,
                     const std::vector<Rat>& xs, const Rat& t);

// Skew Q via horizontal chains: nu and lam of equal length.
Rat eval_skewQ_chain(const Signature& nu, const Signature& lam,
                     const std::vector<Rat>& ys, const Rat& t);

// P_lam(x_1..x_n): symmetrization formula for distinct variables, chain
// summation otherwise.  Needs len(lam) == n; negative parts need nonzero xs.
Rat eval_P(const Signature& lam, const std::vector<Rat>& xs, const Rat& t);
Rat eval_Q(const Signature& lam, const std::vector<Rat>& xs, const Rat& t);

// P_lam(u, ut, ..., u t^{n-1}) = u^{|lam|} t^{n(lam)} (t;t)_n / prod (t;t)_{m_x}.
Rat principal_P(const Signature& lam, const Rat& u, long long n, const Rat& t);

// P_mu(1, t, t^2, ...) for a partition mu: t^{n(mu)} / prod_{x>=1} (t;t)_{m_x}.
Rat principal_P_inf(const Signature& mu, const Rat& t);

// P_{mu/lam}(u, ut, ..., u t^{J-1}) with J = len(mu) - len(lam), both
// nonnegative.  Closed form; vanishes on its own when lam is not contained.
Rat skewP_principal_finite(const Signature& mu, const Signature& lam,
                           const Rat& u, const Rat& t);

// Q_{nu/lam}(u, ut, ..., u t^{J-1}) at equal lengths, any integer parts.
Rat skewQ_principal_finite(const Signature& nu, const Signature& lam,
                           const Rat& u, long long J, const Rat& t);

// Stable limits J -> infinity of the two closed forms.
// P: partitions with lam inside mu columnwise (else 0).
Rat skewP_principal_inf(const Signature& mu, const Signature& lam,
                        const Rat& u, const Rat& t);
// Q: equal-length signatures with nu_i >= lam_i (else 0).
Rat skewQ_principal_inf(const Signature& nu, const Signature& lam,
                        const Rat& u, const Rat& t);

// A variable specialization for the Cauchy kernel: either an explicit finite
// list, a finite geometric progression u, ut, ..., u t^{count-1}, or the
// infinite progression u, ut, ut^2, ...
struct Specialization {
    enum class Kind { Explicit, FiniteGeo, InfiniteGeo };
    Kind kind = Kind::Explicit;
    std::vector<Rat> values;
    Rat u = Rat(0);
    long long count = 0;

    static Specialization explicit_values(std::vector<Rat> xs) {
        Specialization s;
        s.kind = Kind::Explicit;
        s.values = std::move(xs);
        return s;
    }
    static Specialization finite_geo(Rat u, long long count) {
        if (count < 0) throw std::domain_error("Specialization: negative count");
        Specialization s;
        s.kind = Kind::FiniteGeo;
        s.u = std::move(u);
        s.count = count;
        return s;
    }
    static Specialization infinite_geo(Rat u) {
        Specialization s;
        s.kind = Kind::InfiniteGeo;
        s.u = std::move(u);
        return s;
    }
};

// Normalization constant of the Cauchy identity,
//   Pi(X;Y) = prod_{i,j} (1 - t x_i y_j) / (1 - x_i y_j),
// in closed form per specialization pair.  Exact in every case except
// infinite x infinite, which carries a certified error <= tol.
// Requires |x_i y_j| < 1 throughout.
EvalResult cauchy_kernel(const Specialization& X, const Specialization& Y,
                         const Rat& t, double tol = 1e-12);

// P_{kappa/nu}(xs) for every kappa of length len(nu)+len(xs) whose parts lie
// in [floor, cap], as one forward DP pass.
std::map<Signature, Rat> skewP_table(const Signature& nu, const std::vector<Rat>& xs,
                                     const Rat& t, long long floor, long long cap);

// Q_{kappa/mu}(ys) for every kappa of length len(mu) with parts in
// [mu_i, cap], as one forward DP pass.
std::map<Signature, Rat> skewQ_table(const Signature& mu, const std::vector<Rat>& ys,
                                     const Rat& t, long long cap);

struct SkewCauchyReport {
    Rat lhs;           // truncated kappa sum
    Rat rhs_sum;       // lam sum (before multiplying by the kernel)
    Rat rhs;           // kernel * rhs_sum
    double diff = 0;   // |lhs - rhs| as a double
    double tail_bound = 0;
    long long cap_used = 0;
    size_t kappa_atoms = 0;
    bool pass = false;
};

// Checks sum_kappa P_{kappa/nu}(xs) Q_{kappa/mu}(ys) =
//        Pi(xs;ys) sum_lam Q_{nu/lam}(ys) P_{mu/lam}(xs)
// with nu of length k, mu of length |xs|+k, truncating kappa_1 <= cap.  The
// cap is raised automatically until the certified tail bound drops below
// target_tail.  Requires positive xs, ys with max(xs)*max(ys) < 1.
SkewCauchyReport verify_skew_cauchy(const Signature& nu, const Signature& mu,
                                    const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                    const Rat& t, long long cap, double target_tail);

} // namespace hlpadic
