#include "hlpadic/hall_littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hlpadic {

namespace {

// vertical-step product: multiplicities of the shorter signature that drop by
// one when the new part is inserted
Rat psi_product(const Signature& shorter, const Signature& longer, const Rat& t) {
    Rat res(1);
    for (long long x : shorter.support())
        if (shorter.mult(x) == longer.mult(x) + 1)
            res *= (1 - rat_pow(t, shorter.mult(x)));
    return res;
}

// horizontal-step product: multiplicities of the larger signature that grow by
// one
Rat phi_product(const Signature& smaller, const Signature& larger, const Rat& t) {
    Rat res(1);
    for (long long x : larger.support())
        if (larger.mult(x) == smaller.mult(x) + 1)
            res *= (1 - rat_pow(t, larger.mult(x)));
    return res;
}

using Level = std::map<Signature, Rat>;

// Enumerate tau of length L+1 with sigma (length L) interlacing from below
// and lo_i <= tau_i <= hi_i (0-indexed bounds of length L+1).
template <class F>
void for_each_up(const Signature& sigma, const std::vector<long long>& lo,
                 const std::vector<long long>& hi, F&& f) {
    size_t L1 = lo.size();
    std::vector<long long> cur(L1);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == L1) {
            f(Signature(std::vector<long long>(cur)));
            return;
        }
        long long floor_i = lo[i];
        if (i < sigma.length()) floor_i = std::max(floor_i, sigma[i]);
        long long ceil_i = hi[i];
        if (i >= 1) ceil_i = std::min(ceil_i, sigma[i - 1]);
        for (long long v = ceil_i; v >= floor_i; --v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

// Enumerate tau of length L with interlace_horiz(sigma, tau) and
// lo_i <= tau_i <= hi_i.
template <class F>
void for_each_horiz(const Signature& sigma, const std::vector<long long>& lo,
                    const std::vector<long long>& hi, F&& f) {
    size_t L = lo.size();
    std::vector<long long> cur(L);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == L) {
            f(Signature(std::vector<long long>(cur)));
            return;
        }
        long long floor_i = std::max(lo[i], sigma[i]);
        long long ceil_i = hi[i];
        if (i >= 1) ceil_i = std::min(ceil_i, sigma[i - 1]);
        for (long long v = ceil_i; v >= floor_i; --v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

Rat v_norm(const Signature& lam, const Rat& t) {
    Rat res(1);
    for (long long x : lam.support()) {
        long long m = lam.mult(x);
        res *= pochhammer(t, t, m) / rat_pow(1 - t, m);
    }
    return res;
}

Rat eval_P_symmetrize(const Signature& lam, const std::vector<Rat>& xs, const Rat& t) {
    size_t n = xs.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total(0);
    do {
        Rat term(1);
        for (size_t i = 0; i < n; ++i) term *= rat_pow(xs[perm[i]], lam[i]);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                term *= (xs[perm[i]] - t * xs[perm[j]]) / (xs[perm[i]] - xs[perm[j]]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / v_norm(lam, t);
}

} // namespace

Rat psi_coeff(const Signature& lam, const Signature& mu, const Rat& t) {
    if (!interlace_up(lam, mu)) return Rat(0);
    return psi_product(lam, mu, t);
}

Rat phi_coeff(const Signature& lam, const Signature& nu, const Rat& t) {
    if (!interlace_horiz(lam, nu)) return Rat(0);
    return phi_product(lam, nu, t);
}

Rat b_coeff(const Signature& lam, const Rat& t) {
    Rat res(1);
    for (long long x : lam.support()) res *= pochhammer(t, t, lam.mult(x));
    return res;
}

Rat eval_skewP_chain(const Signature& mu, const Signature& lam,
                     const std::vector<Rat>& xs, const Rat& t) {
    long long n = static_cast<long long>(xs.size());
    long long k = static_cast<long long>(lam.length());
    if (static_cast<long long>(mu.length()) != k + n)
        throw std::domain_error("eval_skewP_chain: len(mu) must be len(lam) + #vars");
    if (n == 0) return mu == lam ? Rat(1) : Rat(0);
    // every chain keeps lam within [mu_{i+n}, mu_i]
    for (long long i = 1; i <= k; ++i)
        if (lam.at1(i) > mu.at1(i) || lam.at1(i) < mu.at1(i + n)) return Rat(0);

    Level level{{lam, Rat(1)}};
    for (long long s = 1; s <= n; ++s) {
        long long r = n - s; // steps still to go after this one
        long long L = k + s;
        std::vector<long long> lo(L), hi(L);
        for (long long i = 1; i <= L; ++i) {
            lo[i - 1] = mu.at1(i + r);
            hi[i - 1] = mu.at1(i);
        }
        Level next;
        for (const auto& [sigma, w] : level) {
            for_each_up(sigma, lo, hi, [&](const Signature& tau) {
                Rat add = w * rat_pow(xs[s - 1], tau.sum() - sigma.sum()) *
                          psi_product(sigma, tau, t);
                if (add != 0) next[tau] += add;
            });
        }
        level = std::move(next);
    }
    auto it = level.find(mu);
    return it == level.end() ? Rat(0) : it->second;
}

Rat eval_skewQ_chain(const Signature& nu, const Signature& lam,
                     const std::vector<Rat>& ys, const Rat& t) {
    long long m = static_cast<long long>(ys.size());
    long long n = static_cast<long long>(nu.length());
    if (static_cast<long long>(lam.length()) != n)
        throw std::domain_error("eval_skewQ_chain: nu and lam must have equal length");
    if (m == 0) return nu == lam ? Rat(1) : Rat(0);
    if (n == 0) return Rat(1);
    if (!contains_parts(nu, lam)) return Rat(0);

    Level level{{lam, Rat(1)}};
    for (long long s = 1; s <= m; ++s) {
        long long r = m - s;
        std::vector<long long> lo(n), hi(n);
        for (long long i = 1; i <= n; ++i) {
            lo[i - 1] = nu.at1(i + r);
            hi[i - 1] = nu.at1(i);
        }
        Level next;
        for (const auto& [sigma, w] : level) {
            for_each_horiz(sigma, lo, hi, [&](const Signature& tau) {
                Rat add = w * rat_pow(ys[s - 1], tau.sum() - sigma.sum()) *
                          phi_product(sigma, tau, t);
                if (add != 0) next[tau] += add;
            });
        }
        level = std::move(next);
    }
    auto it = level.find(nu);
    return it == level.end() ? Rat(0) : it->second;
}

Rat eval_P(const Signature& lam, const std::vector<Rat>& xs, const Rat& t) {
    size_t n = xs.size();
    if (lam.length() != n) throw std::domain_error("eval_P: len(lam) must equal #vars");
    if (n == 0) return Rat(1);
    bool has_zero = std::any_of(xs.begin(), xs.end(), [](const Rat& x) { return x == 0; });
    if (!lam.all_nonneg() && has_zero)
        throw std::domain_error("eval_P: negative parts need nonzero variables");
    bool distinct = true;
    for (size_t i = 0; i < n && distinct; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) { distinct = false; break; }
    if (distinct && !has_zero && n <= 9) return eval_P_symmetrize(lam, xs, t);
    return eval_skewP_chain(lam, Signature{}, xs, t);
}

Rat eval_Q(const Signature& lam, const std::vector<Rat>& xs, const Rat& t) {
    return b_coeff(lam, t) * eval_P(lam, xs, t);
}

Rat principal_P(const Signature& lam, const Rat& u, long long n, const Rat& t) {
    if (static_cast<long long>(lam.length()) != n)
        throw std::domain_error("principal_P: len(lam) must equal n");
    std::vector<long long> mults;
    for (long long x : lam.support()) mults.push_back(lam.mult(x));
    return rat_pow(u, lam.sum()) * rat_pow(t, n_stat(lam)) * qmultinomial(n, mults, t);
}

Rat principal_P_inf(const Signature& mu, const Rat& t) {
    if (!mu.all_nonneg()) throw std::domain_error("principal_P_inf: partition required");
    Rat den(1);
    for (long long x : mu.support())
        if (x >= 1) den *= pochhammer(t, t, mu.mult(x));
    return rat_pow(t, n_stat(mu.trimmed())) / den;
}

Rat skewP_principal_finite(const Signature& mu, const Signature& lam,
                           const Rat& u, const Rat& t) {
    if (mu.length() < lam.length())
        throw std::domain_error("skewP_principal_finite: mu shorter than lam");
    if (!mu.all_nonneg() || !lam.all_nonneg())
        throw std::domain_error("skewP_principal_finite: nonnegative parts required");
    long long J = static_cast<long long>(mu.length() - lam.length());
    if (J == 0) return mu == lam ? Rat(1) : Rat(0);
    long long xmax = std::max(mu.max_part(0), lam.max_part(0));
    Rat res = pochhammer(t, t, J) * rat_pow(u, mu.sum() - lam.sum());
    for (long long x = 0; x <= xmax && res != 0; ++x) {
        long long mL = lam.mult(x), mM = mu.mult(x);
        res *= rat_pow(t, mL * mM + binom2(mu.conj(x + 1) - lam.conj(x + 1)));
        res /= pochhammer(t, t, mM);
        res *= qhyp_bar(mL, {rat_pow(t, -mM), Rat(0)},
                        {rat_pow(t, 1 + mu.conj(x + 1) - lam.conj(x)),
                         rat_pow(t, 1 + J - mu.conj(x) + lam.conj(x + 1))},
                        t, t);
    }
    return res;
}

Rat skewQ_principal_finite(const Signature& nu, const Signature& lam,
                           const Rat& u, long long J, const Rat& t) {
    if (nu.length() != lam.length())
        throw std::domain_error("skewQ_principal_finite: equal lengths required");
    if (J < 0) throw std::domain_error("skewQ_principal_finite: negative J");
    if (nu.empty()) return Rat(1);
    if (J == 0) return nu == lam ? Rat(1) : Rat(0);
    long long xmin = std::min(nu.min_part(0), lam.min_part(0));
    long long xmax = std::max(nu.max_part(0), lam.max_part(0));
    Rat res = rat_pow(u, nu.sum() - lam.sum()) * rat_pow(t, n_skew(nu, lam));
    for (long long x = xmin; x <= xmax && res != 0; ++x) {
        long long mL = lam.mult(x), mN = nu.mult(x);
        res *= rat_pow(t, mL * mN);
        res /= pochhammer(t, t, mL);
        res *= qhyp_bar(mL, {rat_pow(t, -mN), Rat(0)},
                        {rat_pow(t, 1 + nu.conj(x + 1) - lam.conj(x)),
                         rat_pow(t, 1 + J - nu.conj(x) + lam.conj(x + 1))},
                        t, t);
    }
    return res;
}

Rat skewP_principal_inf(const Signature& mu_in, const Signature& lam_in,
                        const Rat& u, const Rat& t) {
    if (!mu_in.all_nonneg() || !lam_in.all_nonneg())
        throw std::domain_error("skewP_principal_inf: partitions required");
    Signature mu = mu_in.trimmed(), lam = lam_in.trimmed();
    if (lam.length() > mu.length()) return Rat(0);
    for (size_t i = 0; i < lam.length(); ++i)
        if (lam[i] > mu[i]) return Rat(0);
    long long L = static_cast<long long>(mu.length());
    Signature mup = mu.padded(static_cast<size_t>(L));
    Signature lamp = lam.padded(static_cast<size_t>(L));
    Rat res = rat_pow(u, mu.sum() - lam.sum()) * rat_pow(t, n_skew(mup, lamp));
    long long xmax = mu.max_part(0);
    for (long long x = 1; x <= xmax; ++x) {
        res *= pochhammer(rat_pow(t, 1 + mu.conj(x) - lam.conj(x)), t, lam.mult(x));
        res /= pochhammer(t, t, mu.mult(x));
    }
    return res;
}

Rat skewQ_principal_inf(const Signature& nu, const Signature& lam,
                        const Rat& u, const Rat& t) {
    if (nu.length() != lam.length())
        throw std::domain_error("skewQ_principal_inf: equal lengths required");
    if (!contains_parts(nu, lam)) return Rat(0);
    Rat res = rat_pow(u, nu.sum() - lam.sum()) * rat_pow(t, n_skew(nu, lam));
    for (long long x : lam.support()) {
        res *= pochhammer(rat_pow(t, 1 + nu.conj(x) - lam.conj(x)), t, lam.mult(x));
        res /= pochhammer(t, t, lam.mult(x));
    }
    return res;
}

namespace {

std::vector<Rat> expand_finite_geo(const Rat& u, long long count, const Rat& t) {
    std::vector<Rat> v;
    Rat cur = u;
    for (long long i = 0; i < count; ++i) {
        v.push_back(cur);
        cur *= t;
    }
    return v;
}

EvalResult cauchy_explicit_pair(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                const Rat& t) {
    Rat res(1);
    for (const Rat& x : xs)
        for (const Rat& y : ys) {
            Rat xy = x * y;
            if (rat_abs(xy) >= 1) throw std::domain_error("cauchy_kernel: |x y| >= 1");
            res *= (1 - t * xy) / (1 - xy);
        }
    return EvalResult::make_exact(res);
}

EvalResult cauchy_explicit_infgeo(const std::vector<Rat>& xs, const Rat& v) {
    Rat res(1);
    for (const Rat& x : xs) {
        Rat xv = x * v;
        if (rat_abs(xv) >= 1) throw std::domain_error("cauchy_kernel: |x y| >= 1");
        res /= (1 - xv);
    }
    return EvalResult::make_exact(res);
}

} // namespace

EvalResult cauchy_kernel(const Specialization& X, const Specialization& Y,
                         const Rat& t, double tol) {
    using K = Specialization::Kind;
    // symmetric in X and Y; canonicalize so X.kind <= Y.kind in enum order
    if (static_cast<int>(X.kind) > static_cast<int>(Y.kind)) return cauchy_kernel(Y, X, t, tol);

    if (X.kind == K::Explicit && Y.kind == K::Explicit)
        return cauchy_explicit_pair(X.values, Y.values, t);
    if (X.kind == K::Explicit && Y.kind == K::FiniteGeo)
        return cauchy_explicit_pair(X.values, expand_finite_geo(Y.u, Y.count, t), t);
    if (X.kind == K::Explicit && Y.kind == K::InfiniteGeo)
        return cauchy_explicit_infgeo(X.values, Y.u);
    if (X.kind == K::FiniteGeo && Y.kind == K::FiniteGeo) {
        Rat uv = X.u * Y.u;
        if (rat_abs(uv) >= 1) throw std::domain_error("cauchy_kernel: |u v| >= 1");
        Rat num = pochhammer(uv * rat_pow(t, Y.count), t, X.count);
        Rat den = pochhammer(uv, t, X.count);
        return EvalResult::make_exact(num / den);
    }
    if (X.kind == K::FiniteGeo && Y.kind == K::InfiniteGeo) {
        Rat uv = X.u * Y.u;
        if (rat_abs(uv) >= 1) throw std::domain_error("cauchy_kernel: |u v| >= 1");
        return EvalResult::make_exact(1 / pochhammer(uv, t, X.count));
    }
    // infinite x infinite: 1/(uv;t)_inf with certified reciprocal error
    Rat uv = X.u * Y.u;
    if (rat_abs(uv) >= 1) throw std::domain_error("cauchy_kernel: |u v| >= 1");
    double inner = tol > 1e-12 ? 1e-13 : tol * 1e-3;
    for (;;) {
        EvalResult e = pochhammer_inf(uv, t, inner);
        if (e.is_exact()) {
            if (e.exact == 0) throw std::domain_error("cauchy_kernel: kernel pole");
            return EvalResult::make_exact(1 / e.exact);
        }
        double lo = std::abs(e.value) - e.error_bound;
        if (lo > 0) {
            double err = e.error_bound / (lo * std::abs(e.value)) + 1e-16 / lo;
            if (err <= tol) return EvalResult::make_approx(1.0 / e.value, err);
        }
        inner *= 1e-2;
        if (inner < 1e-300) throw std::runtime_error("cauchy_kernel: tolerance unreachable");
    }
}

std::map<Signature, Rat> skewP_table(const Signature& nu, const std::vector<Rat>& xs,
                                     const Rat& t, long long floor, long long cap) {
    long long n = static_cast<long long>(xs.size());
    long long k = static_cast<long long>(nu.length());
    if (!nu.empty() && (nu.max_part(0) > cap || nu.min_part(0) < floor))
        throw std::domain_error("skewP_table: nu outside [floor, cap]");
    Level level{{nu, Rat(1)}};
    for (long long s = 1; s <= n; ++s) {
        long long L = k + s;
        std::vector<long long> lo(L, floor), hi(L, cap);
        Level next;
        for (const auto& [sigma, w] : level) {
            for_each_up(sigma, lo, hi, [&](const Signature& tau) {
                Rat add = w * rat_pow(xs[s - 1], tau.sum() - sigma.sum()) *
                          psi_product(sigma, tau, t);
                if (add != 0) next[tau] += add;
            });
        }
        level = std::move(next);
    }
    return level;
}

std::map<Signature, Rat> skewQ_table(const Signature& mu, const std::vector<Rat>& ys,
                                     const Rat& t, long long cap) {
    long long m = static_cast<long long>(ys.size());
    long long n = static_cast<long long>(mu.length());
    if (!mu.empty() && mu.max_part(0) > cap)
        throw std::domain_error("skewQ_table: mu exceeds cap");
    std::vector<long long> lo(n), hi(n, cap);
    for (long long i = 0; i < n; ++i) lo[i] = mu[static_cast<size_t>(i)];
    Level level{{mu, Rat(1)}};
    for (long long s = 1; s <= m; ++s) {
        Level next;
        for (const auto& [sigma, w] : level) {
            for_each_horiz(sigma, lo, hi, [&](const Signature& tau) {
                Rat add = w * rat_pow(ys[s - 1], tau.sum() - sigma.sum()) *
                          phi_product(sigma, tau, t);
                if (add != 0) next[tau] += add;
            });
        }
        level = std::move(next);
    }
    return level;
}

SkewCauchyReport verify_skew_cauchy(const Signature& nu, const Signature& mu,
                                    const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                    const Rat& t, long long cap, double target_tail) {
    long long n = static_cast<long long>(xs.size());
    long long m = static_cast<long long>(ys.size());
    long long k = static_cast<long long>(nu.length());
    if (static_cast<long long>(mu.length()) != n + k)
        throw std::domain_error("verify_skew_cauchy: len(mu) must be #xs + len(nu)");
    if (m == 0 || n == 0) throw std::domain_error("verify_skew_cauchy: need variables on both sides");
    for (const Rat& x : xs)
        if (x <= 0) throw std::domain_error("verify_skew_cauchy: xs must be positive");
    for (const Rat& y : ys)
        if (y <= 0) throw std::domain_error("verify_skew_cauchy: ys must be positive");

    // translate both base signatures up so all parts are nonnegative; the
    // identity is covariant under simultaneous translation
    long long shift = std::max<long long>(0, -std::min(nu.min_part(0), mu.min_part(0)));
    Signature nu_s = nu.translated(shift), mu_s = mu.translated(shift);

    double X = 0, Y = 0;
    for (const Rat& x : xs) X = std::max(X, to_double(x));
    for (const Rat& y : ys) Y = std::max(Y, to_double(y));
    double XY = X * Y * (1 + 1e-14);
    if (XY >= 1) throw std::domain_error("verify_skew_cauchy: need max(xs)*max(ys) < 1");

    // exponent of the polynomial factor in the per-class tail bound: number of
    // free kappa coordinates plus chain-count exponents for both sides
    long long E = (n + k - 1);
    for (long long s = 1; s <= n - 1; ++s) E += k + s;
    E += (n + k) * (m - 1);
    long long base = mu_s.min_part(0);
    long long tail_sum_mu = mu_s.sum() - mu_s.max_part(0);
    double logXY = std::log(XY);
    auto log_class_bound = [&](long long c) {
        return E * std::log(static_cast<double>(c - base + 1)) +
               (static_cast<double>(c) + tail_sum_mu) * logXY -
               nu_s.sum() * std::log(X) - mu_s.sum() * std::log(Y);
    };
    auto tail_bound_at = [&](long long c) {
        double rho = XY * std::pow(static_cast<double>(c - base + 2) / (c - base + 1),
                                   static_cast<double>(E));
        if (rho >= 1) return std::numeric_limits<double>::infinity();
        return std::exp(log_class_bound(c + 1)) / (1 - rho) * 1.000001;
    };

    long long cap_eff = std::max({cap, mu_s.max_part(0), nu_s.max_part(0)});
    while (tail_bound_at(cap_eff) > target_tail) {
        ++cap_eff;
        if (cap_eff > 100000) throw std::runtime_error("verify_skew_cauchy: cap explosion");
    }

    auto p_tab = skewP_table(nu_s, xs, t, 0, cap_eff);
    auto q_tab = skewQ_table(mu_s, ys, t, cap_eff);

    SkewCauchyReport rep;
    rep.cap_used = cap_eff;
    rep.tail_bound = tail_bound_at(cap_eff);
    Rat lhs(0);
    size_t atoms = 0;
    for (const auto& [kappa, qv] : q_tab) {
        auto it = p_tab.find(kappa);
        if (it == p_tab.end()) continue;
        Rat term = it->second * qv;
        if (term != 0) {
            lhs += term;
            ++atoms;
        }
    }
    rep.kappa_atoms = atoms;
    rep.lhs = lhs;

    EvalResult kernel = cauchy_kernel(Specialization::explicit_values(xs),
                                      Specialization::explicit_values(ys), t);
    Rat rhs_sum(0);
    std::vector<long long> lo(k), hi(k);
    for (long long i = 1; i <= k; ++i) {
        lo[i - 1] = mu_s.at1(i + n);
        hi[i - 1] = std::min(mu_s.at1(i), nu_s.at1(i));
    }
    bool box_ok = true;
    for (long long i = 0; i < k; ++i)
        if (lo[i] > hi[i]) box_ok = false;
    if (box_ok && k > 0) {
        for_each_signature_in_box(lo, hi, [&](const Signature& lam) {
            Rat qn = eval_skewQ_chain(nu_s, lam, ys, t);
            if (qn == 0) return;
            Rat pm = eval_skewP_chain(mu_s, lam, xs, t);
            if (pm == 0) return;
            rhs_sum += qn * pm;
        });
    } else if (k == 0) {
        rhs_sum = eval_skewP_chain(mu_s, Signature{}, xs, t);
    }
    rep.rhs_sum = rhs_sum;
    rep.rhs = kernel.exact * rhs_sum;
    rep.diff = std::abs(to_double(rep.lhs - rep.rhs));
    rep.pass = rep.diff <= rep.tail_bound + 1e-14;
    return rep;
}

} // namespace hlpadic
