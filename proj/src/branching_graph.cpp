#include "hlpadic/branching_graph.hpp"

#include <cmath>
#include <stdexcept>

namespace hlpadic {

namespace {

// horizontal-strip coefficient for partitions: factors only at parts >= 1
Rat phi_partition(const Signature& rho, const Signature& sigma, const Rat& t) {
    Rat res(1);
    for (long long x : sigma.support())
        if (x >= 1 && sigma.mult(x) == rho.mult(x) + 1)
            res *= (1 - rat_pow(t, sigma.mult(x)));
    return res;
}

Rat rank_k_weight_ratio(const Signature& nu_neg, const Signature& mu_neg,
                        long long level, long long k, const Rat& t) {
    // Q_{-nu/-mu}(t^level, t^{level+1}, ...) * P_{-nu} / P_{-mu} at 1..t^{k-1}
    Rat q = skewQ_principal_inf(nu_neg, mu_neg, rat_pow(t, level), t);
    if (q == 0) return q;
    return q * principal_P(nu_neg, Rat(1), k, t) / principal_P(mu_neg, Rat(1), k, t);
}

} // namespace

Rat link(const Signature& mu, const Signature& lam, const Rat& t) {
    long long m = static_cast<long long>(mu.length());
    long long n = static_cast<long long>(lam.length());
    if (m < n) throw std::domain_error("link: len(mu) must be >= len(lam)");
    long long J = m - n;
    if (J == 0) return mu == lam ? Rat(1) : Rat(0);
    long long xmin = std::min(mu.min_part(0), lam.min_part(0));
    long long xmax = std::max(mu.max_part(0), lam.max_part(0));
    Rat res = 1 / qbinomial(m, J, t);
    for (long long x = xmin; x <= xmax && res != 0; ++x) {
        long long mL = lam.mult(x), mM = mu.mult(x);
        res *= rat_pow(t, (n - lam.conj(x)) * (mu.conj(x) - lam.conj(x)) + mL * mM);
        res /= pochhammer(t, t, mL);
        res *= qhyp_bar(mL, {rat_pow(t, -mM), Rat(0)},
                        {rat_pow(t, 1 + mu.conj(x + 1) - lam.conj(x)),
                         rat_pow(t, 1 + J - mu.conj(x) + lam.conj(x + 1))},
                        t, t);
    }
    return res;
}

Rat link_via_definition(const Signature& mu, const Signature& lam, const Rat& t) {
    long long m = static_cast<long long>(mu.length());
    long long n = static_cast<long long>(lam.length());
    if (m < n) throw std::domain_error("link_via_definition: len(mu) must be >= len(lam)");
    if (m == n) return mu == lam ? Rat(1) : Rat(0);
    long long shift = std::max<long long>(0, -std::min(mu.min_part(0), lam.min_part(0)));
    Signature mu_s = mu.translated(shift), lam_s = lam.translated(shift);
    Rat skew = skewP_principal_finite(mu_s, lam_s, rat_pow(t, n), t);
    if (skew == 0) return skew;
    return skew * principal_P(lam_s, Rat(1), n, t) / principal_P(mu_s, Rat(1), m, t);
}

Measure<Signature> boundary_measure(const InfSignature& mu, long long n, const Rat& t) {
    if (mu.tail_neg_inf)
        throw std::domain_error("boundary_measure: constant tail required");
    if (n < 1) throw std::domain_error("boundary_measure: n >= 1");
    long long D = mu.tail_const;
    std::vector<long long> lo(n, D), hi(n);
    for (long long i = 1; i <= n; ++i) hi[i - 1] = mu.part1(i);
    Measure<Signature> out;
    for_each_signature_in_box(lo, hi, [&](const Signature& lam) {
        std::vector<long long> mults;
        for (long long x : lam.support()) mults.push_back(lam.mult(x));
        Rat w = qmultinomial(n, mults, t);
        long long xmax = std::max(mu.part1(1), lam.max_part(D));
        for (long long x = D + 1; x <= xmax && w != 0; ++x) {
            long long mc = mu.conj(x), lc = lam.conj(x);
            w *= rat_pow(t, (mc - lc) * (n - lc));
            w *= pochhammer(rat_pow(t, 1 + mc - lc), t, lam.mult(x));
        }
        out.add(lam, w);
    });
    out.canonicalize();
    return out;
}

bool verify_coherency(const InfSignature& mu, long long n, const Rat& t) {
    Measure<Signature> up = boundary_measure(mu, n + 1, t);
    Measure<Signature> down = boundary_measure(mu, n, t);
    if (up.mass() != 1 || down.mass() != 1) return false;
    long long D = mu.tail_const;
    std::vector<long long> lo(n, D - 1), hi(n);
    for (long long i = 1; i <= n; ++i) hi[i - 1] = mu.part1(i) + 1;
    bool ok = true;
    for_each_signature_in_box(lo, hi, [&](const Signature& kappa) {
        Rat pushed(0);
        for (const auto& [lam, w] : up.atoms) pushed += w * link(lam, kappa, t);
        const Rat* direct = down.find(kappa);
        if (pushed != (direct ? *direct : Rat(0))) ok = false;
    });
    return ok;
}

Rat finite_k_boundary_weight(const Signature& mu, const Signature& lam,
                             long long level, const Rat& t) {
    long long k = static_cast<long long>(mu.length());
    if (static_cast<long long>(lam.length()) != k)
        throw std::domain_error("finite_k_boundary_weight: length mismatch");
    if (level < 1) throw std::domain_error("finite_k_boundary_weight: level >= 1");
    Rat ratio = rank_k_weight_ratio(lam.negated(), mu.negated(), level, k, t);
    if (ratio == 0) return ratio;
    return pochhammer(rat_pow(t, level), t, k) * ratio;
}

Measure<Signature> finite_k_boundary_measure(const Signature& mu, long long level,
                                             const Rat& t, long long floor) {
    long long k = static_cast<long long>(mu.length());
    Measure<Signature> out;
    if (k == 0) {
        out.add(Signature{}, Rat(1));
        out.canonicalize();
        return out;
    }
    if (floor > mu.min_part(0))
        throw std::domain_error("finite_k_boundary_measure: floor above support");
    std::vector<long long> lo(k, floor), hi(k);
    for (long long i = 0; i < k; ++i) hi[i] = mu[static_cast<size_t>(i)];
    for_each_signature_in_box(lo, hi, [&](const Signature& lam) {
        out.add(lam, finite_k_boundary_weight(mu, lam, level, t));
    });
    out.canonicalize();
    out.complete = false;
    out.deficit_bound = std::max(0.0, to_double(Rat(1) - out.mass())) + 1e-15;
    return out;
}

Rat link_rank_k(const Signature& nu, const Signature& lam, long long level, const Rat& t) {
    long long k = static_cast<long long>(nu.length());
    if (static_cast<long long>(lam.length()) != k)
        throw std::domain_error("link_rank_k: length mismatch");
    if (level < 1) throw std::domain_error("link_rank_k: level >= 1");
    if (k == 0) return Rat(1);
    Rat q = eval_skewQ_chain(lam.negated(), nu.negated(), {rat_pow(t, level)}, t);
    if (q == 0) return q;
    Rat res = q * principal_P(lam.negated(), Rat(1), k, t) /
              principal_P(nu.negated(), Rat(1), k, t);
    // divide by the normalizing kernel (1 - t^{level+k}) / (1 - t^{level})
    res *= (1 - rat_pow(t, level)) / (1 - rat_pow(t, level + k));
    return res;
}

namespace {

// case analysis for one column drop (m+1, n) -> (m, n); `emit` receives each
// target key and its link weight
void drop_col_targets(const ExtendedSignature& mu, long long m, long long n, const Rat& t,
                      long long floor,
                      const std::function<void(const ExtendedSignature&, const Rat&)>& emit) {
    long long k = static_cast<long long>(mu.finite.length());
    if (mu.length() != std::min(m + 1, n))
        throw std::domain_error("drop_col: key length does not match source vertex");
    const Signature& mustar = mu.finite;
    if (k == m + 1 && m + 1 <= n) {
        // rank drops from m+1 to m: vertical interlacing below mu*
        std::vector<long long> lo(m), hi(m);
        for (long long i = 1; i <= m; ++i) {
            lo[i - 1] = mustar.at1(i + 1);
            hi[i - 1] = mustar.at1(i);
        }
        Rat denom = principal_P(mustar, Rat(1), m + 1, t);
        if (m == 0) {
            emit(ExtendedSignature(Signature{}, 0), Rat(1));
            return;
        }
        for_each_signature_in_box(lo, hi, [&](const Signature& lam) {
            Rat w = eval_skewP_chain(mustar, lam, {rat_pow(t, m)}, t);
            if (w == 0) return;
            w *= principal_P(lam, Rat(1), m, t) / denom;
            emit(ExtendedSignature(lam, 0), w);
        });
    } else if (k <= std::min(m, n)) {
        // rank preserved
        long long lvl = m + 1 - k;
        if (k == 0) {
            emit(ExtendedSignature(Signature{}, std::min(m, n)), Rat(1));
            return;
        }
        std::vector<long long> lo(k), hi(k);
        for (long long i = 1; i <= k; ++i) {
            lo[i - 1] = i < k ? mustar.at1(i + 1) : floor;
            hi[i - 1] = mustar.at1(i);
        }
        Rat denom = principal_P(mustar.negated(), Rat(1), k, t);
        Rat norm = (1 - rat_pow(t, lvl)) / (1 - rat_pow(t, m + 1));
        for_each_signature_in_box(lo, hi, [&](const Signature& lam) {
            Rat w = eval_skewQ_chain(lam.negated(), mustar.negated(), {rat_pow(t, lvl)}, t);
            if (w == 0) return;
            w *= principal_P(lam.negated(), Rat(1), k, t) / denom * norm;
            emit(ExtendedSignature(lam, std::min(m, n) - k), w);
        });
    } else {
        throw std::domain_error("drop_col: rank exceeds target vertex");
    }
}

} // namespace

Rat link2d_drop_col(const ExtendedSignature& mu, const ExtendedSignature& lam,
                    long long m, long long n, const Rat& t) {
    if (lam.length() != std::min(m, n))
        throw std::domain_error("link2d_drop_col: target key length mismatch");
    long long k = static_cast<long long>(mu.finite.length());
    const Signature& mustar = mu.finite;
    const Signature& lamstar = lam.finite;
    if (mu.length() != std::min(m + 1, n))
        throw std::domain_error("link2d_drop_col: source key length mismatch");
    if (k == m + 1 && m + 1 <= n) {
        if (lam.neg_inf != 0) return Rat(0);
        Rat w = eval_skewP_chain(mustar, lamstar, {rat_pow(t, m)}, t);
        if (w == 0) return w;
        return w * principal_P(lamstar, Rat(1), m, t) / principal_P(mustar, Rat(1), m + 1, t);
    }
    if (k <= std::min(m, n)) {
        if (static_cast<long long>(lamstar.length()) != k) return Rat(0);
        if (k == 0) return Rat(1);
        long long lvl = m + 1 - k;
        Rat w = eval_skewQ_chain(lamstar.negated(), mustar.negated(), {rat_pow(t, lvl)}, t);
        if (w == 0) return w;
        w *= principal_P(lamstar.negated(), Rat(1), k, t) /
             principal_P(mustar.negated(), Rat(1), k, t);
        w *= (1 - rat_pow(t, lvl)) / (1 - rat_pow(t, m + 1));
        return w;
    }
    throw std::domain_error("link2d_drop_col: rank exceeds target vertex");
}

Rat link2d_drop_row(const ExtendedSignature& mu, const ExtendedSignature& lam,
                    long long m, long long n, const Rat& t) {
    return link2d_drop_col(mu, lam, n, m, t);
}

Measure<ExtendedSignature> push_drop_col(const Measure<ExtendedSignature>& src,
                                         long long m, long long n, const Rat& t,
                                         long long floor) {
    Measure<ExtendedSignature> out;
    for (const auto& [mu, w] : src.atoms) {
        drop_col_targets(mu, m, n, t, floor,
                         [&](const ExtendedSignature& lam, const Rat& lw) { out.add(lam, w * lw); });
    }
    out.canonicalize();
    out.complete = false;
    out.deficit_bound = std::max(0.0, to_double(Rat(1) - out.mass())) + 1e-15;
    return out;
}

Measure<ExtendedSignature> push_drop_row(const Measure<ExtendedSignature>& src,
                                         long long m, long long n, const Rat& t,
                                         long long floor) {
    return push_drop_col(src, n, m, t, floor);
}

Measure<ExtendedSignature> boundary_measure_2d(const InfSignature& mu, long long m,
                                               long long n, const Rat& t, long long floor) {
    if (m < 1 || n < 1) throw std::domain_error("boundary_measure_2d: m, n >= 1");
    Measure<ExtendedSignature> out;
    if (!mu.tail_neg_inf) {
        if (m >= n) {
            Measure<Signature> first = boundary_measure(mu, n, t);
            for (const auto& [lam, w] : first.atoms) {
                Measure<Signature> second = finite_k_boundary_measure(lam, m - n + 1, t, floor);
                for (const auto& [nustar, w2] : second.atoms)
                    out.add(ExtendedSignature(nustar, 0), w * w2);
            }
            out.canonicalize();
            out.complete = false;
            out.deficit_bound = std::max(0.0, to_double(Rat(1) - out.mass())) + 1e-15;
            return out;
        }
        Measure<ExtendedSignature> cur = boundary_measure_2d(mu, n, n, t, floor);
        for (long long mm = n - 1; mm >= m; --mm) cur = push_drop_col(cur, mm, n, t, floor);
        return cur;
    }
    long long k = static_cast<long long>(mu.prefix.length());
    if (m >= k && n >= k) {
        Measure<Signature> first = finite_k_boundary_measure(mu.prefix, n - k + 1, t, floor);
        for (const auto& [lam, w] : first.atoms) {
            Measure<Signature> second = finite_k_boundary_measure(lam, m - k + 1, t, floor);
            for (const auto& [nustar, w2] : second.atoms)
                out.add(ExtendedSignature(nustar, std::min(m, n) - k), w * w2);
        }
        out.canonicalize();
        out.complete = false;
        out.deficit_bound = std::max(0.0, to_double(Rat(1) - out.mass())) + 1e-15;
        return out;
    }
    long long M = std::max(m, k), N = std::max(n, k);
    Measure<ExtendedSignature> cur = boundary_measure_2d(mu, M, N, t, floor);
    for (long long nn = N - 1; nn >= n; --nn) cur = push_drop_row(cur, M, nn, t, floor);
    for (long long mm = M - 1; mm >= m; --mm) cur = push_drop_col(cur, mm, n, t, floor);
    return cur;
}

Rat gamma_kernel(const Signature& lam, const Signature& nu, const Rat& alpha, const Rat& t) {
    if (lam.length() != nu.length())
        throw std::domain_error("gamma_kernel: equal lengths required");
    if (!(alpha > 0 && alpha < 1)) throw std::domain_error("gamma_kernel: need 0 < alpha < 1");
    long long n = static_cast<long long>(lam.length());
    Rat phi = phi_coeff(lam, nu, t);
    if (phi == 0) return phi;
    Rat res = phi * rat_pow(alpha, nu.sum() - lam.sum());
    res *= principal_P(nu, Rat(1), n, t) / principal_P(lam, Rat(1), n, t);
    res *= pochhammer(alpha, t, n) / pochhammer(alpha * t, t, n);
    return res;
}

Rat gamma_inf(const InfSignature& mu, const InfSignature& kappa, const Rat& alpha, const Rat& t) {
    if (mu.tail_neg_inf || kappa.tail_neg_inf)
        throw std::domain_error("gamma_inf: constant tails required");
    if (!(alpha > 0 && alpha < 1)) throw std::domain_error("gamma_inf: need 0 < alpha < 1");
    if (mu.tail_const != kappa.tail_const) return Rat(0);
    long long D = mu.tail_const;
    Signature rho = mu.prefix.translated(-D);
    Signature sigma = kappa.prefix.translated(-D);
    size_t L = std::max(rho.length(), sigma.length()) + 1;
    Signature rp = rho.padded(L), sp = sigma.padded(L);
    if (!interlace_horiz(rp, sp)) return Rat(0);
    Rat res = (1 - alpha) * rat_pow(alpha, sigma.sum() - rho.sum());
    res *= phi_partition(rp, sp, t);
    res *= principal_P_inf(sigma, t) / principal_P_inf(rho, t);
    return res;
}

CommutationReport verify_commutation(const Signature& mu, long long n, const Rat& alpha,
                                     const Rat& t, long long cap, double target_tail,
                                     long long window_extra) {
    long long m = static_cast<long long>(mu.length());
    if (n < 1 || n >= m) throw std::domain_error("verify_commutation: need 1 <= n < len(mu)");
    if (!(alpha > 0 && alpha < 1)) throw std::domain_error("verify_commutation: 0 < alpha < 1");

    // tail of the truncated kappa sum: horizontal strips above mu with
    // kappa_1 > cap; chain count per class is cap-independent
    double B = 1;
    for (long long i = 2; i <= m; ++i) B *= static_cast<double>(mu.at1(i - 1) - mu.at1(i) + 1);
    double ttinf = pochhammer_inf_lower(t, t);
    double a = to_double(alpha);
    auto tail_at = [&](long long c) {
        return B * std::pow(ttinf, -static_cast<double>(m)) *
               std::pow(a, static_cast<double>(c + 1 - mu.at1(1))) / (1 - a) * 1.000001;
    };
    long long cap_eff = std::max(cap, mu.at1(1));
    while (tail_at(cap_eff) > target_tail) {
        ++cap_eff;
        if (cap_eff > 100000) throw std::runtime_error("verify_commutation: cap explosion");
    }

    // RHS pieces: lam runs over the finite link support
    std::vector<long long> llo(n), lhi(n);
    for (long long i = 1; i <= n; ++i) {
        llo[i - 1] = mu.at1(i + m - n);
        lhi[i - 1] = mu.at1(i);
    }
    std::vector<std::pair<Signature, Rat>> rhs_pairs;
    for_each_signature_in_box(llo, lhi, [&](const Signature& lam) {
        Rat lw = link(mu, lam, t);
        if (lw != 0) rhs_pairs.emplace_back(lam, lw);
    });

    // LHS pieces: kappa interlaces horizontally above mu, kappa_1 <= cap
    std::vector<long long> klo(m), khi(m);
    for (long long i = 1; i <= m; ++i) {
        klo[i - 1] = mu.at1(i);
        khi[i - 1] = i == 1 ? cap_eff : mu.at1(i - 1);
    }
    std::vector<std::pair<Signature, Rat>> lhs_pairs;
    for_each_signature_in_box(klo, khi, [&](const Signature& kappa) {
        Rat gw = gamma_kernel(mu, kappa, alpha, t);
        if (gw != 0) lhs_pairs.emplace_back(kappa, gw);
    });

    CommutationReport rep;
    rep.cap_used = cap_eff;
    rep.tail_bound = tail_at(cap_eff);
    std::vector<long long> nlo(n, mu.at1(m)), nhi(n, mu.at1(1) + window_extra);
    for_each_signature_in_box(nlo, nhi, [&](const Signature& nu) {
        Rat lhs(0), rhs(0);
        for (const auto& [kappa, gw] : lhs_pairs) lhs += gw * link(kappa, nu, t);
        for (const auto& [lam, lw] : rhs_pairs) rhs += lw * gamma_kernel(lam, nu, alpha, t);
        rep.max_diff = std::max(rep.max_diff, std::abs(to_double(lhs - rhs)));
        ++rep.targets_checked;
    });
    rep.pass = rep.max_diff <= rep.tail_bound + 1e-14;
    return rep;
}

} // namespace hlpadic
