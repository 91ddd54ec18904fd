#include "hlpadic/qseries.hpp"

#include <cmath>
#include <stdexcept>

namespace hlpadic {

Rat pochhammer(const Rat& a, const Rat& t, long long n) {
    if (n < 0) throw std::domain_error("pochhammer: negative length");
    Rat prod(1), tp(1);
    for (long long i = 0; i < n; ++i) {
        prod *= (1 - a * tp);
        if (prod == 0) return prod;
        tp *= t;
    }
    return prod;
}

EvalResult pochhammer_inf(const Rat& a, const Rat& t, double tol) {
    if (!(t > 0 && t < 1)) throw std::domain_error("pochhammer_inf: need 0 < t < 1");
    if (tol <= 0) throw std::domain_error("pochhammer_inf: need tol > 0");
    if (a == 0) return EvalResult::make_exact(Rat(1));

    // Peel factors until |a| t^K < 1, then grow K until the certified tail
    // bound  |log prod_{i>=K}(1 - a t^i)| <= |a|t^K / ((1-t)(1-|a|t^K))
    // makes the error small enough.
    Rat abs_a = rat_abs(a);
    Rat partial(1), tp(1); // tp = t^K
    long long K = 0;
    auto advance = [&](long long upto) {
        for (; K < upto; ++K) {
            partial *= (1 - a * tp);
            tp *= t;
        }
    };
    while (abs_a * tp >= 1) advance(K + 1);
    if (partial == 0) return EvalResult::make_exact(Rat(0)); // a was a power of 1/t

    double log_t = std::log(to_double(t));
    for (;;) {
        if (partial == 0) return EvalResult::make_exact(Rat(0));
        double atk = to_double(abs_a * tp);
        double beta = atk / ((1.0 - to_double(t)) * (1.0 - atk)) * 1.0000001;
        double p = to_double(partial);
        double err = std::abs(p) * std::expm1(beta) * 1.01 + std::abs(p) * 1e-15 + 1e-300;
        if (err <= tol) return EvalResult::make_approx(p, err);
        // estimate how much further K must go, then take it in one chunk
        double need = std::log(tol / (std::abs(p) + 1e-300)) - std::log(2.0 / (1.0 - to_double(t)));
        long long step = (need < 0 && log_t < 0) ? static_cast<long long>(need / log_t) + 2 : 2;
        if (step < 2) step = 2;
        if (K > 2000000) throw std::runtime_error("pochhammer_inf: tolerance unreachable");
        advance(K + step);
    }
}

double pochhammer_inf_lower(const Rat& a, const Rat& t) {
    if (!(a > 0 && a < 1)) throw std::domain_error("pochhammer_inf_lower: need 0 < a < 1");
    EvalResult e = pochhammer_inf(a, t, 1e-12);
    double lo = e.value - e.error_bound;
    if (lo <= 0) throw std::runtime_error("pochhammer_inf_lower: bound not positive");
    return lo;
}

Rat qbinomial(long long a, long long b, const Rat& t) {
    if (b < 0 || b > a) return Rat(0);
    // (t;t)_a / ((t;t)_b (t;t)_{a-b}); compute the shorter side first
    Rat num(1), den(1), tp(1);
    // [a,b] = prod_{i=1}^{b} (1 - t^{a-b+i}) / (1 - t^i)
    Rat t_high = rat_pow(t, a - b);
    Rat tp_low(t), tp_high(t_high * t);
    for (long long i = 1; i <= b; ++i) {
        num *= (1 - tp_high);
        den *= (1 - tp_low);
        tp_low *= t;
        tp_high *= t;
    }
    (void)tp;
    return num / den;
}

Rat qmultinomial(long long n, const std::vector<long long>& mults, const Rat& t) {
    long long used = 0;
    Rat den(1);
    for (long long m : mults) {
        if (m < 0) throw std::domain_error("qmultinomial: negative multiplicity");
        used += m;
        den *= pochhammer(t, t, m);
    }
    if (used > n) throw std::domain_error("qmultinomial: multiplicities exceed n");
    return pochhammer(t, t, n) / den;
}

Rat qhyp_bar(long long n, const std::vector<Rat>& as, const std::vector<Rat>& bs,
             const Rat& t, const Rat& z) {
    if (as.size() != bs.size()) throw std::domain_error("qhyp_bar: parameter lists differ in length");
    if (n < 0) throw std::domain_error("qhyp_bar: negative order");
    Rat t_min_n = rat_pow(t, -n); // upper parameter t^{-n}
    Rat total(0);
    Rat zk(1);                    // z^k
    Rat top_k(1);                 // (t^{-n};t)_k
    Rat tt_k(1);                  // (t;t)_k
    Rat tp(1);                    // t^{k-1} tracker for incremental updates
    for (long long k = 0; k <= n; ++k) {
        if (k > 0) {
            top_k *= (1 - t_min_n * tp);
            tt_k *= (1 - tp * t);
            zk *= z;
            tp *= t;
        }
        Rat term = zk * top_k / tt_k;
        Rat tk = rat_pow(t, k);
        for (size_t i = 0; i < as.size(); ++i) {
            term *= pochhammer(as[i], t, k);
            term *= pochhammer(bs[i] * tk, t, n - k);
        }
        total += term;
    }
    return total;
}

} // namespace hlpadic
