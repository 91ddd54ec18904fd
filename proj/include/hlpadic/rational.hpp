#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hlpadic {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(num, den) does not reduce the fraction on its own, so every
// constructor from a num/den pair in this codebase goes through here.
inline Rat make_rat(long long num, long long den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// base^e for integer e of either sign. 0^0 = 1, 0^negative is an error.
inline Rat rat_pow(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: zero base, negative exponent");
        return Rat(0);
    }
    unsigned long long a = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ull
                                 : static_cast<unsigned long long>(e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) std::swap(num, den);
    if (den < 0) { num = -num; den = -den; }
    Rat r(num, den);
    // num/den stay coprime under powers, only the sign needed fixing
    return r;
}

inline double to_double(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Accepts "3", "-3", "3/4", "-3/4".
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || s.empty())
        throw std::invalid_argument("parse_rat: cannot parse '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Result of evaluating a quantity that is either an exact rational or a
// certified floating approximation.  For Approx, the true value lies in
// [value - error_bound, value + error_bound].
struct EvalResult {
    enum class Kind { Exact, Approx };
    Kind kind = Kind::Exact;
    Rat exact = Rat(0);       // valid when kind == Exact
    double value = 0.0;       // always valid (for Exact it is a rounding of `exact`)
    double error_bound = 0.0; // 0 for Exact

    static EvalResult make_exact(Rat r) {
        EvalResult e;
        e.kind = Kind::Exact;
        e.value = to_double(r);
        e.exact = std::move(r);
        e.error_bound = 0.0;
        return e;
    }
    static EvalResult make_approx(double v, double err) {
        EvalResult e;
        e.kind = Kind::Approx;
        e.value = v;
        e.error_bound = err;
        return e;
    }
    bool is_exact() const { return kind == Kind::Exact; }
};

} // namespace hlpadic
