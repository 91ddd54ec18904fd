#include <doctest.h>

#include <cmath>

#include "hlpadic/hall_littlewood.hpp"

using namespace hlpadic;

namespace {
const Rat t12 = make_rat(1, 2);
const Rat t13 = make_rat(1, 3);

std::vector<Rat> geo(const Rat& u, long long J, const Rat& t) {
    std::vector<Rat> v;
    Rat c = u;
    for (long long i = 0; i < J; ++i) {
        v.push_back(c);
        c *= t;
    }
    return v;
}
} // namespace

TEST_CASE("branching coefficients on pinned instances") {
    Rat t = t12;
    CHECK(psi_coeff(Signature{1}, Signature{1, 0}, t) == 1);
    CHECK(psi_coeff(Signature{0}, Signature{1, 0}, t) == 1);
    CHECK(psi_coeff(Signature{1}, Signature{2, 0}, t) == 1 - t);
    CHECK(psi_coeff(Signature{1}, Signature{1, 1}, t) == 1);
    CHECK(psi_coeff(Signature{2}, Signature{1, 0}, t) == 0); // not interlaced
    CHECK(psi_coeff(Signature{}, Signature{5}, t) == 1);

    CHECK(phi_coeff(Signature{0}, Signature{1}, t) == 1 - t);
    CHECK(phi_coeff(Signature{1}, Signature{1}, t) == 1);
    CHECK(phi_coeff(Signature{1, 0}, Signature{1, 1}, t) == 1 - t * t);
    CHECK(phi_coeff(Signature{0, 0}, Signature{1, 1}, t) == 0); // not interlaced
    // only the multiplicity of 2 grows; the part equal to 1 is carried over
    CHECK(phi_coeff(Signature{1, 0}, Signature{2, 1}, t) == 1 - t);
    CHECK(phi_coeff(Signature{0, 0}, Signature{1, 0}, t) == 1 - t);
}

TEST_CASE("single-variable skew P matches its two pinned values") {
    Rat t = t13, x = make_rat(2, 7);
    CHECK(eval_skewP_chain(Signature{1, 0}, Signature{1}, {x}, t) == 1);
    CHECK(eval_skewP_chain(Signature{1, 0}, Signature{0}, {x}, t) == x);
}

TEST_CASE("monomial expansions at rational points") {
    Rat t = t12, x1 = make_rat(1, 3), x2 = make_rat(1, 5);
    CHECK(eval_P(Signature{1, 0}, {x1, x2}, t) == x1 + x2);
    CHECK(eval_P(Signature{1, 1}, {x1, x2}, t) == x1 * x2);
    CHECK(eval_P(Signature{2, 0}, {x1, x2}, t) ==
          x1 * x1 + x2 * x2 + (1 - t) * x1 * x2);
    CHECK(eval_Q(Signature{1}, {x1}, t) == (1 - t) * x1);
    CHECK(eval_Q(Signature{1, 1}, {x1, x2}, t) == (1 - t) * (1 - t * t) * x1 * x2);
}

TEST_CASE("chain evaluation agrees with symmetrization") {
    std::vector<Rat> xs2{make_rat(1, 2), make_rat(1, 3)};
    for_each_signature_in_box({-2, -2}, {2, 2}, [&](const Signature& lam) {
        CHECK(eval_P(lam, xs2, t13) == eval_skewP_chain(lam, Signature{}, xs2, t13));
    });
    std::vector<Rat> xs3{make_rat(1, 2), make_rat(1, 3), make_rat(2, 3)};
    for_each_signature_in_box({0, 0, 0}, {2, 2, 2}, [&](const Signature& lam) {
        CHECK(eval_P(lam, xs3, t12) == eval_skewP_chain(lam, Signature{}, xs3, t12));
    });
}

TEST_CASE("variables equal to zero reduce the variable count") {
    Rat t = t13, x1 = make_rat(3, 5), x2 = make_rat(1, 4);
    CHECK(eval_P(Signature{2, 1, 0}, {x1, x2, Rat(0)}, t) ==
          eval_P(Signature{2, 1}, {x1, x2}, t));
    CHECK_THROWS(eval_P(Signature{2, 1, -1}, {x1, x2, Rat(0)}, t));
}

TEST_CASE("principal specialization closed form") {
    Rat u = make_rat(1, 3);
    for_each_signature_in_box({-1, -1}, {2, 2}, [&](const Signature& lam) {
        CHECK(principal_P(lam, u, 2, t12) == eval_P(lam, geo(u, 2, t12), t12));
    });
    for_each_signature_in_box({0, 0, 0}, {2, 2, 2}, [&](const Signature& lam) {
        CHECK(principal_P(lam, u, 3, t13) == eval_P(lam, geo(u, 3, t13), t13));
    });
}

TEST_CASE("stable principal specialization") {
    Rat t = t12;
    CHECK(principal_P_inf(Signature{1}, t) == 1 / (1 - t));
    // finite principal values converge to the stable one
    Signature mu{3, 1, 1};
    Rat fin = principal_P(mu.padded(30), Rat(1), 30, t);
    CHECK(std::abs(to_double(fin) - to_double(principal_P_inf(mu, t))) < 1e-8);
}

TEST_CASE("finite-principal skew P closed form vs chains") {
    Rat u = make_rat(1, 3), t = t12;
    // J = 1 and J = 2 over small boxes
    for_each_signature_in_box({0}, {2}, [&](const Signature& lam) {
        for_each_signature_in_box({0, 0}, {3, 3}, [&](const Signature& mu) {
            CHECK(skewP_principal_finite(mu, lam, u, t) ==
                  eval_skewP_chain(mu, lam, geo(u, 1, t), t));
        });
        for_each_signature_in_box({0, 0, 0}, {3, 3, 3}, [&](const Signature& mu) {
            CHECK(skewP_principal_finite(mu, lam, u, t) ==
                  eval_skewP_chain(mu, lam, geo(u, 2, t), t));
        });
    });
    // self-vanishing on non-containment
    CHECK(skewP_principal_finite(Signature{0, 0}, Signature{2}, u, t) == 0);
}

TEST_CASE("finite-principal skew Q closed form vs chains") {
    Rat u = make_rat(2, 5), t = t13;
    for (long long J : {1LL, 2LL}) {
        for_each_signature_in_box({-1, -1}, {2, 2}, [&](const Signature& lam) {
            for_each_signature_in_box({-1, -1}, {2, 2}, [&](const Signature& nu) {
                CHECK(skewQ_principal_finite(nu, lam, u, J, t) ==
                      eval_skewQ_chain(nu, lam, geo(u, J, t), t));
            });
        });
    }
}

TEST_CASE("stable skew principal forms") {
    Rat u = make_rat(1, 5), t = t12;
    CHECK(skewQ_principal_inf(Signature{1}, Signature{0}, u, t) == u);
    CHECK(skewQ_principal_inf(Signature{1, 1}, Signature{0, 0}, u, t) == u * u * t);
    CHECK(skewQ_principal_inf(Signature{0, -1}, Signature{1, -1}, u, t) == 0);
    CHECK(skewP_principal_inf(Signature{1}, Signature{}, u, t) == u / (1 - t));
    CHECK(skewP_principal_inf(Signature{1}, Signature{2}, u, t) == 0);

    // long finite geometric specializations converge to the stable values
    for_each_signature_in_box({-1, -1}, {2, 2}, [&](const Signature& lam) {
        for_each_signature_in_box({-1, -1}, {2, 2}, [&](const Signature& nu) {
            double fin = to_double(skewQ_principal_finite(nu, lam, u, 40, t));
            double inf = to_double(skewQ_principal_inf(nu, lam, u, t));
            CHECK(std::abs(fin - inf) <= 1e-10);
        });
    });
}

TEST_CASE("cauchy kernel closed forms") {
    Rat t = t12;
    auto ex = [](std::vector<Rat> v) { return Specialization::explicit_values(std::move(v)); };

    // explicit x explicit
    Rat x = make_rat(1, 3), y = make_rat(1, 2);
    EvalResult r = cauchy_kernel(ex({x}), ex({y}), t);
    CHECK(r.is_exact());
    CHECK(r.exact == (1 - t * x * y) / (1 - x * y));

    // finite geo x infinite geo: 1/(uv;t)_J
    EvalResult fg = cauchy_kernel(Specialization::finite_geo(Rat(1), 3),
                                  Specialization::infinite_geo(make_rat(1, 3)), t);
    CHECK(fg.is_exact());
    CHECK(fg.exact == 1 / pochhammer(make_rat(1, 3), t, 3));

    // finite geo x finite geo equals its explicit expansion
    Specialization a = Specialization::finite_geo(make_rat(1, 2), 2);
    Specialization b = Specialization::finite_geo(make_rat(1, 3), 3);
    EvalResult lhs = cauchy_kernel(a, b, t);
    EvalResult rhs = cauchy_kernel(ex(geo(make_rat(1, 2), 2, t)), ex(geo(make_rat(1, 3), 3, t)), t);
    CHECK(lhs.exact == rhs.exact);

    // explicit x infinite geo telescopes
    EvalResult ei = cauchy_kernel(ex({x, y}), Specialization::infinite_geo(make_rat(1, 5)), t);
    CHECK(ei.exact == 1 / ((1 - x * make_rat(1, 5)) * (1 - y * make_rat(1, 5))));

    // infinite x infinite is certified approximate
    EvalResult ii = cauchy_kernel(Specialization::infinite_geo(make_rat(1, 2)),
                                  Specialization::infinite_geo(make_rat(1, 3)), t, 1e-10);
    CHECK(!ii.is_exact());
    CHECK(ii.error_bound <= 1e-10);
    EvalResult poch = pochhammer_inf(make_rat(1, 6), t, 1e-14);
    CHECK(std::abs(ii.value - 1.0 / poch.value) <= 1e-9);

    CHECK_THROWS(cauchy_kernel(ex({Rat(2)}), ex({Rat(1)}), t));
}

TEST_CASE("skew tables reproduce per-target chain sums") {
    Rat t = t12;
    std::vector<Rat> xs{make_rat(1, 3), make_rat(1, 4)};
    Signature nu{1};
    auto tab = skewP_table(nu, xs, t, 0, 4);
    int checked = 0;
    for (const auto& [kappa, val] : tab) {
        CHECK(val == eval_skewP_chain(kappa, nu, xs, t));
        ++checked;
    }
    CHECK(checked > 10);

    std::vector<Rat> ys{make_rat(1, 2), make_rat(1, 5)};
    Signature mu{2, 0, 0};
    auto qtab = skewQ_table(mu, ys, t, 4);
    for (const auto& [kappa, val] : qtab)
        CHECK(val == eval_skewQ_chain(kappa, mu, ys, t));
}

TEST_CASE("skew Cauchy identity verifies on small instances") {
    Rat t = t12;
    SkewCauchyReport rep = verify_skew_cauchy(Signature{0}, Signature{1, 0},
                                              {make_rat(1, 3)}, {make_rat(1, 2)}, t, 10, 1e-8);
    CHECK(rep.pass);
    CHECK(rep.tail_bound <= 1e-8);
    CHECK(rep.diff <= rep.tail_bound + 1e-14);

    // negative parts exercise the translation step
    SkewCauchyReport rep2 = verify_skew_cauchy(Signature{-1}, Signature{1, -2},
                                               {make_rat(1, 4)}, {make_rat(1, 3)}, t13, 8, 1e-9);
    CHECK(rep2.pass);

    // two variables on each side
    SkewCauchyReport rep3 = verify_skew_cauchy(
        Signature{1, 0}, Signature{2, 1, 0, 0},
        {make_rat(1, 3), make_rat(1, 4)}, {make_rat(1, 2), make_rat(1, 5)}, t12, 12, 1e-8);
    CHECK(rep3.pass);
}
