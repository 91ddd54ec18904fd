#include <doctest.h>

#include "hlpadic/signatures.hpp"

using namespace hlpadic;

TEST_CASE("Signature validation and accessors") {
    Signature lam{2, 0, 0, -1};
    CHECK(lam.length() == 4);
    CHECK(lam.sum() == 1);
    CHECK(lam.conj(3) == 0);
    CHECK(lam.conj(2) == 1);
    CHECK(lam.conj(1) == 1);
    CHECK(lam.conj(0) == 3);
    CHECK(lam.conj(-1) == 4);
    CHECK(lam.conj(-5) == 4);
    CHECK(lam.mult(0) == 2);
    CHECK(lam.mult(5) == 0);
    CHECK(lam.at1(0) == LLONG_MAX);
    CHECK(lam.at1(1) == 2);
    CHECK(lam.at1(5) == LLONG_MIN);
    CHECK_THROWS(Signature({1, 2}));
    CHECK(Signature{2, 1, -1}.negated() == Signature{1, -1, -2});
    CHECK(Signature{3, 1, 0, 0}.trimmed() == Signature{3, 1});
    CHECK(Signature{3, 1}.padded(4) == Signature{3, 1, 0, 0});
    CHECK(lam.support() == std::vector<long long>{2, 0, -1});
}

TEST_CASE("n_stat") {
    CHECK(n_stat(Signature{3, 1, 0}) == 1);
    CHECK(n_stat(Signature{}) == 0);
    CHECK(n_stat(Signature{2, 2, 2}) == 6);
    CHECK(n_stat(Signature{0, -2}) == -2);
}

namespace {
// conjugate-side formula for n_skew, with the clamp at negative differences
long long n_skew_conj_oracle(const Signature& nu, const Signature& lam) {
    long long lo = std::min(lam.min_part(0), nu.min_part(0)) - 2;
    long long hi = std::max(lam.max_part(0), nu.max_part(0)) + 2;
    long long s = 0;
    for (long long x = lo; x <= hi; ++x) s += binom2(nu.conj(x + 1) - lam.conj(x + 1));
    return s;
}
} // namespace

TEST_CASE("n_skew matches its conjugate form, including the clamp") {
    Signature nu{0, 0}, lam{2, 0};
    CHECK(n_skew(nu, lam) == 0);
    CHECK(n_skew_conj_oracle(nu, lam) == 0);

    // exhaustive small sweep
    std::vector<long long> lo{-2, -2, -2}, hi{2, 2, 2};
    for_each_signature_in_box(lo, hi, [&](const Signature& a) {
        for_each_signature_in_box(lo, hi, [&](const Signature& b) {
            CHECK(n_skew(a, b) == n_skew_conj_oracle(a, b));
        });
    });
}

TEST_CASE("interlacing predicates") {
    CHECK(interlace_up(Signature{1}, Signature{1, 0}));
    CHECK(interlace_up(Signature{1}, Signature{3, 1}));
    CHECK(!interlace_up(Signature{1}, Signature{3, 2}));
    CHECK(interlace_up(Signature{}, Signature{5}));
    CHECK(!interlace_up(Signature{1, 0}, Signature{1, 0}));

    CHECK(interlace_horiz(Signature{2, 0}, Signature{3, 1}));
    CHECK(interlace_horiz(Signature{2, 0}, Signature{2, 2}));
    CHECK(!interlace_horiz(Signature{2, 0}, Signature{3, 3}));
    CHECK(!interlace_horiz(Signature{2, 0}, Signature{1, 0}));
    CHECK(interlace_horiz(Signature{}, Signature{}));

    CHECK(contains_parts(Signature{3, 1}, Signature{2, 1}));
    CHECK(!contains_parts(Signature{3, 1}, Signature{2, 2}));
}

TEST_CASE("box and partition enumeration") {
    int count = 0;
    for_each_signature_in_box({0, 0}, {2, 2}, [&](const Signature&) { ++count; });
    CHECK(count == 6);
    count = 0;
    for_each_signature_in_box({-1, -1}, {1, 1}, [&](const Signature&) { ++count; });
    CHECK(count == 6);
    count = 0;
    for_each_partition(4, 4, [&](const Signature&) { ++count; });
    CHECK(count == 12); // partitions of 0..4
    count = 0;
    for_each_partition(4, 1, [&](const Signature&) { ++count; });
    CHECK(count == 5); // columns only
}

TEST_CASE("ExtendedSignature ordering and length") {
    ExtendedSignature a(Signature{2, 0}, 1);
    CHECK(a.length() == 3);
    ExtendedSignature b(Signature{2, 0}, 0);
    CHECK(a != b);
    CHECK_THROWS(ExtendedSignature(Signature{}, -1));
}

TEST_CASE("InfSignature") {
    InfSignature mu = InfSignature::const_tail(Signature{2, 0, 0}, 0);
    CHECK(mu.prefix == Signature{2}); // trailing tail values trimmed
    CHECK(mu.part1(1) == 2);
    CHECK(mu.part1(2) == 0);
    CHECK(mu.part1(100) == 0);
    CHECK(mu.conj(0) == InfSignature::CONJ_INF);
    CHECK(mu.conj(1) == 1);
    CHECK(mu.conj(2) == 1);
    CHECK(mu.conj(3) == 0);
    CHECK_THROWS(InfSignature::const_tail(Signature{2, -1}, 0));

    InfSignature nu = InfSignature::neg_inf_tail(Signature{1, -3});
    CHECK(nu.part1(2) == -3);
    CHECK(nu.part1(3) == LLONG_MIN);
    CHECK(nu.conj(-100) == 2);
}

TEST_CASE("Measure bookkeeping") {
    Measure<Signature> m;
    m.add(Signature{1}, make_rat(1, 2));
    m.add(Signature{0}, make_rat(1, 3));
    m.add(Signature{1}, make_rat(1, 2));
    m.add(Signature{2}, Rat(0));
    m.canonicalize();
    CHECK(m.atoms.size() == 2);
    CHECK(m.mass() == make_rat(4, 3));
    REQUIRE(m.find(Signature{1}) != nullptr);
    CHECK(*m.find(Signature{1}) == 1);
    CHECK(m.find(Signature{5}) == nullptr);
}
