#include "hlpadic/signatures.hpp"

namespace hlpadic {

long long n_skew(const Signature& nu, const Signature& lam) {
    if (nu.length() != lam.length())
        throw std::domain_error("n_skew: length mismatch");
    long long n = static_cast<long long>(nu.length());
    long long s = 0;
    for (long long i = 0; i < n; ++i)
        for (long long j = i + 1; j < n; ++j)
            s += std::max<long long>(nu[j] - lam[i], 0);
    return s;
}

bool interlace_up(const Signature& lam, const Signature& mu) {
    if (mu.length() != lam.length() + 1) return false;
    for (size_t i = 0; i < lam.length(); ++i)
        if (!(mu[i] >= lam[i] && lam[i] >= mu[i + 1])) return false;
    return true;
}

bool interlace_horiz(const Signature& lam, const Signature& nu) {
    if (nu.length() != lam.length()) return false;
    size_t n = nu.length();
    for (size_t i = 0; i < n; ++i) {
        if (nu[i] < lam[i]) return false;
        if (i + 1 < n && lam[i] < nu[i + 1]) return false;
    }
    return true;
}

bool contains_parts(const Signature& nu, const Signature& lam) {
    if (nu.length() != lam.length()) return false;
    for (size_t i = 0; i < nu.length(); ++i)
        if (nu[i] < lam[i]) return false;
    return true;
}

namespace {

void box_rec(const std::vector<long long>& lo, const std::vector<long long>& hi,
             std::vector<long long>& cur, size_t i,
             const std::function<void(const Signature&)>& f) {
    if (i == lo.size()) {
        f(Signature(cur));
        return;
    }
    long long top = i == 0 ? hi[0] : std::min(hi[i], cur[i - 1]);
    for (long long v = top; v >= lo[i]; --v) {
        cur.push_back(v);
        box_rec(lo, hi, cur, i + 1, f);
        cur.pop_back();
    }
}

void partition_rec(long long budget, long long max_part, std::vector<long long>& cur,
                   const std::function<void(const Signature&)>& f) {
    f(Signature(cur));
    long long top = cur.empty() ? max_part : std::min(max_part, cur.back());
    for (long long v = std::min(top, budget); v >= 1; --v) {
        cur.push_back(v);
        partition_rec(budget - v, max_part, cur, f);
        cur.pop_back();
    }
}

} // namespace

void for_each_signature_in_box(const std::vector<long long>& lo,
                               const std::vector<long long>& hi,
                               const std::function<void(const Signature&)>& f) {
    if (lo.size() != hi.size())
        throw std::domain_error("for_each_signature_in_box: bound length mismatch");
    std::vector<long long> cur;
    cur.reserve(lo.size());
    box_rec(lo, hi, cur, 0, f);
}

void for_each_partition(long long max_size, long long max_part,
                        const std::function<void(const Signature&)>& f) {
    std::vector<long long> cur;
    partition_rec(max_size, max_part, cur, f);
}

} // namespace hlpadic
