#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlpadic/rational.hpp"

namespace hlpadic {

// Weakly decreasing tuple of integers; negative parts allowed, length may be 0.
class Signature {
public:
    Signature() = default;
    Signature(std::initializer_list<long long> parts) : parts_(parts) { validate(); }
    explicit Signature(std::vector<long long> parts) : parts_(std::move(parts)) { validate(); }

    size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long operator[](size_t i) const { return parts_[i]; } // 0-indexed
    // 1-indexed access with +inf above and -inf below, the convention used by
    // interlacing bounds
    long long at1(long long i) const {
        if (i < 1) return LLONG_MAX;
        if (i > static_cast<long long>(parts_.size())) return LLONG_MIN;
        return parts_[static_cast<size_t>(i - 1)];
    }
    const std::vector<long long>& parts() const { return parts_; }

    long long sum() const {
        long long s = 0;
        for (long long p : parts_) s += p;
        return s;
    }
    // number of parts >= x
    long long conj(long long x) const {
        auto it = std::lower_bound(parts_.begin(), parts_.end(), x,
                                   [](long long part, long long v) { return part >= v; });
        return static_cast<long long>(it - parts_.begin());
    }
    // multiplicity of x as a part
    long long mult(long long x) const { return conj(x) - conj(x + 1); }
    long long max_part(long long if_empty) const { return parts_.empty() ? if_empty : parts_.front(); }
    long long min_part(long long if_empty) const { return parts_.empty() ? if_empty : parts_.back(); }
    bool all_nonneg() const { return parts_.empty() || parts_.back() >= 0; }

    Signature translated(long long d) const {
        std::vector<long long> q(parts_);
        for (auto& v : q) v += d;
        return Signature(std::move(q));
    }
    // x -> -x reversed, i.e. the signature usually written -lambda
    Signature negated() const {
        std::vector<long long> q(parts_.rbegin(), parts_.rend());
        for (auto& v : q) v = -v;
        return Signature(std::move(q));
    }
    // drop trailing zeros (partition normal form)
    Signature trimmed() const {
        std::vector<long long> q(parts_);
        while (!q.empty() && q.back() == 0) q.pop_back();
        return Signature(std::move(q));
    }
    Signature padded(size_t n, long long fill = 0) const {
        if (n < parts_.size()) throw std::domain_error("Signature::padded: shorter than current");
        if (!parts_.empty() && n > parts_.size() && parts_.back() < fill)
            throw std::domain_error("Signature::padded: fill breaks monotonicity");
        std::vector<long long> q(parts_);
        q.resize(n, fill);
        return Signature(std::move(q));
    }
    // distinct part values, decreasing
    std::vector<long long> support() const {
        std::vector<long long> s;
        for (long long p : parts_)
            if (s.empty() || s.back() != p) s.push_back(p);
        return s;
    }

    auto operator<=>(const Signature&) const = default;
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<long long> parts_;
    void validate() const {
        for (size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i])
                throw std::invalid_argument("Signature: parts must be weakly decreasing");
    }
};

inline long long n_stat(const Signature& lam) {
    long long s = 0;
    for (size_t i = 0; i < lam.length(); ++i) s += static_cast<long long>(i) * lam[i];
    return s;
}

inline long long binom2(long long m) { return m <= 1 ? 0 : m * (m - 1) / 2; }

// sum_{1<=i<j<=n} max(nu_j - lam_i, 0) for equal-length signatures
long long n_skew(const Signature& nu, const Signature& lam);

// mu in Sig_{n+1} interlaces lam in Sig_n from above: mu_i >= lam_i >= mu_{i+1}
bool interlace_up(const Signature& lam, const Signature& mu);
// nu in Sig_n dominates lam in Sig_n with nu_i >= lam_i and lam_i >= nu_{i+1}
bool interlace_horiz(const Signature& lam, const Signature& nu);
// columnwise containment for equal-length signatures: nu_i >= lam_i for all i
bool contains_parts(const Signature& nu, const Signature& lam);

// Signature with a fixed number of trailing -inf parts (exact zero rows or
// columns of a matrix, or singular numbers beyond working precision).
struct ExtendedSignature {
    Signature finite;
    long long neg_inf = 0;

    ExtendedSignature() = default;
    ExtendedSignature(Signature f, long long ninf) : finite(std::move(f)), neg_inf(ninf) {
        if (ninf < 0) throw std::invalid_argument("ExtendedSignature: negative -inf count");
    }
    long long length() const { return static_cast<long long>(finite.length()) + neg_inf; }
    auto operator<=>(const ExtendedSignature&) const = default;
    std::string str() const {
        std::string s = finite.str();
        if (neg_inf > 0) s += "+" + std::to_string(neg_inf) + "*(-inf)";
        return s;
    }
};

// Infinite signature: finite prefix followed by either a constant tail
// (value D repeated) or a -inf tail.
struct InfSignature {
    Signature prefix;
    bool tail_neg_inf = false;
    long long tail_const = 0; // D, meaningful when !tail_neg_inf

    InfSignature() = default;
    static InfSignature const_tail(Signature prefix, long long D) {
        InfSignature s;
        if (!prefix.empty() && prefix.min_part(D) < D)
            throw std::invalid_argument("InfSignature: prefix part below constant tail");
        std::vector<long long> q(prefix.parts());
        while (!q.empty() && q.back() == D) q.pop_back();
        s.prefix = Signature(std::move(q));
        s.tail_neg_inf = false;
        s.tail_const = D;
        return s;
    }
    static InfSignature neg_inf_tail(Signature prefix) {
        InfSignature s;
        s.prefix = std::move(prefix);
        s.tail_neg_inf = true;
        return s;
    }
    // i-th part, 1-indexed
    long long part1(long long i, long long neg_inf_value = LLONG_MIN) const {
        if (i <= static_cast<long long>(prefix.length())) return prefix[static_cast<size_t>(i - 1)];
        return tail_neg_inf ? neg_inf_value : tail_const;
    }
    static constexpr long long CONJ_INF = LLONG_MAX;
    // number of parts >= x; CONJ_INF when infinite
    long long conj(long long x) const {
        if (!tail_neg_inf && x <= tail_const) return CONJ_INF;
        return prefix.conj(x);
    }
    long long mult(long long x) const {
        long long hi = conj(x), lo = conj(x + 1);
        if (hi == CONJ_INF) return lo == CONJ_INF ? 0 : CONJ_INF; // never used in finite formulas
        return hi - lo;
    }
    auto operator<=>(const InfSignature&) const = default;
};

// Exact measure with rational weights on keys of type K.  `complete` records
// whether the atoms account for the full mass; when they do not,
// `deficit_bound` is a certified upper bound on the missing mass.
template <class K>
struct Measure {
    std::vector<std::pair<K, Rat>> atoms;
    bool complete = true;
    double deficit_bound = 0.0;

    void add(const K& k, const Rat& w) {
        if (w != 0) atoms.emplace_back(k, w);
    }
    void canonicalize() {
        std::sort(atoms.begin(), atoms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<K, Rat>> merged;
        for (auto& kv : atoms) {
            if (!merged.empty() && merged.back().first == kv.first)
                merged.back().second += kv.second;
            else
                merged.push_back(std::move(kv));
        }
        std::erase_if(merged, [](const auto& kv) { return kv.second == 0; });
        atoms = std::move(merged);
    }
    Rat mass() const {
        Rat s(0);
        for (const auto& kv : atoms) s += kv.second;
        return s;
    }
    const Rat* find(const K& k) const {
        auto it = std::lower_bound(atoms.begin(), atoms.end(), k,
                                   [](const auto& kv, const K& key) { return kv.first < key; });
        if (it != atoms.end() && it->first == k) return &it->second;
        return nullptr;
    }
};

// All signatures of length n with lo_i <= s_i <= hi_i (1-indexed bounds),
// visited in lexicographic order.  Bounds vectors must have length n.
void for_each_signature_in_box(const std::vector<long long>& lo,
                               const std::vector<long long>& hi,
                               const std::function<void(const Signature&)>& f);

// All partitions of size <= max_size with parts <= max_part.
void for_each_partition(long long max_size, long long max_part,
                        const std::function<void(const Signature&)>& f);

} // namespace hlpadic
