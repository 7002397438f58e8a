#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "symsector/errors.hpp"

namespace symsector {

// Default size caps. d^n and n! stay at desk scale below these; both are
// overridable at the call sites that enumerate.
inline constexpr int kDefaultMaxParticles = 8;
inline constexpr int kDefaultMaxLocalDim = 6;

// A d-tuple [k_0,...,k_{d-1}] of non-negative integers summing to n: the
// label of a Dicke state / multiset orbit.
struct Composition {
    std::vector<int> counts;

    int d() const { return static_cast<int>(counts.size()); }
    int n() const { return std::accumulate(counts.begin(), counts.end(), 0); }

    bool operator==(const Composition& other) const = default;
};

inline void validate_composition(const Composition& k) {
    if (k.counts.empty())
        throw InputError("composition: empty counts");
    for (int c : k.counts)
        if (c < 0)
            throw InputError("composition: negative count");
}

inline std::string to_string(const Composition& k) {
    std::string s = "[";
    for (std::size_t i = 0; i < k.counts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k.counts[i]);
    }
    return s + "]";
}

// n! / product(k_j!) with overflow detection.
inline unsigned long long multinomial(const Composition& k) {
    validate_composition(k);
    // Product of binomials over prefix sums, C(s_1,k_1) C(s_2,k_2) ... with
    // s_j = k_0+...+k_j; every intermediate value is itself such a product,
    // so the divisions are exact.
    unsigned long long result = 1;
    long long prefix = 0;
    for (int c : k.counts) {
        for (int i = 1; i <= c; ++i) {
            ++prefix;
            unsigned long long tmp;
            if (__builtin_mul_overflow(result, static_cast<unsigned long long>(prefix), &tmp))
                throw SizeError("multinomial: overflow for " + to_string(k));
            result = tmp / static_cast<unsigned long long>(i);
        }
    }
    return result;
}

inline unsigned long long binomial_checked(int n, int r) {
    if (r < 0 || r > n) return 0;
    Composition k{{r, n - r}};
    return multinomial(k);
}

// All compositions of n into d parts, ordered with the leading count
// decreasing: [n,0,...], ..., [0,...,n]. Count is C(n+d-1, d-1).
inline std::vector<Composition> enumerate_compositions(int d, int n) {
    if (d < 1 || n < 1)
        throw InputError("enumerate_compositions: require d >= 1, n >= 1");
    const unsigned long long count = binomial_checked(n + d - 1, d - 1);
    if (count > (1ULL << 32))
        throw SizeError("enumerate_compositions: too many compositions");
    std::vector<Composition> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> cur(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(Composition{cur});
            return;
        }
        for (int c = remaining; c >= 0; --c) {
            cur[static_cast<std::size_t>(pos)] = c;
            self(self, pos + 1, remaining - c);
        }
    };
    rec(rec, 0, n);
    return out;
}

// All distinct n-tuples over {0,...,d-1} with symbol j appearing exactly
// k_j times, in increasing lexicographic order.
inline std::vector<std::vector<int>> multiset_orbit(const Composition& k) {
    validate_composition(k);
    const unsigned long long size = multinomial(k);
    if (size > (1ULL << 32))
        throw SizeError("multiset_orbit: orbit too large for " + to_string(k));
    std::vector<int> tuple;
    tuple.reserve(static_cast<std::size_t>(k.n()));
    for (int j = 0; j < k.d(); ++j)
        tuple.insert(tuple.end(), static_cast<std::size_t>(k.counts[static_cast<std::size_t>(j)]), j);
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(size));
    do {
        out.push_back(tuple);
    } while (std::next_permutation(tuple.begin(), tuple.end()));
    return out;
}

// A permutation of {0,...,n-1} stored as its image list: i -> image[i].
struct Permutation {
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }

    static Permutation identity(int n) {
        Permutation p;
        p.image.resize(static_cast<std::size_t>(n));
        std::iota(p.image.begin(), p.image.end(), 0);
        return p;
    }

    // (s * t)(i) = s(t(i)): t applied first.
    friend Permutation operator*(const Permutation& s, const Permutation& t) {
        Permutation r;
        r.image.resize(t.image.size());
        for (std::size_t i = 0; i < t.image.size(); ++i)
            r.image[i] = s.image[static_cast<std::size_t>(t.image[i])];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.image.resize(image.size());
        for (std::size_t i = 0; i < image.size(); ++i)
            r.image[static_cast<std::size_t>(image[i])] = static_cast<int>(i);
        return r;
    }

    bool operator==(const Permutation& other) const = default;
};

inline void validate_permutation(const Permutation& p) {
    std::vector<bool> seen(p.image.size(), false);
    for (int v : p.image) {
        if (v < 0 || v >= p.size() || seen[static_cast<std::size_t>(v)])
            throw InputError("permutation: image is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

// All n! permutations in lexicographic order of the image list.
inline std::vector<Permutation> enumerate_permutations(int n, int cap = kDefaultMaxParticles) {
    if (n < 1)
        throw InputError("enumerate_permutations: require n >= 1");
    if (n > cap)
        throw SizeError("enumerate_permutations: n = " + std::to_string(n) +
                        " above cap " + std::to_string(cap));
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{image});
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

// Ordered list of distinct indices (i_1 i_2 ... i_k) mapping each element to
// its successor, the last back to the first.
struct Cycle {
    std::vector<int> elements;

    int length() const { return static_cast<int>(elements.size()); }
    bool operator==(const Cycle& other) const = default;
};

// Disjoint cycles covering all points; fixed points appear as 1-cycles.
// Each cycle starts at its smallest element; cycles sorted by that element.
inline std::vector<Cycle> cycle_decomposition(const Permutation& p) {
    validate_permutation(p);
    const int n = p.size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Cycle> cycles;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        Cycle c;
        int i = start;
        while (!seen[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = true;
            c.elements.push_back(i);
            i = p(i);
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

inline Permutation permutation_from_cycles(const std::vector<Cycle>& cycles, int n) {
    Permutation p = Permutation::identity(n);
    for (const Cycle& c : cycles)
        for (std::size_t i = 0; i < c.elements.size(); ++i)
            p.image[static_cast<std::size_t>(c.elements[i])] =
                c.elements[(i + 1) % c.elements.size()];
    validate_permutation(p);
    return p;
}

} // namespace symsector
