#pragma once

// Embedded sub-chord diagram counting. A sub-chord diagram is a subset of
// chords whose induced circular endpoint configuration matches a fixed
// small diagram up to rotation, reflection and relabeling. Two independent
// counting paths are kept: the configuration matcher (count_pattern /
// count_named) and closed forms on the interlacement graph (graph_counts);
// tests cross-validate them.

#include <array>
#include <cstdint>
#include <vector>

#include "subchord/word.hpp"

namespace subchord {

// A small diagram interpreted up to the full dihedral symmetry plus
// relabeling; canonicalized at construction.
struct Pattern {
    GaussWord canonical;

    explicit Pattern(const GaussWord& w) : canonical(canonical_form(w)) {}
    explicit Pattern(const std::vector<int>& letters) : Pattern(GaussWord(letters)) {}

    int chords() const noexcept { return canonical.n(); }
};

// The five named patterns of the census tables.
inline const Pattern& pattern_cross() {
    static const Pattern p(std::vector<int>{1, 2, 1, 2});
    return p;
}
inline const Pattern& pattern_triple() {
    static const Pattern p(std::vector<int>{1, 2, 3, 1, 2, 3});
    return p;
}
// Two parallel chords plus the sticking chord crossing both.
inline const Pattern& pattern_h() {
    static const Pattern p(std::vector<int>{1, 2, 3, 1, 3, 2});
    return p;
}
// Three pairwise parallel chords all crossed by one chord.
inline const Pattern& pattern_iii() {
    static const Pattern p(std::vector<int>{1, 2, 3, 4, 1, 4, 3, 2});
    return p;
}
// Two parallel chords each crossed by two parallel chords.
inline const Pattern& pattern_hh() {
    static const Pattern p(std::vector<int>{1, 2, 3, 4, 2, 1, 4, 3});
    return p;
}

struct PatternCounts {
    long long cross = 0;
    long long triple = 0;
    long long h = 0;
    long long iii = 0;
    long long hh = 0;

    bool operator==(const PatternCounts&) const = default;

    PatternCounts operator+(const PatternCounts& o) const {
        return {cross + o.cross, triple + o.triple, h + o.h, iii + o.iii, hh + o.hh};
    }
    PatternCounts operator-(const PatternCounts& o) const {
        return {cross - o.cross, triple - o.triple, h - o.h, iii - o.iii, hh - o.hh};
    }
};

namespace detail {

// Circular configuration induced by a chord subset, as a word over the
// selected labels in circle order.
inline GaussWord induced_subword(const GaussWord& w, const std::vector<int>& labels) {
    std::vector<char> take(w.n() + 1, 0);
    for (int c : labels) take[c] = 1;
    std::vector<int> sub;
    sub.reserve(2 * labels.size());
    for (int x : w.letters())
        if (take[x]) sub.push_back(x);
    return GaussWord(sub);
}

template <typename Fn>
inline void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> pick(k);
    // chord labels are 1-based
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        for (int i = 0; i < k; ++i) pick[i] = idx[i] + 1;
        fn(pick);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

inline long long count_pattern(const GaussWord& w, const Pattern& p) {
    const int k = p.chords();
    if (k == 0) return w.n() == 0 ? 1 : 0;
    if (k > w.n()) return 0;
    long long count = 0;
    detail::for_each_subset(w.n(), k, [&](const std::vector<int>& labels) {
        if (canonical_form(detail::induced_subword(w, labels)) == p.canonical) ++count;
    });
    return count;
}

inline PatternCounts count_named(const GaussWord& w) {
    PatternCounts pc;
    pc.cross = count_pattern(w, pattern_cross());
    pc.triple = count_pattern(w, pattern_triple());
    pc.h = count_pattern(w, pattern_h());
    pc.iii = count_pattern(w, pattern_iii());
    pc.hh = count_pattern(w, pattern_hh());
    return pc;
}

// Counts from the interlacement graph alone: cross = edges, triple =
// triangles, h = 3-subsets inducing exactly two edges, iii = induced
// K_{1,3}, hh = induced 4-cycles. Equivalence with count_named is a
// verified fact, not an assumption (see the oracle suite).
inline PatternCounts graph_counts(const GaussWord& w) {
    const InterlacementGraph g = interlacement(w);
    PatternCounts pc;
    pc.cross = g.edge_count();
    const int n = g.n;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                int edges = g.edge(a, b) + g.edge(a, c) + g.edge(b, c);
                if (edges == 3) ++pc.triple;
                if (edges == 2) ++pc.h;
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    const std::array<int, 4> v{a, b, c, d};
                    int edges = 0, deg_mask = 0;
                    std::array<int, 4> deg{};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.edge(v[i], v[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    for (int i = 0; i < 4; ++i) deg_mask |= 1 << deg[i];
                    if (edges == 3 && deg_mask == ((1 << 3) | (1 << 1)))
                        ++pc.iii; // one center of degree 3, three leaves
                    if (edges == 4 && deg_mask == (1 << 2))
                        ++pc.hh; // all degrees 2 with 4 edges: a 4-cycle
                }
            }
        }
    }
    return pc;
}

} // namespace subchord
