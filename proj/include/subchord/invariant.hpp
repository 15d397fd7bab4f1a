#pragma once

// Integer invariants of knot projections: lambda, the H and X-tilde
// indicators, modular cross counts, and the averaged invariant
// a(P) = -(J+ + 2St)/2 computed from a based signed chord diagram.

#include <cstdint>
#include <string>
#include <vector>

#include "subchord/embed.hpp"
#include "subchord/error.hpp"
#include "subchord/pattern.hpp"
#include "subchord/word.hpp"

namespace subchord {

struct InvariantReport {
    long long lambda = 0;
    int h_ind = 0;      // 0 iff h-count is 0
    int x_ind = 0;      // 0 iff cross-count is 0
    int cross_mod2 = 0;
    int cross_mod3 = 0;
    long long averaged = 0;
};

// (3h - 3tr + cross)/4. Divisibility by 4 is a theorem for realizable
// words, so a remainder is reported as an internal-consistency failure
// rather than truncated away.
inline long long lambda_from_counts(const PatternCounts& pc) {
    long long num = 3 * pc.h - 3 * pc.triple + pc.cross;
    if (num % 4 != 0)
        throw Error(Errc::non_integral,
                    "3h-3tr+cross = " + std::to_string(num) + " not divisible by 4");
    return num / 4;
}

inline long long lambda(const GaussWord& w, bool check_realizable = true) {
    if (check_realizable && !is_realizable(w))
        throw Error(Errc::not_realizable, "lambda requires a realizable word");
    return lambda_from_counts(count_named(w));
}

// (2, 2i+1)-torus knot projection: 1 2 .. (2i+1) 1 2 .. (2i+1).
inline GaussWord torus_word(int i) {
    std::vector<int> letters;
    letters.reserve(2 * (2 * i + 1));
    for (int rep = 0; rep < 2; ++rep)
        for (int c = 1; c <= 2 * i + 1; ++c) letters.push_back(c);
    return GaussWord(letters);
}

struct Indicators {
    int h_ind = 0;
    int x_ind = 0;
    int cross_mod2 = 0;
    int cross_mod3 = 0;
};

inline Indicators indicators(const GaussWord& w) {
    PatternCounts pc = count_named(w);
    Indicators ind;
    ind.h_ind = pc.h == 0 ? 0 : 1;
    ind.x_ind = pc.cross == 0 ? 0 : 1;
    ind.cross_mod2 = static_cast<int>(pc.cross % 2);
    ind.cross_mod3 = static_cast<int>(pc.cross % 3);
    return ind;
}

// Averaged invariant via the based cross-chord sum: signs come from the
// first-passage rule, and each chord is weighted by the parity of its
// first endpoint position as read from the basepoint. In a realizable
// word the two endpoints of a chord always have opposite position parity
// (its interlacement degree is even), so the weight is well defined, and
// moving the basepoint one step flips every weighted sign at once, which
// keeps the pair products invariant.
inline long long averaged_from(const SphericalEmbedding& e, int basepoint) {
    const GaussWord& w = e.word;
    if (w.n() == 0) return 0;
    SignAssignment sa = crossing_signs(e, basepoint);
    InterlacementGraph g = interlacement(w);
    std::vector<int> weighted(w.n() + 1, 0);
    for (int c = 1; c <= w.n(); ++c) {
        auto [p, q] = w.occurrences(c);
        int rp = w.mod(p - sa.basepoint);
        int rq = w.mod(q - sa.basepoint);
        int first = rp < rq ? rp : rq;
        weighted[c] = (first % 2 == 0) ? sa.sign[c] : -sa.sign[c];
    }
    long long total = 0;
    for (int a = 1; a <= w.n(); ++a)
        for (int b = a + 1; b <= w.n(); ++b)
            if (g.edge(a - 1, b - 1)) total += weighted[a] * weighted[b];
    return total;
}

inline long long averaged(const GaussWord& w) {
    if (w.n() == 0) return 0;
    auto embeddings = spherical_embeddings(w);
    if (embeddings.empty())
        throw Error(Errc::not_realizable, "averaged invariant requires a realizable word");
    return averaged_from(embeddings.front(), 0);
}

enum class MoveSet {
    ri_only,
    ri_weak_riii,
    ri_strong_riii,
};

inline const char* moveset_name(MoveSet s) {
    switch (s) {
    case MoveSet::ri_only: return "RI";
    case MoveSet::ri_weak_riii: return "RI+weakRIII";
    case MoveSet::ri_strong_riii: return "RI+strongRIII";
    }
    return "?";
}

// Necessary-and-sufficient trivializability conditions. The RI-only and
// RI+weakRIII conditions coincide (both reduce to having no crossing
// chord); RI+strongRIII needs h = 0 and lambda = 0.
inline bool trivializable(const GaussWord& w, MoveSet moves) {
    if (!is_realizable(w))
        throw Error(Errc::not_realizable, "trivializable requires a realizable word");
    PatternCounts pc = count_named(w);
    switch (moves) {
    case MoveSet::ri_only:
    case MoveSet::ri_weak_riii:
        return pc.cross == 0;
    case MoveSet::ri_strong_riii:
        return pc.h == 0 && lambda_from_counts(pc) == 0;
    }
    return false;
}

// Equivalent form of the RI-only condition: tr = 0 and lambda = 0.
inline bool trivializable_ri_second_form(const GaussWord& w) {
    if (!is_realizable(w))
        throw Error(Errc::not_realizable, "trivializable requires a realizable word");
    PatternCounts pc = count_named(w);
    return pc.triple == 0 && lambda_from_counts(pc) == 0;
}

// True iff every connected-sum factor is the infinity curve or has all
// chords pairwise crossing; equals (h-count == 0) by the factorization
// fact for curves without an H configuration.
inline bool st_factor_check(const GaussWord& w) {
    if (!is_realizable(w))
        throw Error(Errc::not_realizable, "st_factor_check requires a realizable word");
    for (const GaussWord& f : decompose(w)) {
        InterlacementGraph g = interlacement(f);
        if (g.edge_count() != static_cast<long long>(g.n) * (g.n - 1) / 2) return false;
    }
    return true;
}

inline InvariantReport invariant_report(const GaussWord& w) {
    if (!is_realizable(w))
        throw Error(Errc::not_realizable, "invariant report requires a realizable word");
    PatternCounts pc = count_named(w);
    Indicators ind = indicators(w);
    InvariantReport r;
    r.lambda = lambda_from_counts(pc);
    r.h_ind = ind.h_ind;
    r.x_ind = ind.x_ind;
    r.cross_mod2 = ind.cross_mod2;
    r.cross_mod3 = ind.cross_mod3;
    r.averaged = averaged(w);
    return r;
}

} // namespace subchord
