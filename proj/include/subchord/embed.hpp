#pragma once

// Spherical realizability and explicit embeddings of Gauss words.
//
// The 4-valent graph of a word with n double points has the crossings as
// vertices and the 2n curve arcs as edges (arc g runs from letter position
// g to position g+1, cyclically). A rotation system picks, per crossing,
// one of the two transversal interleavings of its four incident edge-ends;
// face tracing then reads the genus off Euler's formula. Genus 0 means
// exactly n+2 faces.

#include <cstdint>
#include <utility>
#include <vector>

#include "subchord/error.hpp"
#include "subchord/word.hpp"

namespace subchord {

inline constexpr int kDefaultEmbedBound = 16;

struct SphericalEmbedding {
    GaussWord word;
    std::vector<uint8_t> vertex_config; // one bit per crossing label 1..n
    int orientation = +1;               // global sphere orientation flag
};

// Closed face walks; degree = number of edge-sides on the walk.
struct FaceSet {
    // Each face is a cyclic dart sequence; dart id = 2*arc + dir
    // (dir 0 traverses arc with the curve, 1 against it).
    std::vector<std::vector<int>> faces;

    int count() const noexcept { return static_cast<int>(faces.size()); }
    int degree(int f) const { return static_cast<int>(faces[f].size()); }
    std::vector<int> degrees() const {
        std::vector<int> d;
        d.reserve(faces.size());
        for (const auto& f : faces) d.push_back(static_cast<int>(f.size()));
        return d;
    }
};

struct SignAssignment {
    int basepoint = 0;       // traversal starts at this letter position
    std::vector<int> sign;   // per crossing label, index 0 unused; values ±1
};

namespace detail {

inline int dart_arc(int d) { return d >> 1; }
inline int dart_dir(int d) { return d & 1; }
inline int dart_rev(int d) { return d ^ 1; }

// Per-dart successor along face boundaries for one vertex configuration.
// At each crossing the four outgoing darts sit in a cyclic order; the two
// configurations are the two ways the second passage can interleave the
// first. The successor of an incoming dart is the rotation-predecessor of
// its reversal.
inline std::vector<int> face_next_table(const GaussWord& w, uint32_t config) {
    const int len = w.size();
    std::vector<int> first(w.n() + 1, -1), second(w.n() + 1, -1);
    for (int i = 0; i < len; ++i) {
        int c = w.letters()[i];
        (first[c] < 0 ? first[c] : second[c]) = i;
    }
    auto fwd = [](int arc) { return 2 * arc; };
    auto bwd = [](int arc) { return 2 * arc + 1; };

    std::vector<int> next(2 * len, -1);
    std::vector<int> rot(4);
    for (int c = 1; c <= w.n(); ++c) {
        const int p = first[c], q = second[c];
        const int pm = (p + len - 1) % len, qm = (q + len - 1) % len;
        if ((config >> (c - 1)) & 1u) {
            rot = {bwd(pm), fwd(q), fwd(p), bwd(qm)};
        } else {
            rot = {bwd(pm), bwd(qm), fwd(p), fwd(q)};
        }
        for (int i = 0; i < 4; ++i) {
            // rot[i] outgoing; the dart entering along rev(rot[i]) continues
            // on the face whose next boundary dart is rot[(i+3)%4].
            next[dart_rev(rot[i])] = rot[(i + 3) % 4];
        }
    }
    return next;
}

inline int face_count(const GaussWord& w, uint32_t config) {
    if (w.n() == 0) return 2;
    auto next = face_next_table(w, config);
    std::vector<char> seen(next.size(), 0);
    int count = 0;
    for (size_t d = 0; d < next.size(); ++d) {
        if (seen[d]) continue;
        ++count;
        int cur = static_cast<int>(d);
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = next[cur];
        }
    }
    return count;
}

} // namespace detail

// All genus-0 rotation systems of a word, in increasing configuration
// order. Empty when the word is not realizable.
inline std::vector<SphericalEmbedding> spherical_embeddings(const GaussWord& w,
                                                            int bound = kDefaultEmbedBound) {
    if (w.n() > bound)
        throw Error(Errc::bound_exceeded,
                    "n=" + std::to_string(w.n()) + " exceeds embedding bound " +
                        std::to_string(bound));
    std::vector<SphericalEmbedding> out;
    if (w.n() == 0) {
        out.push_back({w, {}, +1});
        return out;
    }
    for (uint32_t config = 0; config < (uint32_t(1) << w.n()); ++config) {
        if (detail::face_count(w, config) != w.n() + 2) continue;
        std::vector<uint8_t> bits(w.n());
        for (int c = 0; c < w.n(); ++c) bits[c] = (config >> c) & 1u;
        out.push_back({w, std::move(bits), +1});
    }
    return out;
}

// The even-degree interlacement condition is necessary (smoothing a double
// point splits the curve into two components meeting evenly), so it prunes
// before the 2^n search.
inline bool is_realizable(const GaussWord& w, int bound = kDefaultEmbedBound) {
    if (w.n() > bound)
        throw Error(Errc::bound_exceeded,
                    "n=" + std::to_string(w.n()) + " exceeds embedding bound " +
                        std::to_string(bound));
    if (w.n() == 0) return true;
    auto g = interlacement(w);
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) % 2 != 0) return false;
    for (uint32_t config = 0; config < (uint32_t(1) << w.n()); ++config)
        if (detail::face_count(w, config) == w.n() + 2) return true;
    return false;
}

inline uint32_t config_mask(const SphericalEmbedding& e) {
    uint32_t m = 0;
    for (size_t i = 0; i < e.vertex_config.size(); ++i)
        if (e.vertex_config[i]) m |= uint32_t(1) << i;
    return m;
}

inline FaceSet faces(const SphericalEmbedding& e) {
    FaceSet fs;
    if (e.word.n() == 0) {
        // The closed curve bounds two disks; its single edge contributes one
        // side to each face walk.
        fs.faces = {{0}, {1}};
        return fs;
    }
    auto next = detail::face_next_table(e.word, config_mask(e));
    std::vector<char> seen(next.size(), 0);
    for (size_t d = 0; d < next.size(); ++d) {
        if (seen[d]) continue;
        std::vector<int> walk;
        int cur = static_cast<int>(d);
        while (!seen[cur]) {
            seen[cur] = 1;
            walk.push_back(cur);
            cur = next[cur];
        }
        fs.faces.push_back(std::move(walk));
    }
    return fs;
}

// First-passage signs from a basepoint: traversing from the basepoint, a
// crossing gets -1 when the ordered frame (first passage, second passage)
// agrees with the sphere orientation, +1 otherwise. Flipping the global
// orientation negates every sign.
inline SignAssignment crossing_signs(const SphericalEmbedding& e, int basepoint) {
    const GaussWord& w = e.word;
    SignAssignment sa;
    sa.basepoint = w.n() == 0 ? 0 : w.mod(basepoint);
    sa.sign.assign(w.n() + 1, 0);
    for (int c = 1; c <= w.n(); ++c) {
        auto [p, q] = w.occurrences(c);
        int rp = w.mod(p - sa.basepoint);
        int rq = w.mod(q - sa.basepoint);
        bool word_order = rp < rq; // first word occurrence is also read first
        int s = (e.vertex_config[c - 1] == 0) ? -1 : +1;
        if (!word_order) s = -s;
        sa.sign[c] = s * e.orientation;
    }
    return sa;
}

} // namespace subchord
