#pragma once

// Detection, classification and application of Reidemeister moves and
// flypes on Gauss words.
//
// Deletion sites and the strong/weak split are decidable from the word
// alone: monogons are cyclically adjacent occurrences, bigons are label
// pairs adjacent at both meetings (the two passage-free arcs bound a
// bigon face in every spherical embedding), and RII strength is the
// interlacement of the pair. Triangles come from the embedding's faces.
// Insertions are enumerated at word level and kept when the result is
// realizable, which is exactly when the corresponding geometric move
// exists (the inserted bigon or kink can always be deleted back).

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "subchord/embed.hpp"
#include "subchord/error.hpp"
#include "subchord/invariant.hpp"
#include "subchord/pattern.hpp"
#include "subchord/word.hpp"

namespace subchord {

enum class MoveKind {
    ri_add,
    ri_del,
    rii_strong_add,
    rii_strong_del,
    rii_weak_add,
    rii_weak_del,
    riii_strong,
    riii_weak,
};

inline const char* move_kind_name(MoveKind k) {
    switch (k) {
    case MoveKind::ri_add: return "RI_add";
    case MoveKind::ri_del: return "RI_del";
    case MoveKind::rii_strong_add: return "RII_strong_add";
    case MoveKind::rii_strong_del: return "RII_strong_del";
    case MoveKind::rii_weak_add: return "RII_weak_add";
    case MoveKind::rii_weak_del: return "RII_weak_del";
    case MoveKind::riii_strong: return "RIII_strong";
    case MoveKind::riii_weak: return "RIII_weak";
    }
    return "?";
}

inline bool is_insertion(MoveKind k) {
    return k == MoveKind::ri_add || k == MoveKind::rii_strong_add || k == MoveKind::rii_weak_add;
}

// Location payload by kind:
//   ri_add           gaps = {g}           insert a kink after position g
//   ri_del           labels = {c}
//   rii_*_add        gaps = {g1, g2}      g1 <= g2; g1 == g2 folds one arc
//   rii_*_del        labels = {a, b}
//   riii_*           gaps = {g1, g2, g3}  word-edges of the triangular face
//                    labels = {a, b, c}   its three crossings
struct MoveSite {
    MoveKind kind;
    std::vector<int> labels;
    std::vector<int> gaps;

    bool operator<(const MoveSite& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (gaps != o.gaps) return gaps < o.gaps;
        return labels < o.labels;
    }
    bool operator==(const MoveSite& o) const = default;

    std::string str() const {
        std::string s = move_kind_name(kind);
        if (!gaps.empty()) {
            s += " gaps";
            for (int g : gaps) s += ' ' + std::to_string(g);
        }
        if (!labels.empty()) {
            s += " labels";
            for (int c : labels) s += ' ' + std::to_string(c);
        }
        return s;
    }
};

namespace detail {

inline std::vector<int> insert_at_gaps(const std::vector<int>& letters,
                                       std::vector<std::pair<int, std::vector<int>>> insertions) {
    std::sort(insertions.begin(), insertions.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> out;
    out.reserve(letters.size() + 4);
    if (letters.empty()) {
        for (auto& [g, items] : insertions)
            for (int x : items) out.push_back(x);
        return out;
    }
    for (int pos = 0; pos < static_cast<int>(letters.size()); ++pos) {
        out.push_back(letters[pos]);
        for (auto& [g, items] : insertions)
            if (g == pos)
                for (int x : items) out.push_back(x);
    }
    return out;
}

inline std::vector<int> erase_labels(const std::vector<int>& letters, int a, int b = 0) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int x : letters)
        if (x != a && x != b) out.push_back(x);
    return out;
}

inline std::vector<int> rii_insertion(const GaussWord& w, int g1, int g2, bool interlaced) {
    const int a = w.n() + 1, b = w.n() + 2;
    if (g1 == g2)
        return insert_at_gaps(w.letters(), {{g1, {a, b, b, a}}});
    if (interlaced)
        return insert_at_gaps(w.letters(), {{g1, {a, b}}, {g2, {a, b}}});
    return insert_at_gaps(w.letters(), {{g1, {a, b}}, {g2, {b, a}}});
}

// Gaps whose two endpoints carry exactly the labels {a, b}.
inline std::vector<int> adjacency_gaps(const GaussWord& w, int a, int b) {
    std::vector<int> gaps;
    for (int g = 0; g < w.size(); ++g) {
        int x = w.at(g), y = w.at(g + 1);
        if ((x == a && y == b) || (x == b && y == a)) gaps.push_back(g);
    }
    return gaps;
}

inline bool has_disjoint_gap_pair(const GaussWord& w, const std::vector<int>& gaps) {
    for (size_t i = 0; i < gaps.size(); ++i)
        for (size_t j = i + 1; j < gaps.size(); ++j) {
            int g = gaps[i], h = gaps[j];
            if (w.mod(h - g) != 1 && w.mod(g - h) != 1) return true;
        }
    return false;
}

} // namespace detail

// Move sites decidable from the word alone (everything except triangles).
inline std::vector<MoveSite> word_level_sites(const GaussWord& w) {
    std::vector<MoveSite> sites;
    const int len = w.size();

    // RI deletions: cyclically adjacent occurrences.
    for (int c = 1; c <= w.n(); ++c) {
        auto [p, q] = w.occurrences(c);
        if (q == p + 1 || (p == 0 && q == len - 1))
            sites.push_back({MoveKind::ri_del, {c}, {}});
    }

    // RII deletions: pairs adjacent at both meetings.
    InterlacementGraph g = interlacement(w);
    for (int a = 1; a <= w.n(); ++a) {
        for (int b = a + 1; b <= w.n(); ++b) {
            auto gaps = detail::adjacency_gaps(w, a, b);
            if (gaps.size() < 2 || !detail::has_disjoint_gap_pair(w, gaps)) continue;
            MoveKind kind =
                g.edge(a - 1, b - 1) ? MoveKind::rii_weak_del : MoveKind::rii_strong_del;
            sites.push_back({kind, {a, b}, {}});
        }
    }

    // RI insertions: every edge.
    const int gap_count = len == 0 ? 1 : len;
    for (int gp = 0; gp < gap_count; ++gp)
        sites.push_back({MoveKind::ri_add, {}, {gp}});

    // RII insertions: a gap pair plus the interleaving of the new chords;
    // kept when the result embeds in the sphere.
    for (int g1 = 0; g1 < gap_count; ++g1) {
        for (int g2 = g1; g2 < gap_count; ++g2) {
            for (bool interlaced : {false, true}) {
                if (g1 == g2 && interlaced) continue; // two new chords of odd degree
                GaussWord cand(detail::rii_insertion(w, g1, g2, interlaced));
                if (!is_realizable(cand)) continue;
                MoveKind kind =
                    interlaced ? MoveKind::rii_weak_add : MoveKind::rii_strong_add;
                sites.push_back({kind, {}, {g1, g2}});
            }
        }
    }
    return sites;
}

// Triangular faces of one embedding, as RIII sites.
inline std::vector<MoveSite> riii_sites(const GaussWord& w, const SphericalEmbedding& e) {
    if (e.word != w)
        throw Error(Errc::embedding_mismatch, "embedding belongs to a different word");
    std::vector<MoveSite> sites;
    if (w.n() < 3) return sites;
    InterlacementGraph g = interlacement(w);
    for (const auto& walk : faces(e).faces) {
        if (walk.size() != 3) continue;
        std::vector<int> gaps;
        for (int d : walk) gaps.push_back(detail::dart_arc(d));
        std::sort(gaps.begin(), gaps.end());
        if (gaps[0] == gaps[1] || gaps[1] == gaps[2]) continue;
        std::set<int> positions;
        std::map<int, int> label_count;
        for (int gp : gaps) {
            positions.insert(gp);
            positions.insert(w.mod(gp + 1));
            ++label_count[w.at(gp)];
            ++label_count[w.at(gp + 1)];
        }
        if (positions.size() != 6 || label_count.size() != 3) continue;
        bool twice = true;
        for (auto& [c, k] : label_count)
            if (k != 2) twice = false;
        if (!twice) continue;

        std::vector<int> labels;
        for (auto& [c, k] : label_count) labels.push_back(c);
        int crossing_pairs = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g.edge(labels[i] - 1, labels[j] - 1)) ++crossing_pairs;
        MoveKind kind = (crossing_pairs == 0 || crossing_pairs == 3) ? MoveKind::riii_strong
                                                                     : MoveKind::riii_weak;
        sites.push_back({kind, labels, gaps});
    }
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    return sites;
}

inline std::vector<MoveSite> list_sites(const GaussWord& w, const SphericalEmbedding& e) {
    std::vector<MoveSite> sites = word_level_sites(w);
    auto tri = riii_sites(w, e);
    sites.insert(sites.end(), tri.begin(), tri.end());
    return sites;
}

// Word-level sites plus triangles of every spherical embedding, deduped.
inline std::vector<MoveSite> list_sites_union(const GaussWord& w,
                                              int bound = kDefaultEmbedBound) {
    std::vector<MoveSite> sites = word_level_sites(w);
    std::set<MoveSite> tris;
    for (const auto& e : spherical_embeddings(w, bound))
        for (auto& s : riii_sites(w, e)) tris.insert(s);
    sites.insert(sites.end(), tris.begin(), tris.end());
    return sites;
}

inline GaussWord apply_move(const GaussWord& w, const MoveSite& s) {
    const int len = w.size();
    const int gap_count = len == 0 ? 1 : len;
    auto need = [&](bool cond, const char* msg) {
        if (!cond) throw Error(Errc::site_invalid, msg);
    };

    switch (s.kind) {
    case MoveKind::ri_add: {
        need(s.gaps.size() == 1 && s.gaps[0] >= 0 && s.gaps[0] < gap_count, "bad RI gap");
        int fresh = w.n() + 1;
        return GaussWord(detail::insert_at_gaps(w.letters(), {{s.gaps[0], {fresh, fresh}}}));
    }
    case MoveKind::ri_del: {
        need(s.labels.size() == 1, "RI_del needs one label");
        int c = s.labels[0];
        need(c >= 1 && c <= w.n(), "label out of range");
        auto [p, q] = w.occurrences(c);
        need(q == p + 1 || (p == 0 && q == len - 1), "occurrences not adjacent");
        return GaussWord(detail::erase_labels(w.letters(), c));
    }
    case MoveKind::rii_strong_add:
    case MoveKind::rii_weak_add: {
        need(s.gaps.size() == 2, "RII_add needs two gaps");
        int g1 = s.gaps[0], g2 = s.gaps[1];
        need(g1 >= 0 && g2 >= g1 && g2 < gap_count, "bad RII gaps");
        bool interlaced = s.kind == MoveKind::rii_weak_add;
        need(!(interlaced && g1 == g2), "same-gap insertion is never weak");
        return GaussWord(detail::rii_insertion(w, g1, g2, interlaced));
    }
    case MoveKind::rii_strong_del:
    case MoveKind::rii_weak_del: {
        need(s.labels.size() == 2, "RII_del needs two labels");
        int a = s.labels[0], b = s.labels[1];
        need(a >= 1 && b >= 1 && a <= w.n() && b <= w.n() && a != b, "bad RII labels");
        auto gaps = detail::adjacency_gaps(w, a, b);
        need(gaps.size() >= 2 && detail::has_disjoint_gap_pair(w, gaps),
             "pair not adjacent at both meetings");
        bool interlaced = interlacement(w).edge(a - 1, b - 1);
        need(interlaced == (s.kind == MoveKind::rii_weak_del), "strength mismatch");
        return GaussWord(detail::erase_labels(w.letters(), a, b));
    }
    case MoveKind::riii_strong:
    case MoveKind::riii_weak: {
        need(s.gaps.size() == 3, "RIII needs three gaps");
        std::set<int> positions;
        std::map<int, int> label_count;
        for (int gp : s.gaps) {
            need(gp >= 0 && gp < len, "gap out of range");
            positions.insert(gp);
            positions.insert(w.mod(gp + 1));
            ++label_count[w.at(gp)];
            ++label_count[w.at(gp + 1)];
        }
        need(positions.size() == 6 && label_count.size() == 3, "not a triangle");
        InterlacementGraph g = interlacement(w);
        std::vector<int> labels;
        for (auto& [c, k] : label_count) {
            need(k == 2, "not a triangle");
            labels.push_back(c);
        }
        int crossing_pairs = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g.edge(labels[i] - 1, labels[j] - 1)) ++crossing_pairs;
        bool strong = crossing_pairs == 0 || crossing_pairs == 3;
        need(strong == (s.kind == MoveKind::riii_strong), "strength mismatch");

        std::vector<int> out = w.letters();
        for (int gp : s.gaps) std::swap(out[gp], out[w.mod(gp + 1)]);
        return GaussWord(out);
    }
    }
    throw Error(Errc::site_invalid, "unknown move kind");
}

struct DeltaReport {
    MoveSite site;
    GaussWord result;
    PatternCounts before;
    PatternCounts after;
    PatternCounts delta; // after - before
    long long lambda_before = 0;
    long long lambda_after = 0;
    long long lambda_delta = 0;
};

inline DeltaReport pattern_delta(const GaussWord& w, const MoveSite& s) {
    DeltaReport r;
    r.site = s;
    r.result = apply_move(w, s);
    r.before = count_named(w);
    r.after = count_named(r.result);
    r.delta = r.after - r.before;
    r.lambda_before = lambda_from_counts(r.before);
    r.lambda_after = lambda_from_counts(r.after);
    r.lambda_delta = r.lambda_after - r.lambda_before;
    return r;
}

// Empty string when the delta satisfies the move's increment table;
// otherwise a description of the violated clause.
inline std::string check_move_contract(const DeltaReport& r) {
    auto mod4 = [](long long x) { return static_cast<int>(((x % 4) + 4) % 4); };
    auto even = [](long long x) { return x % 2 == 0; };
    const PatternCounts& d = r.delta;
    std::string err;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) err += (err.empty() ? "" : "; ") + what;
    };

    switch (r.site.kind) {
    case MoveKind::ri_add:
    case MoveKind::ri_del:
        expect(d.cross == 0 && d.triple == 0 && d.h == 0 && d.iii == 0 && d.hh == 0,
               "RI must leave all five counts unchanged");
        break;
    case MoveKind::rii_strong_add:
    case MoveKind::rii_strong_del:
        expect(mod4(d.cross) == 0, "strong RII needs cross delta 0 mod 4");
        expect(even(d.triple) && even(d.h) && even(d.iii),
               "strong RII needs even triple/h/iii deltas");
        break;
    case MoveKind::rii_weak_add:
        expect(mod4(d.cross) == 3, "weak RII add needs cross delta 3 mod 4");
        expect(!even(d.triple), "weak RII needs odd triple delta");
        expect(even(d.h) && even(d.iii), "weak RII needs even h/iii deltas");
        break;
    case MoveKind::rii_weak_del:
        expect(mod4(d.cross) == 1, "weak RII del needs cross delta 1 mod 4");
        expect(!even(d.triple), "weak RII needs odd triple delta");
        expect(even(d.h) && even(d.iii), "weak RII needs even h/iii deltas");
        break;
    case MoveKind::riii_strong:
        expect(d.cross == 3 || d.cross == -3, "strong RIII needs cross delta +-3");
        expect(!even(d.triple), "strong RIII needs odd triple delta");
        expect(even(d.h) && even(d.iii), "strong RIII needs even h/iii deltas");
        break;
    case MoveKind::riii_weak:
        expect(d.cross == 1 || d.cross == -1, "weak RIII needs cross delta +-1");
        expect(!even(d.triple), "weak RIII needs odd triple delta");
        expect(even(d.h) && even(d.iii), "weak RIII needs even h/iii deltas");
        break;
    }

    long long num = 3 * d.h - 3 * d.triple + d.cross;
    expect(mod4(num) == 0, "3h-3tr+cross delta must be 0 mod 4");
    bool lambda_preserving = r.site.kind == MoveKind::ri_add || r.site.kind == MoveKind::ri_del ||
                             r.site.kind == MoveKind::riii_strong;
    if (lambda_preserving)
        expect(num == 0, "RI and strong RIII must preserve 3h-3tr+cross");
    return err;
}

// ---------------------------------------------------------------------------
// Flypes

enum class FlypeCase { case1, case5 };

// A flype decomposition around crossing Q. With the tangle arcs following
// the Q passages the cyclic word reads Q u1 v1 Q u2 v2; Case 1 has v1
// empty. `suffix` marks the mirrored layout (tangle arcs preceding the Q
// passages), handled by running the rewrite on the reversed word.
// Condition (*) holds by construction: every chord with an endpoint in
// u1 or u2 has both endpoints there.
struct FlypeSite {
    int q = 0;
    FlypeCase kase = FlypeCase::case1;
    bool suffix = false;
    int anchor = 0; // Q passage opening the decomposition, in apply frame
    int len1 = 0;
    int len2 = 0;
    std::vector<int> tangle_positions; // original-word coordinates, sorted

    std::string str() const {
        std::string s = "flype Q=" + std::to_string(q);
        s += kase == FlypeCase::case1 ? " case1" : " case5";
        if (suffix) s += " (mirrored)";
        s += " tangle";
        if (tangle_positions.empty()) s += " {}";
        for (int p : tangle_positions) s += ' ' + std::to_string(p);
        return s;
    }
};

namespace detail {

struct FlypeBlocks {
    int q = 0;
    std::vector<int> u1, v1, u2, v2;
};

inline FlypeBlocks flype_blocks(const std::vector<int>& letters, int anchor, int len1,
                                int len2) {
    const int len = static_cast<int>(letters.size());
    auto at = [&](int i) { return letters[((i % len) + len) % len]; };
    FlypeBlocks b;
    b.q = at(anchor);
    int other = -1;
    for (int d = 1; d < len; ++d)
        if (at(anchor + d) == b.q) { other = d; break; }
    if (other < 0 || len1 > other - 1 || len2 > len - other - 1)
        throw Error(Errc::site_invalid, "flype decomposition out of range");
    for (int k = 1; k < other; ++k)
        (k <= len1 ? b.u1 : b.v1).push_back(at(anchor + k));
    for (int k = 1; k < len - other; ++k)
        (k <= len2 ? b.u2 : b.v2).push_back(at(anchor + other + k));
    return b;
}

// Letters of u1 and u2 occur nowhere else: condition (*).
inline bool flype_support_closed(const FlypeBlocks& b) {
    std::map<int, int> inside;
    for (int x : b.u1) ++inside[x];
    for (int x : b.u2) ++inside[x];
    for (auto& [c, k] : inside)
        if (k != 2) return false;
    return true;
}

inline std::vector<int> flype_rewrite(const FlypeBlocks& b) {
    std::vector<int> out;
    out.reserve(b.u1.size() + b.v1.size() + b.u2.size() + b.v2.size() + 2);
    out.insert(out.end(), b.u1.rbegin(), b.u1.rend());
    out.push_back(b.q);
    out.insert(out.end(), b.v1.begin(), b.v1.end());
    out.insert(out.end(), b.u2.rbegin(), b.u2.rend());
    out.push_back(b.q);
    out.insert(out.end(), b.v2.begin(), b.v2.end());
    return out;
}

} // namespace detail

inline std::vector<FlypeSite> list_flype_sites(const GaussWord& w) {
    std::vector<FlypeSite> out;
    const int len = w.size();
    if (len == 0) return out;
    std::set<std::tuple<bool, int, std::vector<int>>> seen;

    for (bool suffix : {false, true}) {
        std::vector<int> letters = w.letters();
        if (suffix) std::reverse(letters.begin(), letters.end());
        auto at = [&](int i) { return letters[((i % len) + len) % len]; };
        for (int anchor = 0; anchor < len; ++anchor) {
            int q = at(anchor);
            int other = -1;
            for (int d = 1; d < len; ++d)
                if (at(anchor + d) == q) { other = d; break; }
            const int max1 = other - 1, max2 = len - other - 1;
            for (int len1 = 0; len1 <= max1; ++len1) {
                for (int len2 = 0; len2 <= max2; ++len2) {
                    auto blocks = detail::flype_blocks(letters, anchor, len1, len2);
                    if (!detail::flype_support_closed(blocks)) continue;
                    FlypeSite site;
                    site.q = q;
                    site.kase = (len1 == max1) ? FlypeCase::case1 : FlypeCase::case5;
                    site.suffix = suffix;
                    site.anchor = anchor;
                    site.len1 = len1;
                    site.len2 = len2;
                    for (int k = 1; k <= len1; ++k) {
                        int p = (anchor + k) % len;
                        site.tangle_positions.push_back(suffix ? len - 1 - p : p);
                    }
                    for (int k = 1; k <= len2; ++k) {
                        int p = (anchor + other + k) % len;
                        site.tangle_positions.push_back(suffix ? len - 1 - p : p);
                    }
                    std::sort(site.tangle_positions.begin(), site.tangle_positions.end());
                    auto key = std::make_tuple(suffix, q, site.tangle_positions);
                    if (!seen.insert(key).second) continue;
                    out.push_back(std::move(site));
                }
            }
        }
    }
    return out;
}

// Rewrites the word by transporting Q across the tangle and reversing each
// tangle strand. The postcondition check is deliberately fatal: a wrong
// rewrite rule must not pass silently.
inline GaussWord apply_flype(const GaussWord& w, const FlypeSite& f) {
    const int len = w.size();
    if (len == 0) throw Error(Errc::site_invalid, "no flype on the simple closed curve");
    std::vector<int> letters = w.letters();
    if (f.suffix) std::reverse(letters.begin(), letters.end());
    auto blocks = detail::flype_blocks(letters, f.anchor, f.len1, f.len2);
    if (blocks.q != f.q || !detail::flype_support_closed(blocks))
        throw Error(Errc::site_invalid, "flype site does not match word");
    std::vector<int> rewritten = detail::flype_rewrite(blocks);
    if (f.suffix) std::reverse(rewritten.begin(), rewritten.end());
    GaussWord result(rewritten);

    if (!is_realizable(result))
        throw Error(Errc::postcondition_violation, "flype produced a non-realizable word");
    if (count_named(result) != count_named(w))
        throw Error(Errc::postcondition_violation, "flype changed sub-chord counts");
    return result;
}

} // namespace subchord
