#pragma once

// Gauss double-occurrence words and their chord-diagram structure.
// A word is stored linearly but every predicate treats it as cyclic;
// canonical_form fixes the representative over rotation, reversal and
// relabeling.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subchord/error.hpp"

namespace subchord {

class GaussWord {
public:
    GaussWord() = default;

    // Accepts any sequence of labels where each label occurs exactly twice;
    // labels are renamed to 1..n in order of first occurrence.
    explicit GaussWord(const std::vector<int>& raw) : letters_(normalize(raw)) {}

    static GaussWord from_letters(std::vector<int> raw) { return GaussWord(raw); }

    const std::vector<int>& letters() const noexcept { return letters_; }
    int size() const noexcept { return static_cast<int>(letters_.size()); } // 2n
    int n() const noexcept { return size() / 2; }
    bool empty() const noexcept { return letters_.empty(); }
    int at(int pos) const { return letters_[mod(pos)]; }
    int mod(int pos) const { return ((pos % size()) + size()) % size(); }

    // (first, second) occurrence positions of a label.
    std::pair<int, int> occurrences(int label) const {
        int a = -1, b = -1;
        for (int i = 0; i < size(); ++i) {
            if (letters_[i] == label) {
                (a < 0 ? a : b) = i;
            }
        }
        if (a < 0 || b < 0)
            throw Error(Errc::site_invalid, "label " + std::to_string(label) + " not present");
        return {a, b};
    }

    bool operator==(const GaussWord& o) const noexcept { return letters_ == o.letters_; }
    bool operator!=(const GaussWord& o) const noexcept { return letters_ != o.letters_; }
    bool operator<(const GaussWord& o) const noexcept { return letters_ < o.letters_; }

    std::string str() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(letters_[i]);
        }
        return s;
    }

private:
    static std::vector<int> normalize(const std::vector<int>& raw) {
        std::vector<int> out;
        out.reserve(raw.size());
        std::vector<std::pair<int, int>> seen; // (raw label, new id)
        for (int x : raw) {
            int id = 0;
            for (auto& [k, v] : seen) {
                if (k == x) { id = v; break; }
            }
            if (id == 0) {
                id = static_cast<int>(seen.size()) + 1;
                seen.emplace_back(x, id);
            }
            out.push_back(id);
        }
        std::vector<int> count(seen.size() + 1, 0);
        for (int x : out) ++count[x];
        for (size_t i = 1; i < count.size(); ++i) {
            if (count[i] != 2)
                throw Error(Errc::label_not_twice,
                            "label occurs " + std::to_string(count[i]) + " times");
        }
        return out;
    }

    std::vector<int> letters_;
};

// Whitespace- or comma-separated alphanumeric tokens; empty input is the
// simple closed curve.
inline GaussWord parse_gauss_word(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    bool token_since_comma = true; // a comma requires a token on each side
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
                token_since_comma = true;
            }
            if (c == ',') {
                if (!token_since_comma || tokens.empty())
                    throw Error(Errc::empty_token, "empty token between separators");
                token_since_comma = false;
            }
            continue;
        }
        if (!std::isalnum(static_cast<unsigned char>(c)))
            throw Error(Errc::empty_token, std::string("malformed token character '") + c + "'");
        cur += c;
    }
    if (!cur.empty()) {
        tokens.push_back(cur);
        token_since_comma = true;
    }
    if (!token_since_comma)
        throw Error(Errc::empty_token, "trailing separator without token");

    std::vector<int> ids;
    ids.reserve(tokens.size());
    std::vector<std::string> names;
    for (const auto& t : tokens) {
        auto it = std::find(names.begin(), names.end(), t);
        if (it == names.end()) {
            names.push_back(t);
            ids.push_back(static_cast<int>(names.size()));
        } else {
            ids.push_back(static_cast<int>(it - names.begin()) + 1);
        }
    }
    return GaussWord(ids);
}

namespace detail {

// Relabel a fixed linearization by first occurrence: the piece of
// canonicalization shared by every symmetry candidate.
inline std::vector<int> first_occurrence_relabel(const std::vector<int>& w) {
    std::vector<int> map(w.size() + 1, 0), out;
    out.reserve(w.size());
    int next = 1;
    for (int x : w) {
        if (map[x] == 0) map[x] = next++;
        out.push_back(map[x]);
    }
    return out;
}

} // namespace detail

// Lexicographically minimal word over all rotations, the reversal, and
// label renamings. Idempotent; equal canonical forms characterise the
// symmetry orbit.
inline GaussWord canonical_form(const GaussWord& w) {
    const int len = w.size();
    if (len == 0) return w;
    std::vector<int> best;
    std::vector<int> cand(len);
    for (int dir : {+1, -1}) {
        for (int rot = 0; rot < len; ++rot) {
            for (int i = 0; i < len; ++i)
                cand[i] = w.at(rot + dir * i);
            auto rel = detail::first_occurrence_relabel(cand);
            if (best.empty() || rel < best) best = std::move(rel);
        }
    }
    return GaussWord(best);
}

struct InterlacementGraph {
    int n = 0;
    std::vector<uint64_t> adj; // adjacency bitmask per chord, chords indexed 0..n-1

    bool edge(int a, int b) const { return (adj[a] >> b) & 1u; }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; ++v) total += degree(v);
        return total / 2;
    }
};

// Two chords interlace when their endpoint pairs alternate around the circle.
inline InterlacementGraph interlacement(const GaussWord& w) {
    InterlacementGraph g;
    g.n = w.n();
    g.adj.assign(g.n, 0);
    std::vector<std::pair<int, int>> occ(g.n + 1, {-1, -1});
    for (int i = 0; i < w.size(); ++i) {
        auto& p = occ[w.letters()[i]];
        (p.first < 0 ? p.first : p.second) = i;
    }
    for (int a = 1; a <= g.n; ++a) {
        for (int b = a + 1; b <= g.n; ++b) {
            // exactly one endpoint of b strictly inside the arc (a1, a2)
            auto [a1, a2] = occ[a];
            int inside = 0;
            for (int e : {occ[b].first, occ[b].second})
                if (a1 < e && e < a2) ++inside;
            if (inside == 1) {
                g.adj[a - 1] |= uint64_t(1) << (b - 1);
                g.adj[b - 1] |= uint64_t(1) << (a - 1);
            }
        }
    }
    return g;
}

// Concatenation after relabeling w2 disjointly from w1.
inline GaussWord connected_sum(const GaussWord& w1, const GaussWord& w2) {
    std::vector<int> out = w1.letters();
    out.reserve(w1.size() + w2.size());
    for (int x : w2.letters()) out.push_back(x + w1.n());
    return GaussWord(out);
}

using FactorList = std::vector<GaussWord>;

namespace detail {

// Smallest proper cyclic window whose labels are complete within it,
// ties broken by start; (start, length) or length 0 when prime.
inline std::pair<int, int> min_closed_window(const std::vector<int>& w) {
    const int len = static_cast<int>(w.size());
    for (int window = 2; window <= len - 2; window += 2) {
        for (int start = 0; start < len; ++start) {
            std::vector<int> inside(len / 2 + 1, 0);
            for (int k = 0; k < window; ++k) ++inside[w[(start + k) % len]];
            bool closed = true;
            for (int c : inside)
                if (c == 1) { closed = false; break; }
            if (closed) return {start, window};
        }
    }
    return {0, 0};
}

} // namespace detail

// Maximal factorization into prime-or-infinity factors. Splitting at a
// closed window is a valid connected-sum cut; the remainder is treated
// cyclically (the cut glues its two boundary points together).
inline FactorList decompose(const GaussWord& w) {
    FactorList out;
    std::vector<int> cur = w.letters();
    while (!cur.empty()) {
        auto [start, window] = detail::min_closed_window(cur);
        if (window == 0) {
            out.emplace_back(cur);
            break;
        }
        const int len = static_cast<int>(cur.size());
        std::vector<int> factor(window), rest(len - window);
        for (int k = 0; k < window; ++k) factor[k] = cur[(start + k) % len];
        for (int k = 0; k < len - window; ++k) rest[k] = cur[(start + window + k) % len];
        out.emplace_back(factor);
        cur = std::move(rest);
    }
    return out;
}

// No reducible double point, i.e. no chord disjoint from all others.
inline bool is_reduced(const GaussWord& w) {
    auto g = interlacement(w);
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0) return false;
    return true;
}

// Not a connected sum of two nontrivial projections; the simple closed
// curve is not prime by convention.
inline bool is_prime(const GaussWord& w) {
    if (w.n() == 0) return false;
    return detail::min_closed_window(w.letters()).second == 0;
}

} // namespace subchord
