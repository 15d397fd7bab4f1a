#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "subchord/embed.hpp"
#include "subchord/word.hpp"

using namespace subchord;

namespace {

// All double-occurrence words on n chords (as matchings of 2n points).
std::vector<GaussWord> all_words(int n) {
    std::vector<GaussWord> out;
    std::vector<int> slots(2 * n, 0);
    std::function<void(int)> rec = [&](int next_label) {
        int first = -1;
        for (int i = 0; i < 2 * n; ++i)
            if (slots[i] == 0) { first = i; break; }
        if (first < 0) {
            out.emplace_back(slots);
            return;
        }
        slots[first] = next_label;
        for (int j = first + 1; j < 2 * n; ++j) {
            if (slots[j] != 0) continue;
            slots[j] = next_label;
            rec(next_label + 1);
            slots[j] = 0;
        }
        slots[first] = 0;
    };
    rec(1);
    return out;
}

} // namespace

TEST_CASE("spherical embeddings of the basic examples") {
    CHECK(spherical_embeddings(parse_gauss_word("1 2 1 2")).empty());
    CHECK(!spherical_embeddings(parse_gauss_word("1 2 2 1")).empty());

    auto circle = spherical_embeddings(GaussWord());
    REQUIRE(circle.size() == 1);
    CHECK(faces(circle[0]).count() == 2);
}

TEST_CASE("realizability of the named examples") {
    CHECK(is_realizable(parse_gauss_word("1 2 3 1 2 3")));
    CHECK(!is_realizable(parse_gauss_word("1 2 1 2")));
    CHECK(is_realizable(parse_gauss_word("1 2 3 4 2 1 4 3")));
}

TEST_CASE("bound guard") {
    std::vector<int> big;
    for (int c = 1; c <= 17; ++c) { big.push_back(c); big.push_back(c); }
    CHECK_THROWS_MATCHES(is_realizable(GaussWord(big)), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("BOUND_EXCEEDED")));
}

TEST_CASE("face walks") {
    GaussWord trefoil = parse_gauss_word("1 2 3 1 2 3");
    auto embeddings = spherical_embeddings(trefoil);
    REQUIRE(!embeddings.empty());
    for (const auto& e : embeddings) {
        auto d = faces(e).degrees();
        std::sort(d.begin(), d.end());
        CHECK(d == std::vector<int>{2, 2, 2, 3, 3});
    }

    auto circle = faces(spherical_embeddings(GaussWord())[0]);
    CHECK(circle.degrees() == std::vector<int>{1, 1});

    auto inf = spherical_embeddings(parse_gauss_word("1 1"));
    REQUIRE(!inf.empty());
    CHECK(faces(inf[0]).count() == 3);
}

TEST_CASE("every embedding has n+2 faces with total degree 4n") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : all_words(n)) {
            for (const auto& e : spherical_embeddings(w)) {
                auto fs = faces(e);
                CHECK(fs.count() == n + 2);
                int total = 0;
                for (int f = 0; f < fs.count(); ++f) total += fs.degree(f);
                CHECK(total == 4 * n);
            }
        }
    }
}

TEST_CASE("realizable words have even interlacement degrees") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : all_words(n)) {
            if (!is_realizable(w)) continue;
            auto g = interlacement(w);
            for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) % 2 == 0);
        }
    }
}

TEST_CASE("realizability is constant on symmetry orbits") {
    std::mt19937 rng(4242);
    for (const auto& w : all_words(4)) {
        bool r = is_realizable(w);
        CHECK(is_realizable(canonical_form(w)) == r);
        std::vector<int> rev(w.letters().rbegin(), w.letters().rend());
        CHECK(is_realizable(GaussWord(rev)) == r);
        int rot = std::uniform_int_distribution<int>(0, w.size() - 1)(rng);
        std::vector<int> rotated(w.size());
        for (int i = 0; i < w.size(); ++i) rotated[i] = w.at(rot + i);
        CHECK(is_realizable(GaussWord(rotated)) == r);
    }
}

TEST_CASE("trefoil signs are equal at every basepoint") {
    GaussWord trefoil = parse_gauss_word("1 2 3 1 2 3");
    for (const auto& e : spherical_embeddings(trefoil)) {
        for (int bp = 0; bp < trefoil.size(); ++bp) {
            auto sa = crossing_signs(e, bp);
            CHECK(sa.sign[1] == sa.sign[2]);
            CHECK(sa.sign[2] == sa.sign[3]);
        }
    }
}

TEST_CASE("orientation flip negates every sign") {
    for (const auto& w : {parse_gauss_word("1 1"), parse_gauss_word("1 2 3 1 2 3"),
                          parse_gauss_word("1 2 3 4 2 1 4 3")}) {
        auto embeddings = spherical_embeddings(w);
        REQUIRE(!embeddings.empty());
        SphericalEmbedding flipped = embeddings[0];
        flipped.orientation = -1;
        auto sa = crossing_signs(embeddings[0], 0);
        auto sb = crossing_signs(flipped, 0);
        for (int c = 1; c <= w.n(); ++c) {
            CHECK(sa.sign[c] == -sb.sign[c]);
            CHECK((sa.sign[c] == 1 || sa.sign[c] == -1));
        }
        // pairwise products are orientation independent
        for (int a = 1; a <= w.n(); ++a)
            for (int b = 1; b <= w.n(); ++b)
                CHECK(sa.sign[a] * sa.sign[b] == sb.sign[a] * sb.sign[b]);
    }
}
