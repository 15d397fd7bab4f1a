#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "subchord/word.hpp"

using namespace subchord;

namespace {

GaussWord random_word(std::mt19937& rng, int n) {
    std::vector<int> slots(2 * n);
    std::vector<int> points(2 * n);
    for (int i = 0; i < 2 * n; ++i) points[i] = i;
    std::shuffle(points.begin(), points.end(), rng);
    for (int c = 0; c < n; ++c) {
        slots[points[2 * c]] = c + 1;
        slots[points[2 * c + 1]] = c + 1;
    }
    return GaussWord(slots);
}

GaussWord random_symmetry(std::mt19937& rng, const GaussWord& w) {
    if (w.empty()) return w;
    int rot = std::uniform_int_distribution<int>(0, w.size() - 1)(rng);
    int dir = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    std::vector<int> relabel(w.n() + 1);
    for (int i = 1; i <= w.n(); ++i) relabel[i] = i;
    std::shuffle(relabel.begin() + 1, relabel.end(), rng);
    std::vector<int> out(w.size());
    for (int i = 0; i < w.size(); ++i) out[i] = relabel[w.at(rot + dir * i)];
    return GaussWord(out);
}

} // namespace

TEST_CASE("parse accepts whitespace and comma separated labels") {
    CHECK(parse_gauss_word("1 2 3 1 2 3").n() == 3);
    CHECK(parse_gauss_word("a,b,a,b").letters() == std::vector<int>{1, 2, 1, 2});
    CHECK(parse_gauss_word("  x1 y2 , x1\ty2 ").letters() == std::vector<int>{1, 2, 1, 2});
    CHECK(parse_gauss_word("").n() == 0);
    CHECK(parse_gauss_word("   ").n() == 0);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_MATCHES(parse_gauss_word("1 2 1"), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("LABEL_NOT_TWICE")));
    CHECK_THROWS_MATCHES(parse_gauss_word("1,,2"), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("EMPTY_TOKEN")));
    CHECK_THROWS_MATCHES(parse_gauss_word(",1 1"), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("EMPTY_TOKEN")));
    CHECK_THROWS_MATCHES(parse_gauss_word("1 1,"), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("EMPTY_TOKEN")));
    CHECK_THROWS_MATCHES(parse_gauss_word("a# a#"), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("EMPTY_TOKEN")));
}

TEST_CASE("canonical form identifies rotations, reversal, relabelings") {
    GaussWord trefoil = parse_gauss_word("1 2 3 1 2 3");
    CHECK(canonical_form(parse_gauss_word("2 3 1 2 3 1")) == canonical_form(trefoil));

    GaussWord w = parse_gauss_word("1 2 3 4 2 1 4 3");
    std::vector<int> rev(w.letters().rbegin(), w.letters().rend());
    CHECK(canonical_form(GaussWord(rev)) == canonical_form(w));

    CHECK(canonical_form(GaussWord()) == GaussWord());
}

TEST_CASE("canonical form is idempotent and constant on symmetry orbits") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        GaussWord w = random_word(rng, std::uniform_int_distribution<int>(0, 6)(rng));
        GaussWord c = canonical_form(w);
        CHECK(canonical_form(c) == c);
        CHECK(canonical_form(random_symmetry(rng, w)) == c);
        // first-occurrence relabeling is minimal among all relabelings
        CHECK(!(random_symmetry(rng, w) < c));
    }
}

TEST_CASE("interlacement graphs of the named examples") {
    auto g = interlacement(parse_gauss_word("1 2 3 1 2 3"));
    CHECK(g.edge_count() == 3); // complete graph on 3 chords
    CHECK(g.degree(0) == 2);

    CHECK(interlacement(parse_gauss_word("1 2 2 1")).edge_count() == 0);

    auto c4 = interlacement(parse_gauss_word("1 2 3 4 2 1 4 3"));
    CHECK(c4.edge_count() == 4);
    CHECK(c4.edge(0, 2));
    CHECK(c4.edge(2, 1));
    CHECK(c4.edge(1, 3));
    CHECK(c4.edge(3, 0));
    CHECK(!c4.edge(0, 1));
    CHECK(!c4.edge(2, 3));
}

TEST_CASE("connected sum concatenates with disjoint relabeling") {
    GaussWord inf = parse_gauss_word("1 1");
    CHECK(connected_sum(inf, inf).letters() == std::vector<int>{1, 1, 2, 2});
    GaussWord t = parse_gauss_word("1 2 3 1 2 3");
    CHECK(connected_sum(GaussWord(), t) == t);
    CHECK(connected_sum(t, t).letters() ==
          std::vector<int>{1, 2, 3, 1, 2, 3, 4, 5, 6, 4, 5, 6});
}

TEST_CASE("decompose splits into prime-or-infinity factors") {
    auto fs = decompose(parse_gauss_word("1 1 2 3 4 2 3 4"));
    REQUIRE(fs.size() == 2);
    CHECK(canonical_form(fs[0]) == canonical_form(parse_gauss_word("1 1")));
    CHECK(canonical_form(fs[1]) == canonical_form(parse_gauss_word("2 3 4 2 3 4")));

    GaussWord t = parse_gauss_word("1 2 3 1 2 3");
    auto tf = decompose(t);
    REQUIRE(tf.size() == 1);
    CHECK(tf[0] == t);
    // no cut position separates the trefoil: check all windows by hand
    for (int start = 0; start < 6; ++start) {
        for (int window = 2; window <= 4; window += 2) {
            std::map<int, int> inside;
            for (int k = 0; k < window; ++k) ++inside[t.at(start + k)];
            bool closed = true;
            for (auto& [label, cnt] : inside)
                if (cnt == 1) closed = false;
            CHECK(!closed);
        }
    }

    CHECK(decompose(GaussWord()).empty());
}

TEST_CASE("decompose handles nested factors") {
    auto fs = decompose(parse_gauss_word("1 2 2 1 3 3"));
    REQUIRE(fs.size() == 3);
    for (const auto& f : fs)
        CHECK(canonical_form(f) == canonical_form(parse_gauss_word("1 1")));
}

TEST_CASE("decompose of connected sums recovers factor multisets") {
    std::mt19937 rng(7);
    std::vector<GaussWord> primes = {
        parse_gauss_word("1 1"),
        parse_gauss_word("1 2 3 1 2 3"),
        parse_gauss_word("1 2 3 4 2 1 4 3"),
    };
    for (int trial = 0; trial < 50; ++trial) {
        int k = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<std::vector<int>> expected;
        GaussWord sum;
        for (int i = 0; i < k; ++i) {
            const GaussWord& f = primes[std::uniform_int_distribution<size_t>(
                0, primes.size() - 1)(rng)];
            expected.push_back(canonical_form(f).letters());
            sum = connected_sum(sum, f);
        }
        std::vector<std::vector<int>> got;
        for (const auto& f : decompose(sum)) got.push_back(canonical_form(f).letters());
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("is_reduced and is_prime conventions") {
    CHECK(is_reduced(parse_gauss_word("1 2 3 1 2 3")));
    CHECK(!is_reduced(parse_gauss_word("1 1")));
    CHECK(is_reduced(GaussWord()));

    CHECK(is_prime(parse_gauss_word("1 2 3 1 2 3")));
    CHECK(!is_prime(parse_gauss_word("1 1 2 2")));
    CHECK(is_prime(parse_gauss_word("1 1")));
    CHECK(!is_prime(GaussWord()));
}

TEST_CASE("predicates are symmetry invariant") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        GaussWord w = random_word(rng, std::uniform_int_distribution<int>(1, 6)(rng));
        GaussWord s = random_symmetry(rng, w);
        CHECK(is_prime(w) == is_prime(s));
        CHECK(is_reduced(w) == is_reduced(s));
        CHECK(decompose(w).size() == decompose(s).size());
    }
}
