#include <doctest.h>

#include <numeric>
#include <random>

#include "linkbook/plat.hpp"
#include "test_support.hpp"

using namespace linkbook;

namespace {

// realizes a permutation as an adjacent-transposition word, then sprinkles in
// groups with even twist counts that do not alter the wiring
PlatWord realize(const std::vector<int>& perm, std::mt19937& rng) {
    const int n = static_cast<int>(perm.size());
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 1);
    PlatWord word;
    // selection-sort the strands into their target positions
    for (int target = 1; target <= n; ++target) {
        int want = -1;
        for (int pos = target; pos <= n; ++pos)
            if (perm[at[pos - 1] - 1] == target) want = pos;
        for (int pos = want; pos > target; --pos) {
            PlatGroup g;
            g.pos = pos - 1;
            g.half_twists = 1 + 2 * static_cast<int>(rng() % 2);  // odd
            g.sign = rng() % 2 ? 1 : -1;
            g.lambda = 0.5 + (rng() % 20) / 10.0;
            word.push_back(g);
            std::swap(at[pos - 2], at[pos - 1]);
        }
    }
    // even-twist noise anywhere
    int extra = rng() % 4;
    for (int e = 0; e < extra && n >= 2; ++e) {
        PlatGroup g;
        g.pos = 1 + static_cast<int>(rng() % (n - 1));
        g.half_twists = 2 + 2 * static_cast<int>(rng() % 2);  // even
        g.sign = rng() % 2 ? 1 : -1;
        g.lambda = 0.5 + (rng() % 20) / 10.0;
        word.insert(word.begin() + rng() % (word.size() + 1), g);
    }
    return word;
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

TEST_CASE("parity from half-integer parts") {
    Degree1Table t;
    t.strands = 3;
    t.accumulate(1, 2, 0.1, Rational(3, 2));  // odd half-twists
    t.accumulate(2, 3, 0.0, Rational(1));     // even
    auto p = parity_matrix(t, 3);
    CHECK(p[0][1]);
    CHECK(p[1][0]);
    CHECK_FALSE(p[1][2]);
    CHECK_FALSE(p[0][2]);  // missing pair counts as unlinked

    Degree1Table bad;
    bad.strands = 2;
    bad.accumulate(1, 2, 0.0, Rational(1, 3));
    CHECK_THROWS_AS(parity_matrix(bad, 2), ValidationError);
}

TEST_CASE("all-false parity is the identity permutation") {
    std::vector<std::vector<bool>> p(4, std::vector<bool>(4, false));
    CHECK(plat_permutation(p) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("one odd pair is a transposition") {
    std::mt19937 rng(3);
    PlatWord word{{1, 1, 1, 1.0}};
    CHECK(plat_trace(word, 2) == std::vector<int>{2, 1});
    Degree1Table t = plat_degree1_table(word, 2);
    CHECK(plat_permutation(parity_matrix(t, 2)) == std::vector<int>{2, 1});
    (void)rng;
}

TEST_CASE("inconsistent parity has no realizing wiring") {
    // 1-2 and 2-3 invert but 1-3 does not: impossible for strands
    std::vector<std::vector<bool>> p(3, std::vector<bool>(3, false));
    p[0][1] = p[1][0] = true;
    p[1][2] = p[2][1] = true;
    CHECK_THROWS_AS(plat_permutation(p), ValidationError);

    std::vector<std::vector<bool>> asym(2, std::vector<bool>(2, false));
    asym[0][1] = true;
    CHECK_THROWS_AS(plat_permutation(asym), ValidationError);
}

TEST_CASE("parity matrix is symmetric") {
    std::mt19937 rng(14);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + rng() % 5;
        PlatWord word = realize(random_perm(n, rng), rng);
        auto p = parity_matrix(plat_degree1_table(word, n), n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) CHECK(p[a][b] == p[b][a]);
    }
}

TEST_CASE("recovered permutation equals the generator's ground truth") {
    std::mt19937 rng(9001);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + rng() % 5;  // up to 6 strands
        std::vector<int> perm = random_perm(n, rng);
        PlatWord word = realize(perm, rng);
        REQUIRE(plat_trace(word, n) == perm);  // generator is honest
        Degree1Table table = plat_degree1_table(word, n);
        CHECK(plat_permutation(parity_matrix(table, n)) == perm);
    }
}

TEST_CASE("degree-1 table JSON round-trips") {
    std::mt19937 rng(66);
    PlatWord word = realize(random_perm(4, rng), rng);
    Degree1Table t = plat_degree1_table(word, 4);
    Degree1Table back = parse_degree1_table(serialize_degree1_table(t));
    CHECK(back.strands == t.strands);
    CHECK(back.pairs.size() == t.pairs.size());
    for (const auto& [ab, v] : t.pairs) {
        REQUIRE(back.pairs.count(ab) == 1);
        CHECK(back.pairs.at(ab).second == v.second);
    }
}
