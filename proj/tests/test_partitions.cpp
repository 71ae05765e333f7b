#include <doctest.h>

#include <algorithm>
#include <set>

#include "hermite/partitions.hpp"

using namespace hermite;

namespace {

Partition pt(std::vector<int> v) { return Partition(std::move(v)); }

// Independent enumeration oracle: odometer over {0..ell}^m, keep weakly
// decreasing tuples of the right weight.
std::set<Partition> box_oracle(int k, int m, int ell, bool regular) {
    std::set<Partition> out;
    std::vector<int> t(static_cast<std::size_t>(m), 0);
    while (true) {
        int sum = 0;
        bool sorted = true;
        for (int i = 0; i < m; ++i) {
            sum += t[static_cast<std::size_t>(i)];
            if (i + 1 < m && t[static_cast<std::size_t>(i)] < t[static_cast<std::size_t>(i + 1)])
                sorted = false;
        }
        if (sorted && sum == k) {
            Partition p(t);
            if (!regular || p.is_regular()) out.insert(p);
        }
        int pos = m - 1;
        while (pos >= 0 && t[static_cast<std::size_t>(pos)] == ell) {
            t[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++t[static_cast<std::size_t>(pos)];
    }
    return out;
}

} // namespace

TEST_CASE("box enumeration matches the odometer oracle") {
    auto got = enumerate_box(2, 2, 2);
    CHECK(std::set<Partition>(got.begin(), got.end()) ==
          std::set<Partition>{pt({2, 0}), pt({1, 1})});
    CHECK(enumerate_box(0, 3, 5) == std::vector<Partition>{pt({0, 0, 0})});
    CHECK(enumerate_box(3, 2, 2, true) == std::vector<Partition>{pt({2, 1})});
    for (int m = 1; m <= 4; ++m)
        for (int ell = 1; ell <= 4; ++ell)
            for (int k = 0; k <= m * ell; ++k)
                for (bool regular : {false, true}) {
                    auto mine = enumerate_box(k, m, ell, regular);
                    CHECK(std::set<Partition>(mine.begin(), mine.end()) ==
                          box_oracle(k, m, ell, regular));
                }
}

TEST_CASE("gaussian binomial counts box partitions") {
    CHECK(gaussian_binomial(2, 2) == std::vector<std::int64_t>{1, 1, 2, 1, 1});
    CHECK(gaussian_binomial(3, 2) == std::vector<std::int64_t>{1, 1, 2, 2, 2, 1, 1});
    CHECK(gaussian_binomial(1, 5) == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1});
    for (int ell = 0; ell <= 5; ++ell)
        for (int m = 0; m <= 5; ++m) {
            auto coeffs = gaussian_binomial(ell, m);
            REQUIRE(coeffs.size() == static_cast<std::size_t>(ell * m + 1));
            std::int64_t total = 0;
            for (int k = 0; k <= ell * m; ++k) {
                CHECK(coeffs[static_cast<std::size_t>(k)] ==
                      static_cast<std::int64_t>(box_oracle(k, ell, m, false).size()));
                CHECK(coeffs[static_cast<std::size_t>(k)] ==
                      coeffs[static_cast<std::size_t>(ell * m - k)]);
                total += coeffs[static_cast<std::size_t>(k)];
            }
            std::int64_t binom = 1;
            for (int i = 1; i <= m; ++i) binom = binom * (ell + i) / i;
            CHECK(total == binom);
        }
}

TEST_CASE("b coefficients") {
    CHECK(b_coefficient(2, 2, 2) == 1);
    CHECK(b_coefficient(0, 4, 7) == 1);
    CHECK(b_coefficient(1, 2, 2) == 0);
    CHECK_THROWS_AS(b_coefficient(-1, 2, 2), OutOfRangeError);
    CHECK_THROWS_AS(b_coefficient(5, 2, 2), OutOfRangeError);
}

TEST_CASE("transpose") {
    CHECK(pt({4, 2, 2, 1}).transposed() == pt({4, 3, 1, 1}));
    CHECK(pt({}).transposed() == pt({}));
    CHECK(pt({3}).transposed() == pt({1, 1, 1}));
    CHECK(pt({2, 0}).transposed() == pt({1, 1})); // trailing zeros do not add columns
}

TEST_CASE("dominance") {
    CHECK(dominance(pt({3, 1}), pt({2, 2})) == Dominance::Dominates);
    CHECK(dominance(pt({3, 3}), pt({4, 1, 1})) == Dominance::Incomparable);
    CHECK(dominance(pt({2, 1}), pt({2, 1})) == Dominance::Equal);
    CHECK(dominance(pt({2, 1, 0}), pt({2, 1})) == Dominance::Equal);
    CHECK_THROWS_AS(dominance(pt({2}), pt({1})), WeightMismatchError);
}

TEST_CASE("staircase maps reproduce the worked example") {
    Partition lambda = Partition::padded(pt({4, 2, 2, 1}), 5);
    Partition w = tilde_w(lambda, 5, 4);
    CHECK(w == pt({8, 5, 4, 2, 0}));
    Partition d = tilde_d(w, 5, 4);
    CHECK(d == pt({7, 5, 2, 1}));
    CHECK(tilde_w_star(d, 4, 5) == pt({4, 3, 1, 1}));
    CHECK(tilde_w_star(d, 4, 5) == lambda.transposed());
}

TEST_CASE("tilde_w edge cases") {
    CHECK(tilde_w(pt({0, 0, 0}), 3, 2) == staircase(3));
    CHECK(tilde_w(pt({2, 2}), 2, 2) == pt({3, 2}));
    CHECK_THROWS_AS(tilde_w(pt({3, 1}), 2, 2), BoxViolationError); // 3 > ell
    CHECK_THROWS_AS(tilde_w(pt({1, 1, 1}), 2, 3), BoxViolationError);
}

TEST_CASE("tilde_d edge cases") {
    // 2-element ground set: the complement map is the identity on one slot.
    CHECK(tilde_d(pt({0}), 1, 1) == pt({0}));
    CHECK(tilde_d(pt({1}), 1, 1) == pt({1}));
    // One-column case, checked against the commuting diagram: lambda=(0,0)
    // has tilde_w image (1,0), and its composite must equal transpose = (0).
    CHECK(tilde_d(pt({1, 0}), 2, 1) == pt({0}));
    CHECK_THROWS_AS(tilde_d(pt({1, 1}), 2, 1), NotRegularError);
    CHECK_THROWS_AS(tilde_d(pt({5, 0}), 2, 1), BoxViolationError);
}

TEST_CASE("tilde_w_star edge cases") {
    CHECK(tilde_w_star(staircase(4), 4, 3) == pt({0, 0, 0, 0}));
    CHECK(tilde_w_star(pt({3, 2}), 2, 2) == pt({2, 2}));
    CHECK_THROWS_AS(tilde_w_star(pt({1, 1}), 2, 5), NotRegularError);
    CHECK_THROWS_AS(tilde_w_star(pt({2, 0}), 3, 5), RangeViolationError); // wrong slot count
    CHECK_THROWS_AS(tilde_w_star(pt({7, 0}), 2, 3), RangeViolationError); // 6 > m
}

TEST_CASE("diagram commutes exhaustively at small scale") {
    for (int m = 1; m <= 5; ++m)
        for (int ell = 1; ell <= 5; ++ell)
            for_each_in_box(m, ell, [&](const Partition& lambda) {
                Partition rt = tilde_w_star(tilde_d(tilde_w(lambda, m, ell), m, ell), ell, m);
                CHECK(rt == Partition::padded(lambda.transposed(), ell));
            });
}

TEST_CASE("canonical order is a linear extension of dominance") {
    // Frozen small case: weight-2 shell in the 2x2 box, dominated first.
    BoxedPartitionSet set = boxed_partitions(2, 2, 2);
    CHECK(set.members == std::vector<Partition>{pt({1, 1}), pt({2, 0})});
    for (int m = 1; m <= 5; ++m)
        for (int ell = 1; ell <= 5; ++ell)
            for (int k = 0; k <= m * ell; ++k) {
                auto members = boxed_partitions(k, m, ell).members;
                for (std::size_t i = 0; i < members.size(); ++i)
                    for (std::size_t j = i + 1; j < members.size(); ++j)
                        CHECK(dominance(members[i], members[j]) != Dominance::Dominates);
            }
}

TEST_CASE("regular enumeration counts subsets") {
    // Regular partitions with m slots bounded by n are m-subsets of {0..n}.
    for (int m = 1; m <= 4; ++m) {
        int n = m + 2;
        std::size_t total = 0;
        for (int k = 0; k <= m * n; ++k) total += enumerate_box(k, m, n, true).size();
        std::size_t binom = 1;
        for (int i = 1; i <= m; ++i) binom = binom * static_cast<std::size_t>(n + 2 - i) / i;
        CHECK(total == binom);
    }
}
