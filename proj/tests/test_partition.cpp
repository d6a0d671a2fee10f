#include "doctest.h"

#include <map>
#include <numeric>

#include "outext/errors.hpp"
#include "outext/partition.hpp"

using namespace outext;

namespace {

// Independent partition counter: Euler's pentagonal number recurrence.
Int pentagonal_count(int n) {
    static std::vector<Int> memo{1};
    for (int m = int(memo.size()); m <= n; ++m) {
        Int total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            Int sign = (k % 2) ? 1 : -1;
            total += sign * memo[m - g1];
            if (g2 <= m) total += sign * memo[m - g2];
        }
        memo.push_back(total);
    }
    return memo[n];
}

// Brute-force count of standard Young tableaux: fill cells 1..n respecting
// row/column growth.
Int count_syt(std::vector<int> filled, const std::vector<int>& shape) {
    int total = std::accumulate(shape.begin(), shape.end(), 0);
    int placed = std::accumulate(filled.begin(), filled.end(), 0);
    if (placed == total) return 1;
    Int count = 0;
    for (size_t r = 0; r < shape.size(); ++r) {
        if (filled[r] == shape[r]) continue;
        if (r > 0 && filled[r - 1] <= filled[r]) continue;
        ++filled[r];
        count += count_syt(filled, shape);
        --filled[r];
    }
    return count;
}

}  // namespace

TEST_CASE("partition parsing and serialization") {
    CHECK(Partition::parse("2,1,1,1").to_text() == "2,1,1,1");
    CHECK(Partition::parse("2,1,1,1").to_display() == "2,1^3");
    CHECK(Partition::parse("").to_text() == "");
    CHECK(Partition::parse("5").to_display() == "5");
    CHECK(Partition::parse("3,3").to_display() == "3^2");
    CHECK(Partition::parse("1,1,1,1").size() == 4);
    CHECK(Partition::parse("4,2,1").length() == 3);
    CHECK_THROWS_AS(Partition::parse("1,2"), Error);    // increasing
    CHECK_THROWS_AS(Partition::parse("2,,1"), Error);   // empty field
    CHECK_THROWS_AS(Partition::parse("2,0"), Error);    // zero part
    CHECK_THROWS_AS(Partition::parse("2,1^3"), Error);  // shorthand is display-only
}

TEST_CASE("conjugation") {
    CHECK(Partition::parse("3,3,2,2").conjugate() == Partition::parse("4,4,2"));
    CHECK(Partition::parse("5").conjugate() == Partition::parse("1,1,1,1,1"));
    CHECK(Partition().conjugate() == Partition());
    for (int n = 0; n <= 9; ++n)
        for (auto& p : generate_partitions(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("canonical order") {
    auto p4 = generate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition::parse("4"));
    CHECK(p4[1] == Partition::parse("3,1"));
    CHECK(p4[2] == Partition::parse("2,2"));
    CHECK(p4[3] == Partition::parse("2,1,1"));
    CHECK(p4[4] == Partition::parse("1,1,1,1"));
    for (size_t i = 0; i + 1 < p4.size(); ++i) CHECK(p4[i] < p4[i + 1]);
    CHECK(Partition::parse("3") < Partition::parse("3,1"));  // size dominates
}

TEST_CASE("partition counts match the pentagonal recurrence") {
    for (int n = 0; n <= 30; ++n) {
        auto parts = generate_partitions(n);
        CHECK(Int(parts.size()) == pentagonal_count(n));
        std::map<Partition, int> seen;
        for (auto& p : parts) {
            CHECK(p.size() == n);
            CHECK(++seen[p] == 1);  // no duplicates
        }
    }
}

TEST_CASE("hook dimension against brute-force tableau counting") {
    CHECK(hook_dimension(Partition()) == 1);
    for (int n = 1; n <= 6; ++n)
        for (auto& lambda : generate_partitions(n)) {
            std::vector<int> filled(lambda.parts().size(), 0);
            CHECK(hook_dimension(lambda) == count_syt(filled, lambda.parts()));
        }
}

TEST_CASE("sum of squared dimensions is n!") {
    for (int n = 0; n <= 10; ++n) {
        Int total = 0;
        for (auto& lambda : generate_partitions(n)) {
            Int f = hook_dimension(lambda);
            total += f * f;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("corner removal") {
    auto r = remove_box_partitions(Partition::parse("3,2,2"));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Partition::parse("3,2,1"));
    CHECK(r[1] == Partition::parse("2,2,2"));
    CHECK(remove_box_partitions(Partition::parse("1")) ==
          std::vector<Partition>{Partition()});
    CHECK_THROWS_AS(remove_box_partitions(Partition()), Error);
    // Branching consistency: f^lambda = sum of f over corners removed.
    for (int n = 1; n <= 8; ++n)
        for (auto& lambda : generate_partitions(n)) {
            Int total = 0;
            for (auto& mu : remove_box_partitions(lambda)) total += hook_dimension(mu);
            CHECK(total == hook_dimension(lambda));
        }
}

TEST_CASE("hook family") {
    auto f9 = hook_family(9);
    REQUIRE(f9.size() == 5);
    CHECK(f9[0] == Partition::parse("1,1,1,1,1,1,1,1,1"));
    CHECK(f9[1] == Partition::parse("2,1,1,1,1,1,1"));
    CHECK(f9[2] == Partition::parse("3,1,1,1,1"));
    CHECK(f9[3] == Partition::parse("4,1,1"));
    CHECK(f9[4] == Partition::parse("5"));
    auto f3 = hook_family(3);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0] == Partition::parse("1,1,1"));
    CHECK(f3[1] == Partition::parse("2"));
}

TEST_CASE("centralizer orders partition the group") {
    for (int n = 1; n <= 9; ++n) {
        Rat total = 0;
        for (auto& ct : cycle_types(n)) total += Rat(factorial(n), ct.centralizer_order);
        CHECK(total.denominator() == 1);
        CHECK(total.numerator() == factorial(n));
    }
    CHECK(centralizer_order(Partition::parse("2,2,1")) == 8);  // 2^2*2!*1*1!
    CHECK(centralizer_order(Partition::parse("5")) == 5);
}
