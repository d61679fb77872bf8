#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "csf/composition.hpp"
#include "csf/rational.hpp"

using namespace csf;

TEST_CASE("rational reduction and formatting") {
    CHECK(Rational(BigInt(6), BigInt(4)) == Rational(BigInt(3), BigInt(2)));
    CHECK(Rational(BigInt(-6), BigInt(-4)) == Rational(BigInt(3), BigInt(2)));
    CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational::from_string("-3/2") == Rational(BigInt(-3), BigInt(2)));
    CHECK(Rational::from_string("18") == Rational(18));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK(Rational(BigInt(11), BigInt(6)) * Rational(12) == Rational(22));
    CHECK(Rational(1) / Rational(3) + Rational(2) / Rational(3) == Rational(1));
    CHECK(Rational(BigInt(5), BigInt(2)).is_integer() == false);
    CHECK_THROWS_AS(Rational(BigInt(5), BigInt(2)).to_integer(), std::domain_error);
    CHECK(Rational(BigInt(-4), BigInt(2)).to_integer() == BigInt(-2));
    CHECK(factorial(6) == 720);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("rho sorts parts") {
    CHECK(rho(Composition{4, 2, 2, 1}) == Partition{4, 2, 2, 1});
    CHECK(rho(Composition{1, 4, 2}) == Partition{4, 2, 1});
    CHECK(rho(Composition{}) == Partition{});
}

TEST_CASE("composition access and edits") {
    Composition I{4, 5, 2};
    CHECK(I.size() == 11);
    CHECK(I.length() == 3);
    CHECK(I.part(1) == 4);
    CHECK(I.part(-1) == 2);
    CHECK(I.part(-3) == 4);
    CHECK_THROWS_AS(I.part(0), std::out_of_range);
    CHECK_THROWS_AS(I.part(4), std::out_of_range);
    CHECK(I.without_last() == Composition{4, 5});
    CHECK(I.reversed() == Composition{2, 5, 4});
    CHECK_THROWS_AS(Composition{0}, std::invalid_argument);
    CHECK_THROWS_AS(Composition{}.without_last(), std::out_of_range);
}

TEST_CASE("w weight") {
    CHECK(w_weight(Composition{7}) == 7);
    CHECK(w_weight(Composition{2, 1}) == 0);
    CHECK(w_weight(Composition{4, 5}) == 16);
    CHECK(w_weight(Composition{}) == 1);
}

TEST_CASE("w weight is nonnegative and vanishes exactly on non-leading ones") {
    for (int n = 0; n <= 9; ++n)
        for_each_composition(n, [](const Composition& I) {
            long long w = w_weight(I);
            CHECK(w >= 0);
            bool has_non_leading_one = false;
            for (int k = 2; k <= I.length(); ++k)
                if (I.part(k) == 1) has_non_leading_one = true;
            CHECK((w == 0) == has_non_leading_one);
        });
}

TEST_CASE("sigma and surplus") {
    CHECK(sigma(Composition{4, 5}, 6) == 9);
    CHECK(sigma(Composition{2, 2}, 2) == 2);
    CHECK(sigma(Composition{3, 1}, 0) == 0);
    CHECK(sigma(Composition{3, 1}, -5) == 0);
    CHECK(surplus(Composition{4, 5}, 6) == 3);
    CHECK(surplus(Composition{9}, 6) == 3);
    CHECK(surplus(Composition{2, 2}, 2) == 0);
    CHECK_THROWS_AS(sigma(Composition{2, 2}, 5), std::invalid_argument);
}

TEST_CASE("surplus bounds") {
    for (int n = 1; n <= 9; ++n)
        for_each_composition(n, [&](const Composition& I) {
            int max_part = 0;
            for (int p : I.parts()) max_part = std::max(max_part, p);
            for (long long a = 1; a <= n; ++a) {
                long long t = surplus(I, a);
                CHECK(t >= 0);
                CHECK(t <= max_part - 1);
            }
        });
}

TEST_CASE("composition enumeration count and order") {
    CHECK(compositions_of(0).size() == 1);
    CHECK(compositions_of(0).front() == Composition{});
    CHECK(compositions_of(1) == std::vector<Composition>{Composition{1}});
    auto three = compositions_of(3);
    CHECK(three == std::vector<Composition>{Composition{1, 1, 1}, Composition{1, 2},
                                            Composition{2, 1}, Composition{3}});
    for (int n = 2; n <= 12; ++n) {
        auto all = compositions_of(n);
        CHECK(all.size() == (1u << (n - 1)));
        std::set<Composition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        CHECK(std::is_sorted(all.begin(), all.end()));
        for (const auto& c : all) CHECK(c.size() == n);
    }
}

TEST_CASE("weak compositions") {
    CHECK(weak_compositions(0, 0).size() == 1);
    CHECK(weak_compositions(2, 0).empty());
    CHECK(weak_compositions(2, 2) == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(weak_compositions(5, 3).size() == 21);  // binomial(7, 2)
}

TEST_CASE("partition merge and ordering") {
    Partition a{2, 1};
    Partition b{3, 2};
    CHECK(a.merged(b) == Partition{3, 2, 2, 1});
    CHECK(Partition{1, 4, 2} == Partition{4, 2, 1});  // constructor sorts
    CHECK(Partition{2, 2, 2} < Partition{4, 2});      // lexicographic on parts
    CHECK_THROWS_AS(Partition{0}, std::invalid_argument);
}
