#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

#include "csf/symfunc.hpp"

using namespace csf;

namespace {

SymFunc e_lambda(std::initializer_list<int> parts) {
    return SymFunc::unit(Basis::elementary, Partition(parts));
}

// Random homogeneous function for property tests.
SymFunc random_symfunc(std::mt19937& rng, Basis basis, int degree) {
    SymFunc f(basis, degree);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for_each_composition(degree, [&](const Composition& I) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0)
            f.add_term(rho(I), Rational(coeff(rng)));
    });
    return f;
}

}  // namespace

// Runs first, while the conversion memo is cold: concurrent first-time use
// must produce correct expansions.
TEST_CASE("p_to_e is safe under concurrent first use") {
    std::vector<std::thread> threads;
    std::atomic<int> bad{0};
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] {
            for (int k = 1 + t % 3; k <= 13; ++k) {
                SymFunc e = p_to_e(SymFunc::p(k));
                for (int j = 0; j <= 4; ++j)
                    if (principal_eval(e, j) != Rational(j)) ++bad;
            }
        });
    for (auto& th : threads) th.join();
    CHECK(bad == 0);
}

TEST_CASE("basis units and the constant one") {
    CHECK(SymFunc::e(0) == SymFunc::one(Basis::elementary));
    CHECK(SymFunc::e(0).degree() == 0);
    CHECK(SymFunc::e(2).coeff(Partition{2}) == Rational(1));
    CHECK_THROWS_AS(SymFunc::p(0), std::invalid_argument);
}

TEST_CASE("multiplication is multiset union of partitions") {
    CHECK(SymFunc::e(2) * SymFunc::e(1) == e_lambda({2, 1}));
    CHECK(SymFunc::e(3).scale(Rational(3)).scale(Rational(2)) == SymFunc::e(3).scale(Rational(6)));
    SymFunc lhs = (SymFunc::e(2) + e_lambda({1, 1})) * SymFunc::e(1);
    CHECK(lhs == e_lambda({2, 1}) + e_lambda({1, 1, 1}));
}

TEST_CASE("degree and basis mixing are rejected") {
    CHECK_THROWS_AS(SymFunc::e(2) + SymFunc::e(3), std::invalid_argument);
    CHECK_THROWS_AS(SymFunc::e(2) + SymFunc::p(2), std::invalid_argument);
    CHECK_THROWS_AS(SymFunc::e(2) * SymFunc::p(2), std::invalid_argument);
    SymFunc f(Basis::elementary, 2);
    CHECK_THROWS_AS(f.add_term(Partition{3}, Rational(1)), std::invalid_argument);
}

TEST_CASE("zero coefficients are dropped") {
    SymFunc f = SymFunc::e(2) - SymFunc::e(2);
    CHECK(f.is_zero());
    CHECK(f.terms().empty());
}

TEST_CASE("sf_mul randomized commutativity and associativity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        SymFunc a = random_symfunc(rng, Basis::elementary, 2 + trial % 3);
        SymFunc b = random_symfunc(rng, Basis::elementary, 1 + trial % 2);
        SymFunc c = random_symfunc(rng, Basis::elementary, 2);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("p_to_e base cases match the Newton recurrence") {
    CHECK(p_to_e(SymFunc::p(1)) == SymFunc::e(1));
    SymFunc p2 = p_to_e(SymFunc::p(2));
    CHECK(p2.coeff(Partition{1, 1}) == Rational(1));
    CHECK(p2.coeff(Partition{2}) == Rational(-2));
    SymFunc p3 = p_to_e(SymFunc::p(3));
    CHECK(p3.coeff(Partition{1, 1, 1}) == Rational(1));
    CHECK(p3.coeff(Partition{2, 1}) == Rational(-3));
    CHECK(p3.coeff(Partition{3}) == Rational(3));
    CHECK_THROWS_AS(p_to_e(SymFunc::e(2)), std::invalid_argument);
}

TEST_CASE("principal specialization") {
    CHECK(principal_eval(SymFunc::e(2), 4) == Rational(6));
    CHECK(principal_eval(SymFunc::e(3).scale(Rational(6)), 3) == Rational(6));
    CHECK(principal_eval(SymFunc::unit(Basis::power_sum, Partition{2, 1}), 5) == Rational(25));
    CHECK(principal_eval(SymFunc::one(Basis::elementary), 0) == Rational(1));
}

TEST_CASE("p_to_e preserves principal specialization") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 15; ++trial) {
        SymFunc f = random_symfunc(rng, Basis::power_sum, 1 + trial % 5);
        SymFunc g = p_to_e(f);
        for (int k = 0; k <= 6; ++k) CHECK(principal_eval(f, k) == principal_eval(g, k));
    }
}

TEST_CASE("e-positivity witness picks the first partition in display order") {
    SymFunc f(Basis::elementary, 6);
    f.add_term(Partition{6}, Rational(18));
    f.add_term(Partition{4, 2}, Rational(-2));
    f.add_term(Partition{2, 2, 2}, Rational(-2));
    auto w = is_e_positive(f);
    CHECK_FALSE(w.positive);
    CHECK(w.partition == Partition{4, 2});
    CHECK(w.coefficient == Rational(-2));
    CHECK(is_e_positive(SymFunc::e(3).scale(Rational(6))).positive);
    CHECK(is_e_positive(SymFunc(Basis::elementary, 4)).positive);
    CHECK_THROWS_AS(is_e_positive(SymFunc::p(2)), std::invalid_argument);
}

TEST_CASE("expansion flattening groups by sorted parts") {
    CompositionExpansion x(3);
    x.add_term(Composition{2, 1}, Rational(1));
    x.add_term(Composition{1, 2}, Rational(2));
    SymFunc f = x.flatten();
    CHECK(f.coeff(Partition{2, 1}) == Rational(3));
    CHECK(CompositionExpansion(0).flatten() == SymFunc(Basis::elementary, 0));

    CompositionExpansion y(7);
    y.add_term(Composition{1, 4, 2}, Rational(24));
    y.add_term(Composition{1, 2, 4}, Rational(2));
    CHECK(y.flatten().coeff(Partition{4, 2, 1}) == Rational(26));
}

TEST_CASE("expansion flattening is linear") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        CompositionExpansion a(5), b(5);
        for_each_composition(5, [&](const Composition& I) {
            a.add_term(I, Rational(coeff(rng)));
            b.add_term(I, Rational(coeff(rng)));
        });
        CompositionExpansion sum = a;
        sum += b;
        CHECK(sum.flatten() == a.flatten() + b.flatten());
    }
}

TEST_CASE("expansion positivity predicate") {
    CompositionExpansion x(3);
    x.add_term(Composition{2, 1}, Rational(2));
    CHECK(x.is_positive());
    x.add_term(Composition{3}, Rational(-1));
    Composition offending;
    Rational c;
    CHECK_FALSE(x.is_positive(&offending, &c));
    CHECK(offending == Composition{3});
    CHECK(c == Rational(-1));
}
