#include <doctest.h>

#include "permident/errors.hpp"
#include "permident/sequences.hpp"

using namespace permident;

TEST_CASE("double factorial with the empty-product conventions") {
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(2) == 2);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(9) == 945);
    CHECK_THROWS_AS(double_factorial(-2), DomainError);
}

TEST_CASE("factorial, subfactorial, binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(subfactorial(0) == 1);
    CHECK(subfactorial(1) == 0);
    CHECK(subfactorial(2) == 1);
    CHECK(subfactorial(4) == 9);
    CHECK(subfactorial(8) == 14833);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(39, 19).get_str() == "68923264410");
}

TEST_CASE("Bernoulli numbers from the convolution recurrence") {
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(6) == Rat(1, 42));
    CHECK(bernoulli(8) == Rat(-1, 30));
    CHECK(bernoulli(10) == Rat(5, 66));
    CHECK_THROWS_AS(bernoulli(3), DomainError);
    CHECK_THROWS_AS(bernoulli(0), DomainError);
    CHECK_THROWS_AS(bernoulli(62), SizeGuardError);
}

TEST_CASE("tangent numbers agree across both computation paths") {
    // tangent_numbers() itself cross-checks the Bernoulli relation against
    // the triangle recurrence and throws on any disagreement.
    std::vector<BigInt> t = tangent_numbers(20);
    REQUIRE(t.size() == 20);
    CHECK(t[0] == 1);
    CHECK(t[1] == 2);
    CHECK(t[2] == 16);
    CHECK(t[3] == 272);
    CHECK(t[4] == 7936);
    CHECK(t[5] == 353792);
    for (const BigInt& v : t) CHECK(v > 0);

    CHECK(tangent_numbers(30).size() == 30);
    CHECK_THROWS_AS(tangent_numbers(31), SizeGuardError);
    CHECK_THROWS_AS(tangent_numbers(0), DomainError);
}
