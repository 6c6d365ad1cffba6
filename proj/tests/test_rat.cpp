#include "ramsey/rat.hpp"

#include <doctest.h>

using namespace ramsey;

TEST_CASE("rational parse and print") {
    CHECK(rat_parse("3/4") == rat(3, 4));
    CHECK(rat_parse("-6/8") == rat(-3, 4));
    CHECK(rat_parse("7") == 7);
    CHECK(rat_parse(" 10/17 ") == rat(10, 17));
    CHECK(rat_str(rat(10, 17)) == "10/17");
    CHECK(rat_str(rat(-4, 2)) == "-2");
    CHECK_THROWS(rat_parse("1/0"));
    CHECK_THROWS(rat_parse("a/b"));
    CHECK_THROWS(rat_parse(""));
    CHECK_THROWS(rat_parse("1/2/3"));
}

TEST_CASE("rat_decimal significant digits") {
    CHECK(rat_decimal(rat(1, 2), 17) == "0.5");
    CHECK(rat_decimal(rat(1, 3), 5) == "0.33333");
    CHECK(rat_decimal(rat(2, 3), 4) == "0.6667");
    CHECK(rat_decimal(rat(-689, 6561), 6) == "-0.105014");
    CHECK(rat_decimal(rat(0), 17) == "0");
    CHECK(rat_decimal(rat(123456), 3) == "1.23e5");
    CHECK(rat_decimal(rat(123456), 6) == "123456");
    CHECK(rat_decimal(rat(1, 143327232), 5) == "6.977e-9"); // 6.97704...e-9, trailing zero trimmed
}

TEST_CASE("rat_pow and factorial") {
    CHECK(rat_pow(rat(1, 2), 5) == rat(1, 32));
    CHECK(rat_pow(rat(3), 0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(factorial(0) == 1);
}
