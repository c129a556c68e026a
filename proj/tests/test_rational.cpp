#include <doctest.h>

#include "qprob/error.hpp"
#include "qprob/rational.hpp"

using namespace qprob;

TEST_CASE("parse_rational reduces to lowest terms") {
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK(format_rational(parse_rational("0/7")) == "0");
  CHECK(format_rational(parse_rational("5")) == "5");
  CHECK(format_rational(parse_rational("-12")) == "-12");
}

TEST_CASE("parse_rational round-trips through format_rational") {
  for (const char* text : {"0", "1", "-1", "3/7", "-22/7", "100000001/3"}) {
    CHECK(format_rational(parse_rational(text)) == text);
  }
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* text : {"", "/", "1/", "/2", "1/0", "1/-2", "a", "1.5", "1 / 2", "+3", "--3"}) {
    CHECK_THROWS_AS(parse_rational(text), ParseError);
  }
}

TEST_CASE("sign_of matches the usual trichotomy") {
  CHECK(sign_of(parse_rational("3/5")) == 1);
  CHECK(sign_of(parse_rational("-3/5")) == -1);
  CHECK(sign_of(parse_rational("0")) == 0);
}
