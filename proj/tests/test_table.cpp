#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "phaselock/table.hpp"

using namespace phaselock;

TEST_SUITE("table") {

TEST_CASE("csv output") {
    Table t;
    t.columns = {"n", "x", "label"};
    t.add_row({(long long)3, 0.125, std::string("a,b")});
    t.add_row({(long long)-1, 1.0 / 3.0, std::string("plain")});
    std::ostringstream os;
    t.write_csv(os);
    CHECK(os.str() ==
          "n,x,label\n"
          "3,0.125,a,b\n"
          "-1,0.333333333333,plain\n");
}

TEST_CASE("json output") {
    Table t;
    t.columns = {"n", "x", "s"};
    t.add_row({(long long)2, 2.5, std::string("he\"llo")});
    std::ostringstream os;
    t.write_json(os);
    CHECK(os.str() ==
          "[\n"
          " {\"n\":2,\"x\":2.5,\"s\":\"he\\\"llo\"}\n"
          "]\n");
}

TEST_CASE("row width is enforced") {
    Table t;
    t.columns = {"a", "b"};
    CHECK_THROWS_AS(t.add_row({(long long)1}), std::invalid_argument);
}

TEST_CASE("double formatting") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(123106.060606061) == "123106.060606");
    CHECK(format_double(6.661338147e-16) == "6.661338147e-16");
}

}
