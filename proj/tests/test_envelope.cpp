#include "doctest.h"

#include "hess/envelope.hpp"

using namespace hess;

TEST_CASE("envelope JSON round-trips byte for byte") {
    Envelope e;
    e.command = "hess deform-x";
    e.inputs["type"] = "E8";
    e.result["h0"] = 8;
    e.result["h1"] = 7;
    e.result["dim"] = json_int(Int("123456789012345678901234567890"));
    e.result["ratio"] = json_rat(Rat(3, 7));
    e.citations = {"deformation-dimensions-full-flag"};
    e.status = "ok";
    std::string once = render_json(envelope_json(e));
    std::string twice = render_json(OJson::parse(once));
    CHECK(once == twice);
}

TEST_CASE("integers render as numbers in the safe range and strings beyond") {
    CHECK(json_int(Int(42)).is_number());
    CHECK(json_int(Int(-7)).is_number());
    CHECK(json_int(Int("99999999999999999999999999")).is_string());
}

TEST_CASE("rationals render as p/q strings") {
    CHECK(json_rat(Rat(10)) == OJson("10"));
    CHECK(json_rat(Rat(1, 3)) == OJson("1/3"));
    CHECK(rat_str(Rat(-5, 10)) == "-1/2");
}

TEST_CASE("status to exit code") {
    CHECK(exit_code_for_status("ok") == 0);
    CHECK(exit_code_for_status("conjecture-report") == 0);
    CHECK(exit_code_for_status("theorem-violation") == 2);
    CHECK(exit_code_for_status("unresolved") == 1);
}
