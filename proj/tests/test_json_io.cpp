#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"
#include "twistcs/json_io.hpp"
#include "twistcs/twistgen.hpp"

using namespace twistcs;
using testutil::make_poly;

TEST_CASE("JSON round-trip is exact") {
    for (long n : {1L, -2L, 4L, -5L}) {
        BiPoly a = apoly_recursive(n).poly;
        CHECK(bipoly_from_json(bipoly_to_json(a)) == a);
        BiPoly p = pdist_recursive(n).poly;
        CHECK(bipoly_from_json(bipoly_to_json(p)) == p);
    }
    // Coefficients beyond 64 bits survive the string representation.
    BiPoly big = BiPoly::zero("x", "y");
    big.set_term(1, 2, BigInt(1) << 200);
    BigInt seven80;
    mpz_pow_ui(seven80.get_mpz_t(), BigInt(7).get_mpz_t(), 80);
    big.set_term(0, 0, -seven80);
    CHECK(bipoly_from_json(bipoly_to_json(big)) == big);
}

TEST_CASE("JSON schema shape") {
    nlohmann::json j = nlohmann::json::parse(bipoly_to_json(apoly_recursive(1).poly));
    CHECK(j["vars"] == nlohmann::json({"L", "M"}));
    REQUIRE(j["terms"].is_array());
    REQUIRE(j["terms"].size() == 7);
    // Terms ascending by (exponent1, exponent2); coefficients are strings.
    CHECK(j["terms"][0] == nlohmann::json({0, 4, "-1"}));
    CHECK(j["terms"][1] == nlohmann::json({1, 0, "1"}));
    CHECK(j["terms"][6] == nlohmann::json({2, 4, "-1"}));
}

TEST_CASE("malformed JSON documents are rejected") {
    CHECK_THROWS_AS(bipoly_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(bipoly_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(bipoly_from_json(R"({"vars":["x"],"terms":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(bipoly_from_json(R"({"vars":["x","y"],"terms":[[0,0]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        bipoly_from_json(R"({"vars":["x","y"],"terms":[[0,0,"1"],[0,0,"2"]]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        bipoly_from_json(R"({"vars":["x","y"],"terms":[[0,0,1.5]]})"),
        std::invalid_argument);
}

TEST_CASE("pinned text renderings") {
    CHECK(render_apoly(apoly_recursive(-1).poly) == "1 + L*M^6");
    CHECK(render_apoly(apoly_recursive(0).poly) == "-1");
    CHECK(render_apoly(apoly_recursive(1).poly) ==
          "L - L*M^2 - M^4 - 2*L*M^4 - L^2*M^4 - L*M^6 + L*M^8");
    CHECK(render_apoly(apoly_u()) ==
          "1 - L + 2*L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + 2*L*M^6 - L*M^8 + L^2*M^8");

    CHECK(render_pdist(pdist_recursive(-1).poly) == "(2*B^2-2)*V + 2*B^2-1");
    CHECK(render_pdist(pdist_recursive(0).poly) == "1");
    CHECK(render_pdist(pdist_recursive(1).poly) ==
          "(4*B^4-8*B^2+4)*V^2 + (2-2*B^2)*V -4*B^4+6*B^2-1");
    CHECK(render_pdist(BiPoly::zero("V", "B")) == "0");
}

TEST_CASE("polygon JSON for the n=1 diamond") {
    nlohmann::json j =
        nlohmann::json::parse(polygon_to_json(apoly_recursive(1).poly));
    CHECK(j["vertices"] ==
          nlohmann::json({{0, 4}, {1, 0}, {2, 4}, {1, 8}}));
    REQUIRE(j["edges"].size() == 4);
    CHECK(j["edges"][0]["slope"] == "-4");
    CHECK(j["edges"][0]["poly_t"] == nlohmann::json({-1, 1}));
    CHECK(j["edges"][1]["slope"] == "4");
}

TEST_CASE("branch CSV layout") {
    QuadratureSpec q;
    q.intervals_h = 40;
    q.intervals_s = 8;
    CsSamples s = cs_samples(2, 1.0, q);
    std::string csv = branch_csv(s);
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    // header + (Nh + 1) hyperbolic samples + Ns spherical samples
    CHECK(lines == 1 + 41 + 8);
    CHECK(csv.rfind("alpha,re_v,im_v,re_v1,im_v1,re_v2,im_v2,integrand\n", 0) == 0);
    // First data row starts at alpha_lo = 1.
    CHECK(csv.find("\n1,") != std::string::npos);
}
