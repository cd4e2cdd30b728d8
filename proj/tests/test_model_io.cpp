#include "slopepanel/errors.hpp"
#include "slopepanel/model_io.hpp"

#include <doctest.h>

using namespace slopepanel;
using nlohmann::json;

namespace {

std::string fixture(const char* name) { return std::string(SLOPEPANEL_FIXTURE_DIR) + "/" + name; }

ErrorKind error_of(const json& doc) {
    try {
        parse_model(doc);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::ParseError;
}

json base_doc() {
    auto doc = to_json(toy_rho2());
    doc["counting"] = json::parse(R"({"q_num": 2, "q_den": 1, "br": 1, "M": 1, "beta": [0, 0],
        "outside_xi": 0, "eps": {"c_num": 1, "c_den": 1, "p_num": 1, "p_den": 2},
        "delta_num": 1, "delta_den": 10})");
    return doc;
}

}  // namespace

TEST_CASE("fixtures match the builders") {
    CHECK(load_model(fixture("pbundle.json")).model == pbundle(3, 2, {3, 0, 0}));
    CHECK(load_model(fixture("toy_rho1.json")).model == toy_rho1(1, 2));
    CHECK(load_model(fixture("toy_rho2.json")).model == toy_rho2());
}

TEST_CASE("round trip") {
    for (const auto& model : {pbundle(3, 2, {3, 0, 0}), toy_rho1(2, 3), toy_rho2()}) {
        CHECK(parse_model(to_json(model)).model == model);
    }
    const auto file = load_model(fixture("toy_rho2.json"));
    REQUIRE(file.counting);
    CHECK(file.counting->q == 2);
    CHECK(file.counting->delta == Rational(1, 10));
    CHECK(file.counting->outside_xi == 0);
    auto doc = to_json(file.model);
    doc["counting"] = to_json(*file.counting);
    const auto again = parse_model(doc);
    REQUIRE(again.counting);
    CHECK(to_json(*again.counting) == to_json(*file.counting));
}

TEST_CASE("eps tables parse") {
    auto doc = base_doc();
    doc["counting"]["eps"] = json::parse(R"({"table": [[1, 1, 2], [10, 1, 4]]})");
    const auto file = parse_model(doc);
    REQUIRE(file.counting);
    CHECK(file.counting->eps.describe(12) == "1/4");
    CHECK(to_json(*file.counting)["eps"] == doc["counting"]["eps"]);

    doc["counting"]["eps"] = json::parse(R"({"table": [[1, 1, 4], [10, 1, 2]]})");
    CHECK(error_of(doc) == ErrorKind::InvalidConfig);
    doc["counting"]["eps"] = json::parse(R"({"table": [[1, 1]]})");
    CHECK(error_of(doc) == ErrorKind::InvalidConfig);
}

TEST_CASE("malformed documents") {
    auto doc = base_doc();
    doc["extra"] = 1;
    CHECK(error_of(doc) == ErrorKind::InvalidModel);

    doc = base_doc();
    doc.erase("minusK");
    CHECK(error_of(doc) == ErrorKind::InvalidModel);

    doc = base_doc();
    doc["nef"]["cone"] = json::array();
    CHECK(error_of(doc) == ErrorKind::InvalidModel);

    doc = base_doc();
    doc["chambers"][0]["filtration"][0]["weight"] = 1;
    CHECK(error_of(doc) == ErrorKind::InvalidModel);

    doc = base_doc();
    doc["chambers"][0]["filtration"][0]["slope_den"] = 0;
    CHECK(error_of(doc) == ErrorKind::InvalidModel);

    doc = base_doc();
    doc["minusK"] = {1, 1, 1};
    CHECK(error_of(doc) == ErrorKind::InvalidModel);

    doc = base_doc();
    doc["dim"] = "two";
    CHECK(error_of(doc) == ErrorKind::InvalidModel);

    doc = base_doc();
    doc["counting"]["gamma"] = 1;
    CHECK(error_of(doc) == ErrorKind::InvalidConfig);

    doc = base_doc();
    doc["counting"]["br"] = 3;
    CHECK(error_of(doc) == ErrorKind::InvalidConfig);

    doc = base_doc();
    doc["counting"]["beta"] = {0};
    CHECK(error_of(doc) == ErrorKind::InvalidConfig);

    CHECK_THROWS_AS(parse_model_text("{\"dim\": "), Error);
    try {
        parse_model_text("{\"dim\": ");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
    CHECK_THROWS_AS(load_model(fixture("missing.json")), Error);
}
