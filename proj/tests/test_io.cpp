#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefdt/errors.hpp"
#include "lefdt/fixtures.hpp"
#include "lefdt/homotopy.hpp"
#include "lefdt/io.hpp"
#include "lefdt/lefschetz.hpp"

using namespace lefdt;
namespace fx = lefdt::fixtures;

#ifndef LEFDT_SOURCE_DIR
#error "LEFDT_SOURCE_DIR must point at the repository root"
#endif

namespace {

const std::string kFixtureDir = std::string(LEFDT_SOURCE_DIR) + "/data/fixtures";

std::string fixture(const std::string& name) { return kFixtureDir + "/" + name; }

// Temporary file helper for loader tests.
struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path(std::string("/tmp/lefdt_io_test_") + name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("images round-trip through JSON") {
    std::vector<DigitalImage> images = {
        fx::make_point(),          fx::make_interval(0, 3),
        fx::make_grid(4, 2),       fx::make_hypercube(3),
        fx::make_cycle(7).image,   fx::make_cycle_embedded(6).image,
        fx::make_theta(),          fx::make_robot(),
    };
    for (const DigitalImage& img : images) {
        DigitalImage back = parse_image(image_to_json(img));
        CHECK(back == img);
        CHECK(back.adjacency_kind() == img.adjacency_kind());
    }
}

TEST_CASE("fixture data files stay in sync with the builders") {
    CHECK(load_image(fixture("point.json")) == fx::make_point());
    CHECK(load_image(fixture("grid_3x2.json")) == fx::make_grid(3, 2));
    CHECK(load_image(fixture("grid_4x2.json")) == fx::make_grid(4, 2));
    CHECK(load_image(fixture("theta.json")) == fx::make_theta());
    CHECK(load_image(fixture("robot.json")) == fx::make_robot());
    for (int n = 1; n <= 4; ++n)
        CHECK(load_image(fixture("hypercube_" + std::to_string(n) + ".json")) ==
              fx::make_hypercube(n));
    for (int n = 3; n <= 14; ++n)
        CHECK(load_image(fixture("cycle_" + std::to_string(n) + ".json")) ==
              fx::make_cycle(n).image);
    for (int n : {4, 6, 8})
        CHECK(load_image(fixture("cycle_embedded_" + std::to_string(n) + ".json")) ==
              fx::make_cycle_embedded(n).image);
}

TEST_CASE("map files load with relative image references") {
    DigitalMap rot = load_map(fixture("map_rot180_grid_4x2.json"));
    CHECK(rot == fx::rot180_grid(4, 2));
    CHECK(is_continuous(rot));
    CHECK(load_map(fixture("map_rot180_theta.json")) == fx::rot180_theta());
    CHECK(load_map(fixture("map_antipodal_hypercube_3.json")) == fx::antipodal(3));
    CHECK(load_map(fixture("map_flip_cycle_embedded_6.json")) ==
          fx::cycle_flip(fx::make_cycle_embedded(6)));
}

TEST_CASE("malformed image files raise parse errors") {
    CHECK_THROWS_AS(parse_image("not json at all"), ParseError);
    CHECK_THROWS_AS(parse_image("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_image(R"({"dimension": 1, "adjacency": "c1"})"), ParseError);
    CHECK_THROWS_AS(parse_image(R"({"dimension": 1, "points": [[0]]})"), ParseError);
    CHECK_THROWS_AS(
        parse_image(R"({"dimension": 1, "adjacency": "c9", "points": [[0]]})"), ParseError);
    // Wrong coordinate arity.
    CHECK_THROWS_AS(
        parse_image(R"({"dimension": 2, "adjacency": "c1", "points": [[0]]})"), ParseError);
    // Points out of order (format demands strictly increasing).
    CHECK_THROWS_AS(
        parse_image(R"({"dimension": 1, "adjacency": "c1", "points": [[1],[0]]})"), ParseError);
    // Duplicate point.
    CHECK_THROWS_AS(
        parse_image(R"({"dimension": 1, "adjacency": "c1", "points": [[0],[0]]})"), ParseError);
    // c_t out of range for the dimension.
    CHECK_THROWS_AS(
        parse_image(R"({"dimension": 1, "adjacency": "c2", "points": [[0],[1]]})"), ParseError);
    CHECK_THROWS_AS(
        parse_image(R"({"dimension": 1, "adjacency": {"ct": 0}, "points": [[0],[1]]})"),
        ParseError);
    // Explicit edge outside the point list.
    CHECK_THROWS_AS(
        parse_image(
            R"({"dimension": 1, "adjacency": {"explicit": [[0,5]]}, "points": [[0],[1]]})"),
        ParseError);
    CHECK_THROWS_AS(load_image("/tmp/lefdt_does_not_exist.json"), ParseError);
}

TEST_CASE("malformed map files raise parse errors") {
    std::string img = image_to_json(fx::make_interval(0, 1));
    TempFile image_file("img.json", img);

    auto map_text = [&](const std::string& assignment) {
        return std::string(R"({"domain": ")") + image_file.path + R"(", "codomain": ")" +
               image_file.path + R"(", "assignment": )" + assignment + "}";
    };

    {
        TempFile good("map_good.json", map_text("[[0,1],[1,0]]"));
        DigitalMap f = load_map(good.path);
        CHECK(f.assignment() == std::vector<int>{1, 0});
    }
    {
        TempFile dup("map_dup.json", map_text("[[0,1],[0,0]]"));
        CHECK_THROWS_AS(load_map(dup.path), ParseError);
    }
    {
        TempFile missing("map_missing.json", map_text("[[0,1]]"));
        CHECK_THROWS_AS(load_map(missing.path), ParseError);
    }
    {
        TempFile range("map_range.json", map_text("[[0,1],[1,7]]"));
        CHECK_THROWS_AS(load_map(range.path), ParseError);
    }
    {
        TempFile broken("map_broken.json", R"({"domain": "/tmp/lefdt_does_not_exist.json",
            "codomain": "/tmp/lefdt_does_not_exist.json", "assignment": []})");
        CHECK_THROWS_AS(load_map(broken.path), ParseError);
    }
}

TEST_CASE("report, homology, spectrum, and certificate serialization") {
    using nlohmann::json;

    SUBCASE("lefschetz report") {
        DigitalMap rot = fx::rot180_grid(4, 2);
        LefschetzReport r = cubical_lefschetz(rot);
        json j = json::parse(report_to_json(r));
        CHECK(j.at("theory") == "cubical");
        CHECK(j.at("value") == 1);
        CHECK(j.at("chainTraces") == json::array({0, 0, 1}));
        CHECK(j.at("fixedCells").is_array());
        CHECK(!j.at("fixedCells").empty());
    }

    SUBCASE("homology groups") {
        SimplicialComplex sc = build_simplicial_complex(fx::make_cycle(8).image);
        json j = json::parse(homology_to_json(homology(sc.chain)));
        REQUIRE(j.size() == 2);
        CHECK(j.at(0).at("betti") == 1);
        CHECK(j.at(1).at("betti") == 1);
        CHECK(j.at(0).at("torsion").empty());
    }

    SUBCASE("spectrum with witnesses") {
        SpectrumResult s = fixed_point_spectrum(fx::make_interval(0, 1));
        json j = json::parse(spectrum_to_json(s));
        CHECK(j.at("values") == json::array({0, 1, 2}));
        REQUIRE(j.at("witnesses").size() == 3);
        CHECK(j.at("witnesses").at(0).at("value") == 0);
        CHECK(j.at("witnesses").at(0).at("assignment").size() == 2);
    }

    SUBCASE("homotopy certificate") {
        fx::CycleFixture c4 = fx::make_cycle(4);
        auto cert =
            find_homotopy(identity_map(c4.image), constant_map(c4.image, c4.order[0]), false);
        REQUIRE(cert.has_value());
        json j = json::parse(certificate_to_json(*cert));
        CHECK(j.at("kind") == "ordinary");
        CHECK(j.at("steps").size() == 3);
        CHECK(j.at("steps").at(0) == json::array({0, 1, 2, 3}));
    }

    SUBCASE("matrix text dump") {
        IntMatrix m(2, 3);
        m.at(0, 0) = 1;
        m.at(0, 2) = -2;
        m.at(1, 1) = 5;
        CHECK(matrix_to_text(m) == "1 0 -2\n0 5 0\n");
    }
}
