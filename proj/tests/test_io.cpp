#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "mdf/io.hpp"
#include "mdf/suites.hpp"

using namespace mdf;

namespace {

bool throws_code(errc expected, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == expected;
    }
    return false;
}

std::string write_temp(const std::string& name, const std::string& content) {
    auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("field spec parsing") {
    CHECK(parse_field_spec("3").q() == 3);
    CHECK(parse_field_spec("2^2").q() == 4);
    CHECK(parse_field_spec("2^4").q() == 16);
    CHECK(throws_code(errc::input_error, [] { parse_field_spec("abc"); }));
    CHECK(throws_code(errc::not_prime, [] { parse_field_spec("6"); }));
}

TEST_CASE("ideal files") {
    auto path = write_temp("io_ideal.txt", "# comment\ns=3\n0 2 1\n2 0 0\n");
    auto L = load_ideal(path);
    CHECK(L.s == 3);
    CHECK(ideal_equal(L, minimalize(3, {{0, 2, 1}, {2, 0, 0}})));
    auto bad = write_temp("io_ideal_bad.txt", "s=3\n0 -1 0\n");
    CHECK(throws_code(errc::input_error, [&] { load_ideal(bad); }));
    CHECK(throws_code(errc::input_error, [] { load_ideal("/nonexistent/file"); }));
}

TEST_CASE("point files") {
    auto path = write_temp("io_points.txt", "q=3 s=3\n1 1 0\n1 2 0\n2 2 0\n");
    auto X = load_points(path);
    CHECK(X.s == 3);
    CHECK(X.points.size() == 2);  // (1,2,0) and (2,2,0)=2*(1,1,0) collapse

    auto cart = write_temp("io_cart.txt", "cartesian q=3 A2={0,1} A3={0,1,2}\n");
    CHECK(load_points(cart).points.size() == 6);

    auto bad = write_temp("io_points_bad.txt", "q=3 s=2\n1 7\n");
    CHECK(throws_code(errc::input_error, [&] { load_points(bad); }));
}

TEST_CASE("cartesian specs") {
    auto spec = parse_cartesian_spec("cartesian q=2^2 A2={0,1,2} A3={1,3}");
    CHECK(spec.F.q() == 4);
    CHECK(spec.sizes() == std::vector<long long>{3, 2});
    CHECK(spec.pointset().points.size() == 6);
    CHECK(throws_code(errc::input_error, [] { parse_cartesian_spec("q=3 A2={0}"); }));
    CHECK(throws_code(errc::empty_factor, [] { parse_cartesian_spec("cartesian q=3"); }));
}

TEST_CASE("csv and json tables carry identical numbers") {
    Fq F = Fq::make(3);
    auto X = cartesian_pointset(F, {{F.elem(0), F.elem(1)}, {F.elem(0), F.elem(1), F.elem(2)}});
    auto L = cartesian_initial_ideal(std::vector<long long>{2, 3});
    auto rows = parameter_table(X, &L, 1, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].delta == 3);
    CHECK(rows[0].fp == 3);

    auto parsed = nlohmann::json::parse(to_json(rows));
    std::istringstream csv(to_csv(rows));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "d,length,dimension,delta,fp,regularity,degree");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string line;
        REQUIRE(std::getline(csv, line));
        std::ostringstream expect;
        expect << parsed[i]["d"].get<long long>() << ',' << parsed[i]["length"].get<long long>()
               << ',' << parsed[i]["dimension"].get<long long>() << ','
               << parsed[i]["delta"].get<long long>() << ',' << parsed[i]["fp"].get<long long>()
               << ',' << parsed[i]["regularity"].get<long long>() << ','
               << parsed[i]["degree"].get<long long>();
        CHECK(line == expect.str());
    }

    // Deterministic output for a fixed input.
    CHECK(to_csv(rows) == to_csv(parameter_table(X, &L, 1, 3)));
    CHECK(to_json(rows) == to_json(parameter_table(X, &L, 1, 3)));
}
