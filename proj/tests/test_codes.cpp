#include <doctest.h>

#include <functional>

#include "mdf/codes.hpp"

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

}  // namespace

TEST_CASE("point normalization") {
    Fq F = Fq::make(5);
    auto p = normalize_point(F, {F.elem(0), F.elem(2), F.elem(3)});
    CHECK(p.pivot == 1);
    CHECK(p.coords[1] == F.one());
    auto q = normalize_point(F, {F.elem(0), F.elem(4), F.elem(1)});  // 2 * (0,2,3)
    CHECK(p == q);
    CHECK(throws_code(errc::zero_vector,
                      [&] { normalize_point(F, {F.zero(), F.zero()}); }));
}

TEST_CASE("point-set constructors and sizes") {
    CHECK(torus_pointset(Fq::make(3), 3).points.size() == 4);
    CHECK(torus_pointset(Fq::make(2, 2), 2).points.size() == 3);
    CHECK(throws_code(errc::field_too_small, [] { torus_pointset(Fq::make(2), 3); }));

    CHECK(projective_space_pointset(Fq::make(2), 3).points.size() == 7);
    CHECK(projective_space_pointset(Fq::make(3), 2).points.size() == 4);
    CHECK(projective_space_pointset(Fq::make(2), 2).points.size() == 3);

    Fq F = Fq::make(3);
    auto X = cartesian_pointset(F, {{F.elem(0), F.elem(1)}, {F.elem(0), F.elem(1), F.elem(2)}});
    CHECK(X.points.size() == 6);
    CHECK(X.s == 3);
    CHECK(throws_code(errc::empty_factor, [&] { cartesian_pointset(F, {}); }));
    CHECK(throws_code(errc::input_error,
                      [&] { cartesian_pointset(F, {{F.elem(1), F.elem(1)}}); }));

    // Duplicates collapse after normalization.
    auto Y = make_pointset(F, 2, {{F.elem(1), F.elem(2)}, {F.elem(2), F.elem(1)}});
    CHECK(Y.points.size() == 1);
}

TEST_CASE("evaluation matrix rank and Hilbert function") {
    auto T = torus_pointset(Fq::make(3), 2);
    CHECK(evaluate_matrix(T, 1).dim == 2);

    auto X = torus_pointset(Fq::make(3), 3);
    CHECK(hilbert_X(X, 0) == 1);
    CHECK(hilbert_X(X, 1) == 3);
    CHECK(reg_X(X) == 2);
}

TEST_CASE("zero counting") {
    Fq F = Fq::make(3);
    auto X = torus_pointset(F, 3);
    // t_2 - t_3 over the degree-1 basis (t_1, t_2, t_3)
    auto zc = count_zeros(X, 1, {F.elem(0), F.elem(1), F.from_int(-1)});
    CHECK(zc.zeros == 2);
    CHECK_FALSE(zc.vanishes_identically);
    CHECK(throws_code(errc::zero_polynomial,
                      [&] { count_zeros(X, 1, {F.zero(), F.zero(), F.zero()}); }));
}

TEST_CASE("minimum distance by enumeration") {
    auto X = torus_pointset(Fq::make(3), 3);
    CHECK(min_distance_enum(X, 1) == 2);
    CHECK(min_distance_enum(X, 2) == 1);
    CHECK(max_zeros_enum(X, 1) == 2);

    // Six points on the projective line over GF(7).
    Fq F7 = Fq::make(7);
    std::vector<FieldElem> A;
    for (int i = 0; i < 6; ++i) A.push_back(F7.elem(i));
    auto P = cartesian_pointset(F7, {A});
    CHECK(min_distance_enum(P, 3) == 3);
    CHECK(min_distance_enum(P, 3) == cartesian_min_distance(std::vector<long long>{6}, 3));
    CHECK(min_distance_enum(P, 7) == 1);  // past the regularity: full space

    CHECK(throws_code(errc::too_many_codewords, [&] { min_distance_enum(P, 3, 10); }));
    CHECK(min_distance_enum(P, 3, 10, true) == 3);

    auto single = make_pointset(F7, 2, {{F7.one(), F7.one()}});
    CHECK(throws_code(errc::trivial_set, [&] { min_distance_enum(single, 1); }));
}

TEST_CASE("cartesian closed forms") {
    auto L = cartesian_initial_ideal(std::vector<long long>{2, 3});
    CHECK(ideal_equal(L, minimalize(3, {{0, 2, 0}, {0, 0, 3}})));
    CHECK(ideal_equal(cartesian_initial_ideal(std::vector<long long>{1}),
                      minimalize(2, {{0, 1}})));
    CHECK(ideal_equal(cartesian_initial_ideal(std::vector<long long>{2, 2}),
                      minimalize(3, {{0, 2, 0}, {0, 0, 2}})));

    CHECK(cartesian_min_distance(std::vector<long long>{2, 2}, 1) == 2);
    Fq F = Fq::make(3);
    auto X = cartesian_pointset(F, {{F.elem(0), F.elem(1)}, {F.elem(0), F.elem(1), F.elem(2)}});
    CHECK(min_distance_enum(X, 2) == cartesian_min_distance(std::vector<long long>{2, 3}, 2));
}

TEST_CASE("uniform bound on zero counts") {
    CHECK(uniform_zero_bound(std::vector<long long>{2, 2}, 1, 4) == 2);
    CHECK(uniform_zero_bound(std::vector<long long>{1, 3, 3}, 2, 9) == 6);
    CHECK(uniform_zero_bound(std::vector<long long>{6}, 7, 6) == 5);
}

TEST_CASE("hyperplane covers") {
    // On the projective line over GF(2) a hyperplane is a single point, so
    // covering the two points other than P needs exactly two of them.
    auto X = projective_space_pointset(Fq::make(2), 2);
    auto res = min_hyperplane_cover(X, X.points[0], 3);
    REQUIRE(res.has_value());
    CHECK(*res == 2);
    CHECK(reg_X(X) == 2);

    Fq F3 = Fq::make(3);
    auto Y = cartesian_pointset(F3, {{F3.elem(0), F3.elem(1)}});
    ProjPoint outside{{F3.zero(), F3.one()}, 1};
    CHECK(throws_code(errc::point_not_in_set, [&] { min_hyperplane_cover(Y, outside, 2); }));
}

TEST_CASE("unit-point recognition") {
    Fq F = Fq::make(3);
    auto units = make_pointset(F, 3, {{F.one(), F.zero(), F.zero()},
                                      {F.zero(), F.elem(2), F.zero()}});
    CHECK(is_monomial_vanishing(units));
    auto mixed = make_pointset(F, 3, {{F.one(), F.one(), F.zero()}});
    CHECK_FALSE(is_monomial_vanishing(mixed));
}
