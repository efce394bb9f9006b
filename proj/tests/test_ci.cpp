#include <doctest.h>

#include <functional>

#include "mdf/ci.hpp"

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

TEST_CASE("classification of pure-power ideals") {
    auto shape = classify_ci_dim1(minimalize(3, {{0, 2, 0}, {0, 0, 3}}));
    CHECK(shape.variant == CIVariant::case_i);
    CHECK(shape.degrees == std::vector<long long>{2, 3});
    CHECK(shape.orig_var == std::vector<int>{0, 1, 2});

    auto nine = classify_ci_dim1(minimalize(4, {{0, 1, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}}));
    CHECK(nine.variant == CIVariant::case_i);
    CHECK(nine.degrees == std::vector<long long>{1, 3, 3});
}

TEST_CASE("classification of mixed-generator ideals") {
    // (t_1^2 t_2, t_3^2): generator degrees (3, 2), normalized ascending so
    // the mixed generator lands at the top position with (c_p, c_{p+1}) = (1, 2).
    auto shape = classify_ci_dim1(minimalize(3, {{2, 1, 0}, {0, 0, 2}}));
    CHECK(shape.variant == CIVariant::case_ii);
    CHECK(shape.degrees == std::vector<long long>{2, 3});
    CHECK(shape.p == 2);
    CHECK(shape.c_p == 1);
    CHECK(shape.c_p1 == 2);
    CHECK(shape.orig_var == std::vector<int>{2, 1, 0});

    auto six = classify_ci_dim1(minimalize(3, {{0, 2, 1}, {2, 0, 0}}));
    CHECK(six.variant == CIVariant::case_ii);
    CHECK(six.degrees == std::vector<long long>{2, 3});
    CHECK(six.p == 2);
    CHECK(six.c_p == 1);
    CHECK(six.c_p1 == 2);
}

TEST_CASE("classification failures") {
    CHECK(throws_code(errc::not_dim_one,
                      [] { classify_ci_dim1(minimalize(3, {{0, 2, 0}, {0, 1, 1}})); }));
    CHECK(throws_code(errc::not_dim_one,
                      [] { classify_ci_dim1(minimalize(2, {{1, 0}, {0, 1}})); }));
    CHECK(throws_code(errc::not_complete_intersection, [] {
        classify_ci_dim1(minimalize(3, {{1, 2, 0}, {1, 0, 2}, {0, 1, 2}}));
    }));
}

TEST_CASE("k/l decomposition") {
    auto a = kl_decompose(std::vector<long long>{1, 3, 3}, 1);
    CHECK_FALSE(a.beyond_reg);
    CHECK(a.k == 1);
    CHECK(a.ell == 1);

    auto b = kl_decompose(std::vector<long long>{2, 2}, 1);
    CHECK_FALSE(b.beyond_reg);
    CHECK(b.k == 0);
    CHECK(b.ell == 1);

    CHECK(kl_decompose(std::vector<long long>{3, 3}, 4).beyond_reg);
}

TEST_CASE("pure-power degree formula") {
    CHECK(degree_case_i(std::vector<long long>{2, 3}, {0, 1, 0}) == 3);
    CHECK(degree_case_i(std::vector<long long>{3}, {0, 2}) == 2);
    CHECK(degree_case_i(std::vector<long long>{2, 3}, {7, 1, 2}) == 5);
    CHECK(throws_code(errc::precondition_violated,
                      [] { degree_case_i(std::vector<long long>{2, 3}, {1, 0, 0}); }));
    CHECK(throws_code(errc::precondition_violated,
                      [] { degree_case_i(std::vector<long long>{2, 3}, {0, 2, 0}); }));
}

TEST_CASE("mixed-generator degree formula") {
    auto shape = make_case_ii_shape(3, 1, 1, 2, {3, 2});
    CHECK(degree_case_ii(shape, {1, 0, 0}) == 2);
    CHECK(degree_case_ii(shape, {0, 1, 0}) == 2);
    CHECK(degree_case_ii(shape, {0, 2, 1}) == 5);
    CHECK(throws_code(errc::in_ideal, [&] { degree_case_ii(shape, {1, 2, 0}); }));
}

TEST_CASE("witness monomials") {
    auto shape = make_case_ii_shape(3, 1, 1, 2, {3, 2});
    CHECK(case_ii_witness(shape, 0, 1) == ExpVec{1, 0, 0});

    auto four = make_case_ii_shape(4, 2, 1, 1, {2, 2, 2});
    CHECK(case_ii_witness(four, 0, 1) == ExpVec{1, 0, 0, 0});

    CHECK(throws_code(errc::precondition_violated, [&] { case_ii_witness(shape, 0, 0); }));
}

TEST_CASE("footprint closed form") {
    std::vector<long long> nine = {1, 3, 3};
    CHECK(fp_closed_form(nine, 1) == 6);
    CHECK(fp_closed_form(nine, 2) == 3);
    CHECK(fp_closed_form(nine, 3) == 2);
    CHECK(fp_closed_form(nine, 4) == 1);

    std::vector<long long> torus = {2, 2};
    CHECK(fp_closed_form(torus, 1) == 2);
    CHECK(fp_closed_form(torus, 2) == 1);
    CHECK(fp_closed_form(torus, 5) == 1);

    CHECK(fp_closed_form(std::vector<long long>{6}, 3) == 3);
}

TEST_CASE("footprint by definition") {
    auto L = minimalize(4, {{0, 1, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}});
    CHECK(fp_bruteforce(L, 1) == 6);
    CHECK(fp_bruteforce(L, 2) == 3);
    CHECK(fp_bruteforce(L, 3) == 2);
    CHECK(fp_bruteforce(L, 4) == 1);

    auto plane = minimalize(3, {{1, 2, 0}, {1, 0, 2}, {0, 1, 2}});
    CHECK(fp_bruteforce(plane, 1) == 4);
    CHECK(fp_bruteforce(plane, 2) == 1);
    CHECK(fp_bruteforce(plane, 3) == 1);

    CHECK(fp_bruteforce(minimalize(2, {{0, 2}}), 1) == 1);
}

TEST_CASE("combinatorial inequality evaluation") {
    auto a = aug28_inequality(std::vector<long long>{2, 3}, std::vector<long long>{1, 1}, 1, 0);
    CHECK(a.lhs == 2);
    CHECK(a.rhs == 0);
    CHECK(a.holds);

    auto b = aug28_inequality(std::vector<long long>{2, 3}, std::vector<long long>{1, 1}, 1, 1);
    CHECK(b.lhs == 2);
    CHECK(b.rhs == 2);
    CHECK(b.holds);

    auto m1 = aug28_inequality(std::vector<long long>{5}, std::vector<long long>{0}, 1, 0);
    CHECK(m1.lhs == 5);
    CHECK(m1.rhs == 5);
    CHECK(m1.holds);

    CHECK(throws_code(errc::precondition_violated, [] {
        aug28_inequality(std::vector<long long>{2}, std::vector<long long>{2}, 1, 0);
    }));
}

TEST_CASE("degree and regularity of a complete intersection") {
    CHECK(ci_degree_reg(std::vector<long long>{1, 3, 3}) == std::pair<long long, long long>{9, 4});
    CHECK(ci_degree_reg(std::vector<long long>{2, 3}) == std::pair<long long, long long>{6, 3});
    CHECK(ci_degree_reg(std::vector<long long>{1, 1, 1}) == std::pair<long long, long long>{1, 0});
}
