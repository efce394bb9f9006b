#include <doctest.h>

#include <functional>

#include "mdf/ff.hpp"

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

TEST_CASE("prime field arithmetic") {
    Fq F3 = Fq::make(3);
    CHECK(F3.add(F3.elem(2), F3.elem(2)) == F3.elem(1));
    CHECK(F3.mul(F3.elem(2), F3.elem(2)) == F3.elem(1));
    CHECK(F3.inv(F3.elem(2)) == F3.elem(2));

    Fq F2 = Fq::make(2);
    CHECK(F2.add(F2.one(), F2.one()) == F2.zero());

    Fq F5 = Fq::make(5);
    CHECK(F5.pow(F5.elem(2), 4) == F5.one());
    CHECK(F5.from_int(-1) == F5.elem(4));
    CHECK(F5.from_int(7) == F5.elem(2));
}

TEST_CASE("quartic field via explicit and default modulus") {
    // x^2 + x + 1 is the only irreducible quadratic over GF(2); x * x = x + 1.
    Fq F4 = Fq::make(2, 2, {1, 1, 1});
    FieldElem x = F4.elem(2);
    CHECK(F4.mul(x, x) == F4.elem(3));
    CHECK(F4.add(x, x) == F4.zero());
    CHECK(Fq::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("construction failures") {
    CHECK(throws_code(errc::not_prime, [] { Fq::make(4); }));
    CHECK(throws_code(errc::not_prime, [] { Fq::make(1); }));
    // x^2 + 1 = (x + 1)^2 over GF(2)
    CHECK(throws_code(errc::reducible_modulus, [] { Fq::make(2, 2, {1, 0, 1}); }));
    CHECK(throws_code(errc::unsupported_order, [] { Fq::make(2, 7); }));
    CHECK(throws_code(errc::division_by_zero, [] { Fq::make(3).inv(Fq::make(3).zero()); }));
}

TEST_CASE("largest default-modulus field") {
    Fq F = Fq::make(2, 6);
    CHECK(F.q() == 64);
    CHECK(F.elements().size() == 64);
    for (std::uint64_t i = 1; i < 64; i += 13) CHECK(F.pow(F.elem(i), 63) == F.one());
}

TEST_CASE("field axioms hold exhaustively for small q") {
    std::vector<Fq> fields = {Fq::make(2),    Fq::make(3),    Fq::make(2, 2), Fq::make(5),
                              Fq::make(7),    Fq::make(2, 3), Fq::make(3, 2), Fq::make(13),
                              Fq::make(2, 4)};
    for (const Fq& F : fields) {
        auto all = F.elements();
        REQUIRE(all.size() == F.q());
        for (auto a : all) {
            CHECK(F.add(a, F.zero()) == a);
            CHECK(F.mul(a, F.one()) == a);
            CHECK(F.add(a, F.neg(a)) == F.zero());
            if (a.index != 0) {
                CHECK(F.mul(a, F.inv(a)) == F.one());
                CHECK(F.pow(a, F.q() - 1) == F.one());
            }
            for (auto b : all) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (auto c : all) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}
