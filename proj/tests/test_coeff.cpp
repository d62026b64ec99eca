#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "chered/field.hpp"
#include "chered/fp.hpp"
#include "chered/fq.hpp"
#include "chered/ratfunc.hpp"
#include "tests/oracles.hpp"

using namespace chered;

TEST_CASE("Fp arithmetic basics") {
    Fp a(5, 2), b(5, 4);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 3);
    CHECK((a * b).value() == 3);
    CHECK((a / b).value() == 3);  // 2 * 4^{-1} = 2 * 4 = 8 = 3
    CHECK((-b).value() == 1);
    CHECK(a.of_int(-1).value() == 4);
    CHECK_THROWS_AS(a / Fp(5, 0), DivisionByZero);
    CHECK_THROWS_AS(Fp(5, 1) + Fp(7, 1), DomainMismatch);
    CHECK_THROWS_AS(Fp(4, 1), InvalidArgument);  // 4 is not prime
}

TEST_CASE("Fp inverses over all of F_7") {
    for (uint32_t v = 1; v < 7; ++v) {
        Fp x(7, v);
        CHECK((x * x.inv()).is_one());
    }
}

TEST_CASE("weak zero combines with any domain") {
    Fp z;
    Fp a(5, 3);
    CHECK((z + a) == a);
    CHECK((a - z) == a);
    CHECK((z * a).is_zero());
    CHECK(z == Fp(7, 0));
}

TEST_CASE("RatFunc field identities") {
    uint32_t p = 5;
    RatFunc c = RatFunc::gen(p);
    CHECK((c * c.inv()).is_one());
    CHECK((c / c).is_one());
    RatFunc u = (c + c.of_int(1)) / (c - c.of_int(2));
    CHECK(((u * u.inv())).is_one());
    CHECK_THROWS_AS(c / RatFunc::zero(p), DivisionByZero);
}

TEST_CASE("RatFunc normalization cancels gcd") {
    // (c^2 - 1)/(c - 1) -> c + 1 (denominator 1)
    uint32_t p = 5;
    RatFunc c = RatFunc::gen(p);
    RatFunc r = (c * c - c.of_int(1)) / (c - c.of_int(1));
    CHECK(r.is_polynomial());
    CHECK(r == c + c.of_int(1));
    CHECK(r.str() == "c+1");
}

TEST_CASE("RatFunc normalization is canonical: equal iff identical fields") {
    uint32_t p = 3;
    RatFunc c = RatFunc::gen(p);
    RatFunc a = (c + c.of_int(1)) / (c + c.of_int(2));
    RatFunc b = ((c + c.of_int(1)) * (c + c.of_int(1))) / ((c + c.of_int(2)) * (c + c.of_int(1)));
    CHECK(a == b);
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());
    CHECK(b.den().lead() == 1);
}

TEST_CASE("binomial_c small cases") {
    CHECK(binomial_c(5, 0).is_one());
    CHECK(binomial_c(5, 1) == RatFunc::gen(5));
    // p = 5, m = 2: c(c-1)/2 = 3c^2 + 2c
    RatFunc b2 = binomial_c(5, 2);
    CHECK(b2.str() == "3c^2+2c");
    CHECK_THROWS_AS(binomial_c(5, 5), InvalidArgument);
    CHECK_THROWS_AS(binomial_c(3, 4), InvalidArgument);
}

TEST_CASE("specialize examples") {
    uint32_t p = 5;
    RatFunc c = RatFunc::gen(p);
    CHECK(specialize(c, Fp(p, 3)).value() == 3);
    CHECK(specialize(binomial_c(5, 2), Fp(5, 2)).value() == 1);  // 2*1/2 = 1
    // 1/(c+1) at c = 1 over F_2: pole
    RatFunc r = RatFunc::one(2) / (RatFunc::gen(2) + RatFunc::one(2));
    CHECK_THROWS_AS(specialize(r, Fp(2, 1)), SpecializationPole);
}

TEST_CASE("specialized binomial_c matches falling-factorial oracle") {
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        for (uint32_t m = 0; m < p; ++m) {
            RatFunc b = binomial_c(p, m);
            for (uint32_t c0 = 0; c0 < p; ++c0) {
                uint32_t expect = oracle::falling_factorial_binom(p, c0, m);
                CHECK(specialize(b, Fp(p, int64_t(c0))).value() == expect);
            }
        }
    }
}

TEST_CASE("specialization commutes with RatFunc arithmetic") {
    oracle::Rng rng(12345);
    for (uint32_t p : {3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            RatFunc a = oracle::random_ratfunc(rng, p, 3);
            RatFunc b = oracle::random_ratfunc(rng, p, 3);
            uint32_t c0 = uint32_t(rng.next() % p);
            Fp pt(p, int64_t(c0));
            try {
                Fp lhs_add = specialize(a + b, pt);
                Fp rhs_add = specialize(a, pt) + specialize(b, pt);
                CHECK(lhs_add == rhs_add);
                Fp lhs_mul = specialize(a * b, pt);
                Fp rhs_mul = specialize(a, pt) * specialize(b, pt);
                CHECK(lhs_mul == rhs_mul);
            } catch (const SpecializationPole&) {
                // a pole in either route skips the sample
            }
        }
    }
}

TEST_CASE("extension field table entries are irreducible and first in order") {
    struct Pair {
        uint32_t p, k;
    } pairs[] = {{2, 2}, {2, 3}, {2, 6}, {3, 2}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {7, 3}, {11, 2}, {13, 2}};
    for (auto [p, k] : pairs) {
        FpPoly table = irreducible_modulus(p, k);
        CHECK(is_irreducible(table));
        CHECK(table == first_irreducible_search(p, k));
    }
}

TEST_CASE("Fq field axioms on random elements") {
    oracle::Rng rng(99);
    for (auto [p, k] : {std::pair<uint32_t, uint32_t>{2, 6}, {3, 4}, {5, 3}}) {
        FqCtxPtr ctx = make_fq_ctx(p, k);
        CHECK(ctx->k == k);
        for (int trial = 0; trial < 30; ++trial) {
            Fq a = oracle::random_fq(rng, ctx);
            Fq b = oracle::random_fq(rng, ctx);
            CHECK((a + b) - b == a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("Fq rejects reducible modulus") {
    // t^2 + 1 has root 2 over F_5
    CHECK_THROWS_AS(make_fq_ctx(5, FpPoly(5, {1, 0, 1})), InvalidArgument);
}

TEST_CASE("ext_degree_for picks p^k >= 64") {
    CHECK(ext_degree_for(2) == 6);
    CHECK(ext_degree_for(3) == 4);
    CHECK(ext_degree_for(5) == 3);
    CHECK(ext_degree_for(7) == 3);
    CHECK(ext_degree_for(11) == 2);
}

TEST_CASE("specialize into Fq") {
    uint32_t p = 2;
    FqCtxPtr ctx = make_fq_ctx(p, 6);
    Fq t = Fq::gen(ctx);
    RatFunc c = RatFunc::gen(p);
    RatFunc r = (c * c + c.of_int(1)) / c;
    Fq expect = (t * t + t.of_int(1)) / t;
    CHECK(specialize(r, t) == expect);
}

TEST_CASE("binom_of matches binomial_c symbolically") {
    for (uint32_t p : {3u, 5u, 7u}) {
        RatFunc c = RatFunc::gen(p);
        for (uint32_t m = 0; m < p; ++m) CHECK(binom_of(c, m, p) == binomial_c(p, m));
    }
}
