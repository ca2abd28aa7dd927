#include <doctest.h>

#include <vector>

#include "test_support.hpp"
#include "trilat/numtheory.hpp"

using namespace trilat;

namespace {

bool is_prime_oracle(i64 n) {
    if (n < 2) return false;
    for (i64 f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// existence sieve for m^2 - m*n + n^2 <= limit, independent of the
// factorization criterion
std::vector<bool> norm_value_sieve(i64 limit) {
    std::vector<bool> mark(limit + 1, false);
    for (i64 m = 0; m * m * 3 <= 4 * limit; ++m)
        for (i64 n = 0; n <= m; ++n) {
            i64 v = m * m - m * n + n * n;
            if (v <= limit) mark[v] = true;
        }
    return mark;
}

} // namespace

TEST_SUITE("numtheory") {

TEST_CASE("factorize basics") {
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).value == 1);

    auto f = factorize(3549);
    CHECK(f.factors == std::vector<PrimePower>{{3, 1}, {7, 1}, {13, 2}});

    auto g = factorize(3 * 1003 * 1003); // 1003 = 17 * 59
    CHECK(g.factors == std::vector<PrimePower>{{3, 1}, {17, 2}, {59, 2}});

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-12), std::invalid_argument);
}

TEST_CASE("factorize reconstructs its input") {
    auto check = [](i64 t) {
        auto f = factorize(t);
        i64 prod = 1;
        i64 prev = 0;
        for (const auto& [p, e] : f.factors) {
            CHECK(p > prev);
            CHECK(e >= 1);
            CHECK(is_prime_oracle(p));
            for (int i = 0; i < e; ++i) prod = checked_mul(prod, p);
            prev = p;
        }
        CHECK(prod == t);
    };
    for (i64 t = 1; t <= 3000; ++t) check(t);
    auto rng = test::make_rng();
    std::uniform_int_distribution<i64> dist(1, 10'000'000);
    for (int i = 0; i < 200; ++i) check(dist(rng));
}

TEST_CASE("eisenstein norm criterion") {
    CHECK(is_eisenstein_norm(0));
    CHECK(is_eisenstein_norm(3549)); // 3 * 7 * 13^2, no bad prime to an odd power
    CHECK_FALSE(is_eisenstein_norm(2));
    CHECK_FALSE(is_eisenstein_norm(5));
    CHECK(is_eisenstein_norm(4));
    CHECK(is_eisenstein_norm(21));
}

TEST_CASE("eisenstein norm criterion agrees with brute force up to 1e5") {
    const i64 limit = 100'000;
    auto mark = norm_value_sieve(limit);
    for (i64 t = 0; t <= limit; ++t)
        REQUIRE(is_eisenstein_norm(t) == mark[t]);
}

TEST_CASE("represent_eisenstein_norm") {
    auto one = represent_eisenstein_norm(1);
    REQUIRE(one.has_value());
    CHECK(*one == NormRepresentation{1, 0, 1});

    auto three = represent_eisenstein_norm(3);
    REQUIRE(three.has_value());
    CHECK(*three == NormRepresentation{2, 1, 3});

    CHECK_FALSE(represent_eisenstein_norm(5).has_value());
    CHECK(represent_eisenstein_norm(0) == NormRepresentation{0, 0, 0});
}

TEST_CASE("witness existence matches the criterion") {
    for (i64 t = 0; t <= 5000; ++t) {
        auto w = represent_eisenstein_norm(t);
        CHECK(w.has_value() == is_eisenstein_norm(t));
        if (w) {
            CHECK(w->m * w->m - w->m * w->n + w->n * w->n == t);
            CHECK(0 <= w->n);
            CHECK(w->n <= w->m);
        }
    }
}

TEST_CASE("quadratic form triple examples") {
    auto t2 = quadratic_form_triple(2);
    CHECK(t2.has_3x2_minus_y2);       // 3 - 1
    CHECK(t2.sum_of_two_squares);     // 1 + 1
    CHECK(t2.twice_eisenstein_norm);  // 2/2 = 1

    auto t98 = quadratic_form_triple(98);
    CHECK(t98.has_3x2_minus_y2);      // 3*49 - 49
    CHECK(t98.sum_of_two_squares);    // 49 + 49
    CHECK(t98.twice_eisenstein_norm); // 49 = 7^2

    auto t3 = quadratic_form_triple(3);
    CHECK(t3.has_3x2_minus_y2); // x=1, y=0
    CHECK_FALSE(t3.sum_of_two_squares);
    CHECK_FALSE(t3.twice_eisenstein_norm);
}

TEST_CASE("two-squares / twice-a-norm equivalence on 3x^2-y^2 values") {
    // both directions of the equivalence on every t <= 1e4 where the bounded
    // search certifies t = 3x^2 - y^2
    for (i64 t = 1; t <= 10'000; ++t) {
        auto triple = quadratic_form_triple(t, 1000);
        if (!triple.has_3x2_minus_y2) continue;
        CHECK(triple.sum_of_two_squares == triple.twice_eisenstein_norm);
    }
}

TEST_CASE("solve_rs deterministic pick for q=2") {
    auto rs = solve_rs(2, 1, 1, 1, 1);
    CHECK(rs == RsRepresentation{1, -1, 2});
}

TEST_CASE("solve_rs postconditions on the worked examples") {
    auto verify = [](i64 q, i64 a, i64 b, i64 c, i64 d) {
        auto rs = solve_rs(q, a, b, c, d);
        CHECK(rs.q == q);
        CHECK(rs.s * rs.s + 3 * rs.r * rs.r == 2 * q);
        CHECK(((rs.r ^ rs.s) & 1) == 0); // same parity
        const i64 A = a * c, B = d * b;
        CHECK((A * rs.r + B * rs.s) % (2 * q) == 0);
        CHECK((A * rs.s - 3 * B * rs.r) % (2 * q) == 0);
    };
    verify(146, 5, 11, 19, 13);
    verify(74, 5, 7, 13, 9);
}

TEST_CASE("solve_rs succeeds for every primitive class up to d=41") {
    for (i64 d = 1; d <= 41; d += 2)
        for (const auto& p : primitive_solutions(d)) {
            const i64 q = p.a * p.a + p.b * p.b;
            auto rs = solve_rs(q, p.a, p.b, p.c, p.d);
            CHECK(rs.s * rs.s + 3 * rs.r * rs.r == 2 * q);
        }
}

TEST_CASE("rs_candidates: all returned pairs satisfy the contract") {
    auto cands = rs_candidates(74, 5 * 13, 9 * 7);
    REQUIRE(!cands.empty());
    for (const auto& rs : cands) {
        CHECK(rs.s * rs.s + 3 * rs.r * rs.r == 148);
        CHECK((65 * rs.r + 63 * rs.s) % 148 == 0);
        CHECK((65 * rs.s - 3 * 63 * rs.r) % 148 == 0);
    }
    // |r| nondecreasing along the list
    for (size_t i = 1; i < cands.size(); ++i) {
        i64 prev = cands[i - 1].r < 0 ? -cands[i - 1].r : cands[i - 1].r;
        i64 cur = cands[i].r < 0 ? -cands[i].r : cands[i].r;
        CHECK(prev <= cur);
    }
}

} // TEST_SUITE

