#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clifftomo/f2la.hpp"
#include "oracles.hpp"

using namespace clifftomo;

namespace {

F2Mat from_rows(std::initializer_list<std::vector<int>> rows) {
    return F2Mat::from_rows(std::vector<std::vector<int>>(rows));
}

}  // namespace

TEST_CASE("F2Vec basics") {
    F2Vec v(130);
    CHECK(v.size() == 130);
    CHECK_FALSE(v.any());
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.popcount() == 3);
    CHECK(v.get(64));
    v.flip(64);
    CHECK_FALSE(v.get(64));
    CHECK(v.popcount() == 2);

    F2Vec w(130);
    w.set(0, true);
    v.xor_with(w);
    CHECK_FALSE(v.get(0));
    CHECK(v.get(129));
}

TEST_CASE("F2Vec xor with itself is zero") {
    CtrRng rng(11);
    F2Vec v(200);
    for (std::size_t i = 0; i < 200; ++i) v.set(i, rng.next_bit());
    F2Vec w = v;
    w.xor_with(v);
    CHECK_FALSE(w.any());
}

TEST_CASE("F2Vec dot, ordering, round trips") {
    F2Vec a = F2Vec::from_bits({1, 0, 1, 1});
    F2Vec b = F2Vec::from_bits({1, 1, 0, 1});
    CHECK(a.dot_count(b) == 2);  // overlap at bits 0 and 3
    CHECK_FALSE(a.dot(b));

    CHECK(a.to_string() == "1011");
    CHECK(F2Vec::parse("1011") == a);
    CHECK(a.to_uint() == 0b1101u);  // bit 0 least significant
    CHECK(F2Vec::from_uint(4, 0b1101u) == a);

    F2Vec zero(4);
    CHECK(zero < a);            // lexicographic, bit 0 first
    CHECK(F2Vec::parse("0111") < F2Vec::parse("1000"));

    CHECK(a.concat(b).to_string() == "10111101");
    CHECK(a.concat(b).slice(4, 4) == b);
    CHECK(a.concat(b).slice(1, 3) == F2Vec::from_bits({0, 1, 1}));
}

TEST_CASE("F2Vec::unit") {
    F2Vec e = F2Vec::unit(70, 65);
    CHECK(e.popcount() == 1);
    CHECK(e.get(65));
}

TEST_CASE("mat_mul examples") {
    F2Mat i2 = F2Mat::identity(2);
    CHECK(mat_mul(i2, i2) == i2);

    F2Mat upper = from_rows({{1, 1}, {0, 1}});
    CHECK(mat_mul(upper, upper) == i2);

    F2Mat lam = lambda_form(1);
    CHECK(mat_mul(lam, lam) == i2);
}

TEST_CASE("mat_mul matches naive boolean oracle on random 64x64") {
    CtrRng rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::vector<int>> a(64, std::vector<int>(64)), b = a;
        F2Mat fa(64, 64), fb(64, 64);
        for (std::size_t r = 0; r < 64; ++r)
            for (std::size_t c = 0; c < 64; ++c) {
                a[r][c] = rng.next_bit();
                b[r][c] = rng.next_bit();
                fa.set(r, c, a[r][c]);
                fb.set(r, c, b[r][c]);
            }
        auto expect = oracles::bool_mat_mul(a, b);
        F2Mat got = mat_mul(fa, fb);
        for (std::size_t r = 0; r < 64; ++r)
            for (std::size_t c = 0; c < 64; ++c) REQUIRE(got.get(r, c) == (expect[r][c] != 0));
    }
}

TEST_CASE("mat_vec") {
    F2Mat lam = lambda_form(1);
    CHECK(mat_vec(lam, F2Vec::from_bits({1, 0})) == F2Vec::from_bits({0, 1}));
}

TEST_CASE("row_reduce_signed examples") {
    SUBCASE("already reduced") {
        F2Mat i2 = F2Mat::identity(2);
        F2Vec s = F2Vec::from_bits({1, 0});
        auto [m, sgn] = row_reduce_signed(i2, s);
        CHECK(m == i2);
        CHECK(sgn == s);
    }
    SUBCASE("single elimination") {
        auto [m, sgn] = row_reduce_signed(from_rows({{1, 1}, {0, 1}}), F2Vec::from_bits({1, 0}));
        CHECK(m == F2Mat::identity(2));
        CHECK(sgn == F2Vec::from_bits({1, 0}));
    }
    SUBCASE("row swap") {
        auto [m, sgn] = row_reduce_signed(from_rows({{0, 1}, {1, 0}}), F2Vec::from_bits({0, 1}));
        CHECK(m == F2Mat::identity(2));
        CHECK(sgn == F2Vec::from_bits({1, 0}));
    }
}

TEST_CASE("row_reduce_signed is idempotent on the matrix output") {
    CtrRng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        F2Mat m(8, 12);
        F2Vec s(8);
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 12; ++c) m.set(r, c, rng.next_bit());
            s.set(r, rng.next_bit());
        }
        auto [r1, s1] = row_reduce_signed(m, s);
        auto [r2, s2] = row_reduce_signed(r1, s1);
        CHECK(r1 == r2);
        CHECK(s1 == s2);
    }
}

TEST_CASE("symplectic_check examples and n=1 exhaustive") {
    CHECK(symplectic_check(F2Mat::identity(2)));
    CHECK(symplectic_check(lambda_form(1)));
    CHECK_FALSE(symplectic_check(from_rows({{1, 1}, {1, 1}})));
    CHECK_THROWS_AS(symplectic_check(F2Mat::identity(3)), std::invalid_argument);

    // brute force over all 16 binary 2x2 matrices: exactly the 6 invertible
    // ones are symplectic
    int count = 0;
    for (int bits = 0; bits < 16; ++bits) {
        F2Mat m(2, 2);
        m.set(0, 0, bits & 1);
        m.set(0, 1, bits & 2);
        m.set(1, 0, bits & 4);
        m.set(1, 1, bits & 8);
        int det = ((bits & 1) && (bits & 8)) ^ (((bits >> 1) & 1) && ((bits >> 2) & 1));
        CHECK(symplectic_check(m) == (det == 1));
        if (symplectic_check(m)) ++count;
    }
    CHECK(count == 6);
}

TEST_CASE("symplectic inverse examples") {
    CHECK(SymplecticMat::identity(3).inverse() == SymplecticMat::identity(3));
    SymplecticMat h{lambda_form(1)};
    CHECK(h.inverse() == h);
    SymplecticMat s{from_rows({{1, 1}, {0, 1}})};
    CHECK(s.inverse() == s);
}

TEST_CASE("SymplecticMat rejects non-symplectic input") {
    CHECK_THROWS_AS(SymplecticMat(from_rows({{1, 1}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("inverse properties on random draws") {
    CtrRng rng(7);
    for (std::size_t n : {1u, 2u, 3u, 5u, 9u}) {
        for (int trial = 0; trial < 10; ++trial) {
            SymplecticMat s = random_symplectic(n, rng);
            CHECK(symplectic_check(s.mat()));
            CHECK(mat_mul(s.inverse().mat(), s.mat()) == F2Mat::identity(2 * n));
            CHECK(s.inverse().inverse() == s);
        }
    }
}

TEST_CASE("random_symplectic n=1: six elements, chi-square uniform") {
    CtrRng rng(2024);
    std::map<std::string, int> freq;
    for (int draw = 0; draw < 6000; ++draw) ++freq[random_symplectic(1, rng).mat().to_string()];
    CHECK(freq.size() == 6);
    // each count ~ Bin(6000, 1/6): sigma = sqrt(6000 * 1/6 * 5/6) ~ 28.9
    double sigma = std::sqrt(6000.0 * (1.0 / 6.0) * (5.0 / 6.0));
    for (auto& [key, count] : freq) CHECK(std::abs(count - 1000.0) <= 5.0 * sigma);
}

TEST_CASE("matrix text format round trip with sign column") {
    F2Mat m = from_rows({{1, 0, 1}, {0, 1, 1}});
    std::string txt = m.to_string();
    CHECK(F2Mat::parse(txt) == m);
    // a reduced tableau with sign column parses back too
    CHECK(F2Mat::parse("10|1\n01|0") == F2Mat::parse("10\n01"));
}
