#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <diosys/param_family.hpp>
#include <diosys/verify.hpp>

#include <random>

using namespace diosys;

TEST_CASE("config invariants") {
    CHECK_THROWS_AS(ParamConfig(1, 2, 2, 0), construction_error);
    CHECK_THROWS_AS(ParamConfig(0, 1, 2, 0), construction_error);
    CHECK(ParamConfig(1, 1, 2, 22).period() == 100);
    CHECK(ParamConfig(2, 1, 4, 0).period() == 1156);
}

TEST_CASE("pythagorean identity of the quartic split") {
    for (long m = 1; m <= 30; ++m)
        for (long n = m + 1; n <= 30; ++n) {
            const Integer H = 4 * Integer(n) * m * (Integer(n) * n - Integer(m) * m);
            const Integer K = Integer(m) * m * m * m - 6 * Integer(m) * m * n * n +
                              Integer(n) * n * n * n;
            const Integer A = Integer(n) * n + Integer(m) * m;
            CHECK(H * H + K * K == A * A * A * A);
        }
}

TEST_CASE("congruence_check on the worked configurations") {
    CHECK(congruence_check(ParamConfig(1, 1, 2, 22)));
    CHECK(congruence_check(ParamConfig(1, 1, 2, 26)));
    CHECK(!congruence_check(ParamConfig(1, 1, 2, 2)));
    CHECK(congruence_check(ParamConfig(2, 1, 4, 416)));
    CHECK(!congruence_check(ParamConfig(2, 1, 4, 4)));
    // normalization: shifting by the period preserves membership
    CHECK(congruence_check(ParamConfig(1, 1, 2, 122)));
    CHECK(congruence_check(ParamConfig(1, 1, 2, -78)));
}

TEST_CASE("solve_k reproduces the worked residue lists") {
    CHECK(solve_k(1, 1, 2) == std::vector<Integer>{22, 26});
    CHECK(solve_k(2, 1, 4) == std::vector<Integer>{416, 448});
    CHECK(solve_k(3, 1, 5) ==
          std::vector<Integer>{186, 486, 862, 1162, 1538, 1838, 2214, 2514});
}

TEST_CASE("ansatz equation systems hold identically at random (a,k)") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-40, 40);
    for (const auto& [m, n] : std::vector<std::pair<long, long>>{{1, 2}, {1, 4}, {2, 3}}) {
        for (int i = 0; i < 100; ++i) {
            long a = dist(rng);
            if (a == 0) a = 1;
            const long k = dist(rng);
            ParamConfig cfg(a, m, n, k);
            const auto c = coefficients(cfg);
            const Rational ra(cfg.a), rk(cfg.k);
            // system solved by (B, C, D, E, F, G)
            CHECK(c.A * c.A * c.A * c.A == 2 * c.B * (c.D - c.F));
            CHECK(2 * c.A * c.A * c.A * (ra + 2 * rk + 1) ==
                  2 * c.B * c.E - 2 * c.B * c.G + 2 * c.C * c.D - 2 * c.C * c.F);
            CHECK(c.A * c.A * (ra * ra + 6 * ra * rk + 6 * rk * rk + 3 * ra + 6 * rk + 1) ==
                  2 * c.C * c.E - 2 * c.C * c.G + c.D * c.D - c.F * c.F);
            CHECK(c.A * (ra + 2 * rk + 1) * (2 * ra * rk + 2 * rk * rk + ra + 2 * rk) ==
                  2 * c.D * c.E + c.D * ra - 2 * c.F * c.G - c.F * ra);
            CHECK(rk * (rk + 1) * (ra + rk + 1) * (ra + rk) == (c.E - c.G) * (c.E + ra + c.G));
            // system solved by (H, I, J, K, L, M)
            CHECK(c.A * c.A * c.A * c.A == c.H * c.H + c.K * c.K);
            CHECK(2 * c.A * c.A * c.A * (ra + 2 * rk + 1) == 2 * c.I * c.H + 2 * c.K * c.L);
            CHECK(c.A * c.A * (ra * ra + 6 * ra * rk + 6 * rk * rk + 3 * ra + 6 * rk + 1) ==
                  2 * c.H * c.J + c.H * ra + 2 * c.K * c.M + c.K * ra + c.L * c.L + c.I * c.I);
            CHECK(c.A * (ra + 2 * rk + 1) * (2 * ra * rk + 2 * rk * rk + ra + 2 * rk) ==
                  2 * c.I * c.J + 2 * c.L * c.M + c.L * ra + c.I * ra);
            CHECK(rk * (rk + 1) * (ra + rk + 1) * (ra + rk) ==
                  c.J * c.J + c.J * ra + c.M * c.M + c.M * ra);
        }
    }
}

TEST_CASE("worked family (a=1, m=1, n=2, k=22) matches its display") {
    // z = 8(50T+50S+11)(25T+6+25S), p = 100T+100S+22, q = p+1, etc.
    for (long S : {0L, 1L, -2L}) {
        PolySolution sol = build_family(ParamConfig(1, 1, 2, 22), S);
        for (long T : {-2L, -1L, 0L, 1L, 2L}) {
            auto tup = instantiate(sol, T);
            CHECK(tup.z == 8 * Rational(50 * T + 50 * S + 11) * (25 * T + 6 + 25 * S));
            CHECK(tup.x == Rational(9600 * T * T + (19200 * S + 4416) * T + 9600 * S * S +
                                    4416 * S + 507));
            CHECK(tup.y == Rational(-2800 * T * T - (5600 * S + 1288) * T - 2800 * S * S -
                                    1288 * S - 148));
            CHECK(tup.v == 5 * Rational(200 * T + 47 + 200 * S) * (40 * T + 9 + 40 * S) *
                               (25 * T + 6 + 25 * S));
            CHECK(tup.p == 100 * T + 100 * S + 22);
            CHECK(tup.q == 100 * T + 100 * S + 23);
            CHECK(verify_system(tup).ok());
        }
    }
}

TEST_CASE("worked family at T=0 gives the expected tuple") {
    auto tup = instantiate(build_family(ParamConfig(1, 1, 2, 22)), 0);
    CHECK(tup.z == 528);
    CHECK(tup.x == 507);
    CHECK(tup.y == -148);
    CHECK(tup.u == 12701);
    CHECK(tup.v == 12690);
    CHECK(tup.p == 22);
    CHECK(tup.q == 23);
    auto rep = verify_system(tup);
    CHECK(rep.ok());
    CHECK(rep.common_value == 279312);  // f(22) f(23) = 506 * 552
}

TEST_CASE("worked family (a=2, m=1, n=4, k=416) at T=0") {
    auto tup = instantiate(build_family(ParamConfig(2, 1, 4, 416)), 0);
    CHECK(tup.p == 416);
    CHECK(tup.q == 417);
    CHECK(tup.z == 4 * 104 * 419);
    CHECK(verify_system(tup).ok());
}

TEST_CASE("end-to-end: all worked (a,m,n) and every admissible residue") {
    const std::vector<std::tuple<long, long, long>> cases{{1, 1, 2}, {2, 1, 4}, {3, 1, 5}};
    for (const auto& [a, m, n] : cases) {
        for (const Integer& k : solve_k(a, m, n)) {
            PolySolution sol = build_family(ParamConfig(a, m, n, k));
            CHECK(sol.integral());
            CHECK(verify_identity(sol));
            CHECK(verify_system(instantiate(sol, 3)).ok());
        }
    }
}

TEST_CASE("wrong congruence class: raw build stays an identity over Q") {
    // right parity, wrong congruence: construction refuses...
    ParamConfig off(1, 1, 2, 30);
    CHECK(!congruence_check(off));
    CHECK_THROWS_AS(build_family(off), construction_error);
    // ...but the rational-coefficient family still satisfies the identities;
    // integrality is the only casualty.
    PolySolution raw = build_family_raw(off);
    CHECK(verify_identity(raw));
    CHECK(!raw.integral());
}

TEST_CASE("build_family error names the failed condition") {
    CHECK_THROWS_WITH_AS(build_family(ParamConfig(1, 1, 2, 23)),
                         doctest::Contains("parity"), construction_error);
    CHECK_THROWS_WITH_AS(build_family(ParamConfig(1, 1, 2, 2)),
                         doctest::Contains("congruence"), construction_error);
}
