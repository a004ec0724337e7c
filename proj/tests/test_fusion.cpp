#include <doctest.h>

#include <cmath>
#include <numbers>

#include "surfhom/fusion_data.hpp"

using namespace surfhom;

TEST_CASE("trivial category") {
    FusionData fd = builtin_category("trivial");
    CHECK(fd.rank() == 1);
    CHECK(fd.qdim[0] == doctest::Approx(1.0));
    CHECK(std::abs(fd.twist[0] - cplx(1.0)) < kEntryTol);
    auto rep = fd.verify();
    CHECK(rep.pass());
    CHECK(rep.max_residual() == 0.0);
}

TEST_CASE("Fibonacci: dimensions, twist, coherence") {
    FusionData fd = builtin_category("fib");
    int tau = fd.index_of("tau");

    // Perron-Frobenius eigenvalue of [[0,1],[1,1]] is the golden ratio.
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(fd.qdim[tau] == doctest::Approx(phi).epsilon(1e-12));
    CHECK(fd.qdim[tau] == doctest::Approx(1.6180339887).epsilon(1e-9));

    // Twist from the stated sum over the fixture R-symbols.
    cplx expected = (1.0 / phi) * fd.R(tau, tau, fd.unit) + fd.R(tau, tau, tau);
    CHECK(std::abs(fd.twist[tau] - expected) < kEntryTol);
    CHECK(std::abs(fd.twist[tau] - std::polar(1.0, 4.0 * std::numbers::pi / 5.0)) < kEntryTol);

    auto rep = fd.verify();
    INFO("max residual ", rep.max_residual());
    CHECK(rep.pass());
    CHECK(rep.residual_of("pentagon") < 1e-10);
    CHECK(rep.residual_of("hexagon_forward") < 1e-10);
    CHECK(rep.residual_of("hexagon_inverse") < 1e-10);

    // Global dimension recomputed from loaded data.
    CHECK(fd.global_dim() == doctest::Approx((5.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-8));
}

TEST_CASE("Ising: dimensions and coherence") {
    FusionData fd = builtin_category("ising");
    int sigma = fd.index_of("sigma");
    CHECK(fd.qdim[sigma] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(fd.qdim[sigma] == doctest::Approx(1.4142135624).epsilon(1e-9));

    auto rep = fd.verify();
    INFO("max residual ", rep.max_residual());
    CHECK(rep.pass());
    CHECK(fd.global_dim() == doctest::Approx(4.0).epsilon(1e-8));

    int psi = fd.index_of("psi");
    CHECK(std::abs(fd.twist[psi] - cplx(-1.0)) < kEntryTol);
    CHECK(std::abs(fd.twist[sigma] - std::polar(1.0, std::numbers::pi / 8.0)) < kEntryTol);
}

TEST_CASE("pointed categories") {
    FusionData z2 = builtin_category("pointed:2:0");
    CHECK(z2.rank() == 2);
    for (double d : z2.qdim) CHECK(d == doctest::Approx(1.0));
    CHECK(std::abs(z2.twist[1] - cplx(1.0)) < kEntryTol);  // symmetric braiding c = +1
    CHECK(z2.verify().pass());

    FusionData super = builtin_category("pointed:2:1/2");
    CHECK(std::abs(super.twist[1] - cplx(-1.0)) < kEntryTol);
    CHECK(super.verify().pass());

    FusionData z4 = builtin_category("pointed:4:1/4");
    CHECK(z4.rank() == 4);
    CHECK(std::abs(z4.twist[1] - cplx(0.0, 1.0)) < kEntryTol);
    CHECK(z4.verify().pass());
    CHECK(z4.global_dim() == doctest::Approx(4.0));

    FusionData z22 = builtin_category("pointed:2,2:0,0;0,0");
    CHECK(z22.rank() == 4);
    CHECK(z22.verify().pass());

    CHECK_THROWS_AS(builtin_category("pointed:2:1/3"), fusion_error);
}

TEST_CASE("perturbed Ising F-symbol fails the pentagon") {
    FusionData fd = builtin_category("ising");
    int s = fd.index_of("sigma");
    auto key = detail::fkey(s, s, s, s, fd.unit, fd.unit);
    fd.f_symbols[key] += 1e-3;
    auto rep = fd.verify();
    CHECK_FALSE(rep.pass());
    CHECK(rep.residual_of("pentagon") >= 1e-4);
}

TEST_CASE("loader rejects malformed documents") {
    CHECK_THROWS_AS(load_category("not json at all"), fusion_error);

    // dual points at a label that does not exist
    std::string bad_dual = R"({
      "simples": ["1","a"], "unit": "1",
      "dual": {"1":"1","a":"b"},
      "fusion": [["a","a","1",1]]
    })";
    try {
        load_category(bad_dual);
        CHECK(false);
    } catch (const fusion_error& e) {
        CHECK(std::string(e.what()).find("b") != std::string::npos);
    }

    // fusion tensor not unit-compatible
    std::string bad_unit = R"({
      "simples": ["1","a"], "unit": "1",
      "dual": {"1":"1","a":"a"},
      "fusion": [["a","a","1",1],["a","1","1",1]]
    })";
    CHECK_THROWS_AS(load_category(bad_unit), fusion_error);

    // declared qdim disagreeing with the derived value
    std::string bad_qdim = R"({
      "simples": ["1","a"], "unit": "1",
      "dual": {"1":"1","a":"a"},
      "fusion": [["a","a","1",1]],
      "qdim": {"a": 2.0}
    })";
    CHECK_THROWS_AS(load_category(bad_qdim), fusion_error);
}

TEST_CASE("fusion ring invariants across fixtures") {
    for (const char* name : {"trivial", "fib", "ising", "pointed:2:0", "pointed:4:1/4"}) {
        FusionData fd = builtin_category(name);
        const int r = fd.rank();
        for (int a = 0; a < r; ++a) {
            CHECK(fd.dual[fd.dual[a]] == a);
            for (int b = 0; b < r; ++b) {
                double lhs = fd.qdim[a] * fd.qdim[b], rhs = 0;
                for (int c = 0; c < r; ++c) rhs += fd.N(a, b, c) * fd.qdim[c];
                CHECK(std::abs(lhs - rhs) < kEntryTol);
                for (int c = 0; c < r; ++c)
                    for (int d = 0; d < r; ++d) {
                        long l1 = 0, l2 = 0;
                        for (int e = 0; e < r; ++e) l1 += fd.N(a, b, e) * fd.N(e, c, d);
                        for (int f = 0; f < r; ++f) l2 += fd.N(b, c, f) * fd.N(a, f, d);
                        CHECK(l1 == l2);
                    }
            }
        }
        CHECK(fd.verify().pass());
    }
}

TEST_CASE("verification sweeps are deterministic across thread counts") {
    FusionData fd = builtin_category("ising");
    auto r1 = fd.verify(1);
    auto r4 = fd.verify(4);
    REQUIRE(r1.entries.size() == r4.entries.size());
    for (size_t i = 0; i < r1.entries.size(); ++i) {
        CHECK(r1.entries[i].name == r4.entries[i].name);
        CHECK(r1.entries[i].residual == r4.entries[i].residual);
    }
}

TEST_CASE("multiplicity guard") {
    // A rank-2 ring with N[a][a][a] = 2 loads for dimension work only.
    std::string doc = R"({
      "simples": ["1","a"], "unit": "1",
      "dual": {"1":"1","a":"a"},
      "fusion": [["a","a","1",1],["a","a","a",2]]
    })";
    FusionData fd = load_category(doc);
    CHECK_FALSE(fd.multiplicity_free());
    CHECK(fd.qdim[1] == doctest::Approx(1.0 + std::sqrt(2.0)));  // largest root of x^2 = 2x + 1
    CHECK_THROWS_AS(fd.R(1, 1, 1), unsupported_multiplicity);
    CHECK_THROWS_AS(fd.F(1, 1, 1, 1, 1, 1), unsupported_multiplicity);
}
