#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rcwall/earth_pressure.hpp"

using namespace rcwall;

TEST_CASE("seismic inertia angle") {
    CHECK(seismic_inertia_angle({0, 0}) == 0.0);
    CHECK(seismic_inertia_angle({0, 0.3}) == 0.0);
    CHECK(seismic_inertia_angle({0.15, 0}) == doctest::Approx(0.148889947609497).epsilon(1e-12));
    CHECK(seismic_inertia_angle({0.3, 0.3}) == doctest::Approx(0.404891786285083).epsilon(1e-12));
    CHECK_THROWS_AS(seismic_inertia_angle({0.1, 1.0}), std::domain_error);
}

TEST_CASE("Rankine limits") {
    const auto a = active_coefficients(deg2rad(32), 0, 0, 0, 0);
    const auto p = passive_coefficients(deg2rad(32), 0, 0, 0);
    REQUIRE(a);
    REQUIRE(p);
    const double t1 = std::tan(deg2rad(45 - 16)), t2 = std::tan(deg2rad(45 + 16));
    CHECK(a->ka == doctest::Approx(t1 * t1).epsilon(1e-12));
    CHECK(p->kp == doctest::Approx(t2 * t2).epsilon(1e-12));
    CHECK(std::abs(a->ka - 0.3073) < 1e-4);
    CHECK(std::abs(p->kp - 3.2546) < 1e-4);
    CHECK(a->ka * p->kp == doctest::Approx(1.0).epsilon(1e-12));
}

// Reference values from a 30-digit evaluation of the Mononobe-Okabe
// expressions, written independently of this library.
TEST_CASE("Mononobe-Okabe against high-precision evaluation") {
    const double theta = std::atan(0.15);
    const auto a = active_coefficients(deg2rad(36), deg2rad(24), 0, deg2rad(10), theta);
    REQUIRE(a);
    CHECK(a->kae == doctest::Approx(0.388190570133268).epsilon(1e-12));
    CHECK(a->ka == doctest::Approx(0.263286292191317).epsilon(1e-12));
    const auto p = passive_coefficients(deg2rad(36), 0, 0, theta);
    REQUIRE(p);
    CHECK(p->kpe == doctest::Approx(3.54674141597773).epsilon(1e-12));
}

TEST_CASE("static coefficients are the theta = 0 values") {
    for (double phi : {25.0, 30.0, 36.0, 40.0})
        for (double kh : {0.0, 0.15, 0.3}) {
            const double theta = seismic_inertia_angle({kh, 0.1});
            const auto a = active_coefficients(deg2rad(phi), deg2rad(2 * phi / 3), 0, deg2rad(5), theta);
            const auto a0 = active_coefficients(deg2rad(phi), deg2rad(2 * phi / 3), 0, deg2rad(5), 0);
            const auto p = passive_coefficients(deg2rad(phi), 0, 0, theta);
            const auto p0 = passive_coefficients(deg2rad(phi), 0, 0, 0);
            REQUIRE(a);
            REQUIRE(a0);
            REQUIRE(p);
            REQUIRE(p0);
            CHECK(std::abs(a->ka - a0->kae) < 1e-12);
            CHECK(std::abs(p->kp - p0->kpe) < 1e-12);
            CHECK(p->kp > a->ka);
        }
}

TEST_CASE("kae grows with kh") {
    for (double kv : {0.0, 0.15, 0.3}) {
        double prev = 0;
        for (int k = 0; k <= 6; ++k) {
            const double theta = seismic_inertia_angle({0.05 * k, kv});
            const auto a = active_coefficients(deg2rad(36), deg2rad(24), 0, deg2rad(10), theta);
            REQUIRE(a);
            CHECK(a->kae >= prev);
            prev = a->kae;
        }
    }
}

TEST_CASE("no sliding wedge when phi < theta + i") {
    CHECK_FALSE(active_coefficients(deg2rad(20), 0, 0, deg2rad(15), deg2rad(10)));
    CHECK(active_coefficients(deg2rad(20), 0, 0, deg2rad(10), deg2rad(10)));
}

TEST_CASE("thrust arithmetic and acting height") {
    CHECK(active_force(0.3, 20, 6, 0) == doctest::Approx(108.0));
    CHECK(active_force(0.3, 20, 6, 0.5) == doctest::Approx(54.0));
    CHECK(acting_height(100, 0, 6) == doctest::Approx(2.0));
    CHECK(acting_height(0, 50, 6) == doctest::Approx(3.6));
    const double mid = acting_height(50, 50, 6);
    CHECK(mid > 2.0);
    CHECK(mid < 3.6);
}

TEST_CASE("example 2 static forces") {
    const DesignParameters p = preset_parameters(Example::Two);
    DesignVector d;
    d.x = {2.90, 0.87, 0.47, 0.30, 0.54, 2.60, 0.30, 0.30};
    const auto s = earth_forces(d, p, {0, 0});
    REQUIRE(s);
    CHECK(s->h == doctest::Approx(6.54));
    CHECK(s->ka == doctest::Approx(0.275022319562545).epsilon(1e-12));
    CHECK(s->Pa == doctest::Approx(117.631446434013).epsilon(1e-12));
    CHECK(s->Pae == s->Pa + s->dPae);
    CHECK(s->dPae == doctest::Approx(0.0));
    CHECK(s->hbar == doctest::Approx(6.54 / 3));
    CHECK(s->Pq == doctest::Approx(30 * s->ka * 6.54));
}

TEST_CASE("force identity and acting point over a parameter grid") {
    DesignParameters p = preset_parameters(Example::One);
    DesignVector d;
    d.x = {2.0, 0.6, 0.25, 0.2, 0.3, 1.5, 0.25, 0.25};
    int checked = 0;
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b)
            for (int c = 0; c < 10; ++c) {
                p.phi = 28 + 1.5 * a;
                p.stem_height = 2 + 0.5 * b;
                const SeismicCase sc{0.03 * c, 0.0};
                const auto s = earth_forces(d, p, sc);
                if (!s) continue;
                ++checked;
                CHECK(s->Pae == s->Pa + s->dPae);
                if (s->dPae >= 0) {
                    CHECK(s->hbar >= s->h / 3 - 1e-12);
                    CHECK(s->hbar <= 0.6 * s->h + 1e-12);
                }
            }
    CHECK(checked > 900);
}
