#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "config.hpp"
#include "errors.hpp"
#include "units.hpp"

using namespace dkc;

TEST_CASE("initial widths in natural units are the minimum-uncertainty pair") {
    auto [dx, dp] = initial_widths();
    CHECK(dx == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(dp == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(dx * dp == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("initial widths scale with the SI trap frequency") {
    PhysicalScale rb;
    rb.si_mass = 1.443e-25;
    rb.si_omega0 = 2.0 * M_PI * 50.0;
    auto [dx1, dp1] = initial_widths(rb);
    CHECK(dx1 * dp1 == doctest::Approx(1.054571817e-34 / 2.0).epsilon(1e-12));

    PhysicalScale stiffer = rb;
    stiffer.si_omega0 = 2.0 * *rb.si_omega0;
    auto [dx2, dp2] = initial_widths(stiffer);
    CHECK(dx2 == doctest::Approx(dx1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(dp2 == doctest::Approx(dp1 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("kinetic temperature from velocity width") {
    PhysicalScale rb;
    rb.si_mass = 1.443e-25;
    rb.si_omega0 = 2.0 * M_PI * 50.0;

    CHECK(natural_to_si_temperature(0.0, rb) == 0.0);
    // T = m dv^2 / kB for Rb-87 at dv = 1 mm/s
    double t = natural_to_si_temperature(1e-3, rb);
    CHECK(t == doctest::Approx(1.443e-31 / 1.380649e-23).epsilon(1e-12));
    CHECK(t == doctest::Approx(1.045e-11).epsilon(1e-3));
    // quadratic scaling
    CHECK(natural_to_si_temperature(2e-3, rb) / t == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("temperature conversion requires the SI overrides") {
    PhysicalScale natural;
    CHECK_THROWS_AS(natural_to_si_temperature(1e-3, natural), Error);
    try {
        natural_to_si_temperature(1e-3, natural);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::config);
    }
}

TEST_CASE("kick strengths round-trip through the config format bit-exactly") {
    for (double v : {29.094827586206897, -22.078160919540231, 0.1 + 0.2, 1e-17,
                     123456.789012345678}) {
        Config cfg;
        cfg.set("kicks[0].strength", format_double(v));
        Config back = Config::parse(cfg.serialize());
        CHECK(back.require_double("kicks[0].strength") == v);
    }
}
