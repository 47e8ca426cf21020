#include <doctest.h>

#include <cmath>
#include <vector>

#include "pgic/capacity.hpp"
#include "pgic/error.hpp"
#include "support/generators.hpp"

using namespace pgic;

TEST_CASE("tin rate examples") {
    CHECK(tin_rate(SubChannel(0.6, 0.6, 4, 4), {0, 0}).nats == 0.0);
    CHECK(tin_rate(SubChannel(0, 0, 1, 1), {3, 0}).nats == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(tin_rate(SubChannel(0.24, 0.24, 1.2, 1.2), {1, 1}).nats ==
          doctest::Approx(std::log(2.44 / 1.24)).epsilon(1e-13));
    CHECK(tin_rate(SubChannel(0.24, 0.24, 1.2, 1.2), {1, 1}).nats == doctest::Approx(0.6768).epsilon(1e-4));
    CHECK(Rate{std::log(2.0)}.bits() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(tin_rate(SubChannel(0, 0, 1, 1), {-1, 0}), Error);
}

TEST_CASE("total tin rate") {
    const PgicInstance twin({SubChannel(0, 0, 1, 1), SubChannel(0, 0, 1, 1)}, 2, 2);
    const std::vector<PowerPair> ones{{1, 1}, {1, 1}};
    CHECK(total_tin_rate(twin, ones).nats == doctest::Approx(2 * std::log(2.0)).epsilon(1e-14));

    const PgicInstance example({SubChannel(0.6, 0.6, 4, 4), SubChannel(0.24, 0.24, 1.2, 1.2)}, 0.1, 0.1);
    const std::vector<PowerPair> first{{0.1, 0.1}, {0, 0}};
    CHECK(total_tin_rate(example, first).nats == doctest::Approx(std::log(1 + 0.4 / 1.06)).epsilon(1e-13));
    CHECK(total_tin_rate(example, first).nats == doctest::Approx(0.3202).epsilon(1e-4));

    const std::vector<PowerPair> short_alloc{{1, 1}};
    CHECK_THROWS_AS(total_tin_rate(example, short_alloc), Error);
}

TEST_CASE("property: interference-free rate is two AWGN capacities") {
    testgen::Gen gen(21);
    for (int n = 0; n < 100; ++n) {
        const double c = gen.log_uniform(0.1, 10), d = gen.log_uniform(0.1, 10);
        const double p = gen.log_uniform(1e-3, 1e3), q = gen.log_uniform(1e-3, 1e3);
        CHECK(tin_rate(SubChannel(0, 0, c, d), {p, q}).nats == doctest::Approx(0.5 * std::log1p(c * p) + 0.5 * std::log1p(d * q)).epsilon(1e-14));
    }
}

TEST_CASE("property: rate increases along the p axis") {
    testgen::Gen gen(22);
    for (int n = 0; n < 200; ++n) {
        const SubChannel ch = gen.any_channel();
        const double p = gen.log_uniform(1e-3, 10);
        CHECK(tin_rate(ch, {p * 1.01, 0}).nats > tin_rate(ch, {p, 0}).nats);
    }
}

TEST_CASE("property: concavity on the noisy region") {
    testgen::Gen gen(23);
    for (int n = 0; n < 1000; ++n) {
        const SubChannel ch = gen.two_sided();
        const PowerPair x = gen.interior_point(ch, 0.0), y = gen.interior_point(ch, 0.0);
        const double lam = gen.uniform(0, 1);
        const PowerPair mix{lam * x.p + (1 - lam) * y.p, lam * x.q + (1 - lam) * y.q};
        CHECK(tin_rate(ch, mix).nats >= lam * tin_rate(ch, x).nats + (1 - lam) * tin_rate(ch, y).nats - 1e-10);
    }
}

TEST_CASE("property: gradient and hessian match finite differences") {
    testgen::Gen gen(24);
    const double h = 1e-5;
    for (int n = 0; n < 200; ++n) {
        const SubChannel ch = gen.two_sided();
        const PowerPair x = gen.interior_point(ch, 0.05);
        const RateGradient g = tin_gradient(ch, x);
        auto r = [&](double dp, double dq) { return tin_rate(ch, {x.p + dp, x.q + dq}).nats; };
        CHECK(g.dp == doctest::Approx((r(h, 0) - r(-h, 0)) / (2 * h)).epsilon(1e-6));
        CHECK(g.dq == doctest::Approx((r(0, h) - r(0, -h)) / (2 * h)).epsilon(1e-6));
        const RateHessian H = tin_hessian(ch, x);
        const RateGradient gp = tin_gradient(ch, {x.p + h, x.q}), gm = tin_gradient(ch, {x.p - h, x.q});
        const double scale = std::max(1.0, std::abs(H.pp));
        CHECK(std::abs(H.pp - (gp.dp - gm.dp) / (2 * h)) <= 1e-5 * scale);
        CHECK(std::abs(H.pq - (gp.dq - gm.dq) / (2 * h)) <= 1e-5 * scale);
    }
}
