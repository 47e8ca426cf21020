#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "pgic/regions.hpp"
#include "support/generators.hpp"

using namespace pgic;

TEST_CASE("label activity") {
    CHECK(to_string(label_activity(RegionLabel::A1)) == "(+,+)");
    CHECK(to_string(label_activity(RegionLabel::A2)) == "(+,0)");
    CHECK(to_string(label_activity(RegionLabel::A3)) == "(0,+)");
    CHECK(to_string(label_activity(RegionLabel::A4)) == "(0,0)");
    CHECK(subregion_name({RegionLabel::A2, RegionLabel::A4}) == "B1^(2) B2^(4)");
}

TEST_CASE("B outline follows the corner images") {
    const SubChannel ch(0.6, 0.6, 4, 4);
    const BOutline out = b_outline(ch, 40, 3.0);
    const CornerImages img = corner_images(ch);
    CHECK(out.outer.front().kp == doctest::Approx(img.t.kp));
    CHECK(out.outer.front().kq == doctest::Approx(3.0));
    CHECK(out.outer[1].kp == doctest::Approx(img.t.kp));
    CHECK(out.outer[1].kq == doctest::Approx(img.t.kq));
    CHECK(out.outer[out.outer.size() - 2].kp == doctest::Approx(img.s.kp));
    CHECK(out.ot_curve.front().kp == doctest::Approx(img.o.kp).epsilon(1e-14));
    CHECK(out.ot_curve.front().kq == doctest::Approx(img.o.kq).epsilon(1e-14));
    CHECK(out.ot_curve.back().kp == doctest::Approx(img.t.kp));
    CHECK(out.os_curve.back().kq == doctest::Approx(img.s.kq));
    // Points just above the outer curve are in B, just below are not.
    for (std::size_t i = 2; i + 2 < out.outer.size(); ++i) {
        const Subgradient k = out.outer[i];
        CHECK(in_B(ch, {k.kp * 1.001, k.kq * 1.001}));
        CHECK_FALSE(in_B(ch, {k.kp * 0.999, k.kq * 0.999}));
    }
}

TEST_CASE("two-channel example sub-regions") {
    const std::vector<SubChannel> chans{SubChannel(0.6, 0.6, 4, 4), SubChannel(0.24, 0.24, 1.2, 1.2)};
    const std::vector<SubRegion> regions = label_subregions(chans, 150, 3.0);
    std::set<std::string> names;
    for (const SubRegion& r : regions) {
        names.insert(subregion_name(r.labels));
        for (std::size_t i = 0; i < chans.size(); ++i) CHECK(invert(chans[i], r.representative)->label == r.labels[i]);
    }
    const std::set<std::string> expected{"B1^(2) B2^(4)", "B1^(2) B2^(2)", "B1^(1) B2^(2)", "B1^(1) B2^(4)",
                                         "B1^(1) B2^(1)", "B1^(3) B2^(4)", "B1^(3) B2^(3)", "B1^(1) B2^(3)",
                                         "B1^(4) B2^(4)"};
    CHECK(names == expected);
}

TEST_CASE("identical channels share their B regions") {
    const SubChannel ch(0.24, 0.24, 1.2, 1.2);
    const std::vector<SubChannel> chans{ch, ch};
    for (const SubRegion& r : label_subregions(chans, 80, 1.0)) CHECK(r.labels[0] == r.labels[1]);
}
