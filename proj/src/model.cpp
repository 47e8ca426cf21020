#include "pgic/model.hpp"

#include <cmath>
#include <sstream>

#include "pgic/error.hpp"

namespace pgic {

namespace {

std::string describe(double a, double b, double c, double d) {
    std::ostringstream os;
    os << "(a=" << a << ", b=" << b << ", c=" << c << ", d=" << d << ")";
    return os.str();
}

}  // namespace

SubChannel::SubChannel(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
    const bool finite = std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d);
    if (!finite || a < 0.0 || b < 0.0 || c <= 0.0 || d <= 0.0) {
        throw Error(Errc::InvalidChannel, "gains must be finite with a,b >= 0 and c,d > 0 " +
                                              describe(a, b, c, d));
    }
    if (!(a < d) || !(b < c)) {
        throw Error(Errc::InvalidChannel, "cross gains must satisfy a < d and b < c " +
                                              describe(a, b, c, d));
    }
}

std::string_view to_string(ChannelClass cls) {
    switch (cls) {
        case ChannelClass::TwoSided: return "two-sided";
        case ChannelClass::OneSidedIntoRx1: return "one-sided-rx1";
        case ChannelClass::OneSidedIntoRx2: return "one-sided-rx2";
        case ChannelClass::InterferenceFree: return "interference-free";
    }
    return "unknown";
}

PgicInstance::PgicInstance(std::vector<SubChannel> channels, double total_p, double total_q)
    : channels_(std::move(channels)), total_p_(total_p), total_q_(total_q) {
    if (channels_.empty()) {
        throw Error(Errc::InvalidInstance, "an instance needs at least one sub-channel");
    }
    if (!std::isfinite(total_p) || !std::isfinite(total_q) || total_p < 0.0 || total_q < 0.0) {
        throw Error(Errc::InvalidInstance, "power budgets must be finite and non-negative");
    }
}

ChannelClass classify(const SubChannel& ch) noexcept {
    const bool a_zero = ch.a() == 0.0;
    const bool b_zero = ch.b() == 0.0;
    if (!a_zero && !b_zero) return ChannelClass::TwoSided;
    if (!a_zero) return ChannelClass::OneSidedIntoRx1;
    if (!b_zero) return ChannelClass::OneSidedIntoRx2;
    return ChannelClass::InterferenceFree;
}

bool coefficient_condition(const SubChannel& ch) noexcept {
    return std::sqrt(ch.a() * ch.c()) + std::sqrt(ch.b() * ch.d()) < std::sqrt(ch.c() * ch.d());
}

double noisy_region_margin(const SubChannel& ch, const PowerPair& pp) noexcept {
    return std::sqrt(ch.c() * ch.d()) - std::sqrt(ch.a() * ch.c()) * (1.0 + ch.b() * pp.p) -
           std::sqrt(ch.b() * ch.d()) * (1.0 + ch.a() * pp.q);
}

bool in_noisy_region(const SubChannel& ch, const PowerPair& pp) noexcept {
    if (!(pp.p >= 0.0) || !(pp.q >= 0.0)) return false;
    return noisy_region_margin(ch, pp) >= -kRegionSlack;
}

Corners corner_points(const SubChannel& ch) {
    if (classify(ch) != ChannelClass::TwoSided) {
        throw Error(Errc::ClassError, "corner points exist only for two-sided channels");
    }
    const double sac = std::sqrt(ch.a() * ch.c());
    const double sbd = std::sqrt(ch.b() * ch.d());
    const double gap = std::sqrt(ch.c() * ch.d()) - sac - sbd;
    if (!(gap > 0.0)) {
        throw Error(Errc::DegenerateRegion, "coefficient condition fails; the region is {(0,0)} or empty");
    }
    return Corners{PowerPair{0.0, gap / (ch.a() * sbd)}, PowerPair{gap / (ch.b() * sac), 0.0}};
}

}  // namespace pgic
