#include "pgic/regions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "pgic/error.hpp"

namespace pgic {

BOutline b_outline(const SubChannel& ch, std::size_t samples, double cap) {
    if (samples < 2) throw Error(Errc::InvalidArgument, "outline needs at least 2 samples");
    const Corners corners = corner_points(ch);
    const CornerImages img = corner_images(ch);
    const double pt = corners.t.p, qs = corners.s.q;

    BOutline out;
    const auto n = static_cast<double>(samples - 1);
    out.outer.push_back(Subgradient{img.t.kp, std::max(cap, img.t.kq)});
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / n;
        const RateGradient g = tin_gradient(ch, PowerPair{(1.0 - t) * pt, t * qs});
        out.outer.push_back(Subgradient{g.dp, g.dq});
    }
    out.outer.push_back(Subgradient{std::max(cap, img.s.kp), img.s.kq});

    for (std::size_t i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / n;
        const RateGradient gt = tin_gradient(ch, PowerPair{t * pt, 0.0});
        out.ot_curve.push_back(Subgradient{gt.dp, gt.dq});
        const RateGradient gs = tin_gradient(ch, PowerPair{0.0, t * qs});
        out.os_curve.push_back(Subgradient{gs.dp, gs.dq});
    }
    return out;
}

Activity label_activity(RegionLabel label) noexcept {
    switch (label) {
        case RegionLabel::A1: return {true, true};
        case RegionLabel::A2: return {true, false};
        case RegionLabel::A3: return {false, true};
        case RegionLabel::A4: break;
    }
    return {false, false};
}

std::string subregion_name(const std::vector<RegionLabel>& labels) {
    std::string name;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) name += ' ';
        name += "B" + std::to_string(i + 1) + "^(" + std::to_string(region_index(labels[i])) + ")";
    }
    return name;
}

std::vector<SubRegion> label_subregions(std::span<const SubChannel> channels, std::size_t resolution,
                                        double extent) {
    if (resolution < 3) throw Error(Errc::InvalidArgument, "resolution must be at least 3");
    if (!(extent > 0.0)) throw Error(Errc::InvalidArgument, "extent must be positive");
    const std::size_t n = resolution;
    const double h = extent / static_cast<double>(n);
    auto center = [&](std::size_t ix, std::size_t iy) {
        return Subgradient{(static_cast<double>(ix) + 0.5) * h, (static_cast<double>(iy) + 0.5) * h};
    };

    // Key -1 marks cells outside the intersection.
    std::map<std::vector<RegionLabel>, int> keys;
    std::vector<std::vector<RegionLabel>> key_labels;
    std::vector<int> key(n * n, -1);
    for (std::size_t iy = 0; iy < n; ++iy) {
        for (std::size_t ix = 0; ix < n; ++ix) {
            std::vector<RegionLabel> labels;
            bool inside = true;
            for (const SubChannel& ch : channels) {
                const auto pre = invert(ch, center(ix, iy));
                if (!pre) {
                    inside = false;
                    break;
                }
                labels.push_back(pre->label);
            }
            if (!inside) continue;
            auto [it, fresh] = keys.emplace(labels, static_cast<int>(key_labels.size()));
            if (fresh) key_labels.push_back(labels);
            key[iy * n + ix] = it->second;
        }
    }

    // Distance (in cells) to the nearest cell with a different key. The outer
    // edge of the grid does not count as a boundary since the regions extend
    // beyond it.
    constexpr int kUnset = std::numeric_limits<int>::max();
    std::vector<int> depth(n * n, kUnset);
    std::deque<std::size_t> queue;
    for (std::size_t iy = 0; iy < n; ++iy) {
        for (std::size_t ix = 0; ix < n; ++ix) {
            const std::size_t idx = iy * n + ix;
            const int kv = key[idx];
            const bool edge = (ix > 0 && key[idx - 1] != kv) || (ix + 1 < n && key[idx + 1] != kv) ||
                              (iy > 0 && key[idx - n] != kv) || (iy + 1 < n && key[idx + n] != kv);
            if (edge) {
                depth[idx] = 0;
                queue.push_back(idx);
            }
        }
    }
    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        const std::size_t ix = idx % n, iy = idx / n;
        auto visit = [&](std::size_t j) {
            if (depth[j] == kUnset && key[j] == key[idx]) {
                depth[j] = depth[idx] + 1;
                queue.push_back(j);
            }
        };
        if (ix > 0) visit(idx - 1);
        if (ix + 1 < n) visit(idx + 1);
        if (iy > 0) visit(idx - n);
        if (iy + 1 < n) visit(idx + n);
    }

    std::vector<SubRegion> regions(key_labels.size());
    std::vector<int> best(key_labels.size(), -1);
    for (std::size_t idx = 0; idx < n * n; ++idx) {
        const int kv = key[idx];
        if (kv < 0) continue;
        SubRegion& r = regions[static_cast<std::size_t>(kv)];
        ++r.cells;
        const int dv = depth[idx] == kUnset ? static_cast<int>(n) : depth[idx];
        if (dv > best[static_cast<std::size_t>(kv)]) {
            best[static_cast<std::size_t>(kv)] = dv;
            r.representative = center(idx % n, idx / n);
        }
    }
    for (std::size_t i = 0; i < regions.size(); ++i) {
        regions[i].labels = key_labels[i];
        const AggregateDemand agg = aggregate_demand(channels, regions[i].representative);
        regions[i].budgets = PowerPair{agg.total_p, agg.total_q};
    }
    return regions;
}

}  // namespace pgic
