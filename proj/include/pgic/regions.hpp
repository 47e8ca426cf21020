#pragma once

// Geometry of the price-vector regions B_i in (k_p, k_q) space and the
// partition of their intersection by region labels.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pgic/allocator.hpp"
#include "pgic/model.hpp"
#include "pgic/subdiff.hpp"

namespace pgic {

// Boundary curves of one two-sided channel's B region, all in k space.
//   outer:    vertical ray above T', the image of the S-T edge, horizontal ray
//             right of S' (rays truncated at `cap`)
//   ot_curve: image of the O-T edge (separates B^(1) from B^(2))
//   os_curve: image of the O-S edge (separates B^(1) from B^(3))
struct BOutline {
    std::vector<Subgradient> outer;
    std::vector<Subgradient> ot_curve;
    std::vector<Subgradient> os_curve;
};

BOutline b_outline(const SubChannel& ch, std::size_t samples, double cap);

// A connected piece of the intersection of all B regions on which every
// channel keeps the same region label.
struct SubRegion {
    std::vector<RegionLabel> labels;      // one per channel
    Subgradient representative;           // deepest grid cell of the piece
    PowerPair budgets;                    // aggregate demand at the representative
    std::size_t cells = 0;
};

// Labels a resolution x resolution grid over (0, extent]^2 and returns one
// entry per distinct label combination, ordered by first appearance in
// row-major scan order (k_q outer, k_p inner). Cells outside some B are skipped.
std::vector<SubRegion> label_subregions(std::span<const SubChannel> channels, std::size_t resolution, double extent);

// Activity implied by a region label: A1 (+,+), A2 (+,0), A3 (0,+), A4 (0,0).
Activity label_activity(RegionLabel label) noexcept;

// "B1^(2) B2^(4)" style name used in reports.
std::string subregion_name(const std::vector<RegionLabel>& labels);

}  // namespace pgic
