#pragma once

// Subdifferential calculus of the sub-channel sum-rate capacity on its
// noisy-interference region, and the inverse map from price vectors
// (subgradients) back to power pairs.
//
// Region labels follow the zero pattern of the power pair:
//   A1  p > 0, q > 0   (interior and the S-T edge; single gradient)
//   A2  p > 0, q = 0   (ray: k_p fixed, k_q unbounded above)
//   A3  p = 0, q > 0   (ray: k_q fixed, k_p unbounded above)
//   A4  p = 0, q = 0   (quadrant above (c/2, d/2))
// The B-region of a label is the union of subdifferentials over its A-region.

#include <optional>
#include <string_view>
#include <variant>

#include "pgic/capacity.hpp"
#include "pgic/model.hpp"

namespace pgic {

struct Subgradient {
    double kp = 0.0;
    double kq = 0.0;

    friend bool operator==(const Subgradient&, const Subgradient&) = default;
};

enum class RegionLabel { A1, A2, A3, A4 };

std::string_view to_string(RegionLabel label);
int region_index(RegionLabel label) noexcept;  // 1..4

// Label by zero pattern alone; the caller is responsible for region membership.
RegionLabel region_label(const PowerPair& pp) noexcept;

struct SubdiffPoint {
    Subgradient k;
};
struct RayFixedKp {
    double kp;
    double kq_min;
};
struct RayFixedKq {
    double kp_min;
    double kq;
};
struct Quadrant {
    double kp_min;
    double kq_min;
};

using SubdiffSet = std::variant<SubdiffPoint, RayFixedKp, RayFixedKq, Quadrant>;

// The lower-left vertex of the set (the gradient or one-sided derivatives).
Subgradient base_point(const SubdiffSet& set) noexcept;

// Structural membership: equality coordinates must match within tol (relative
// to max(1, |value|)); bounded-below coordinates may exceed their minimum.
bool contains(const SubdiffSet& set, const Subgradient& k, double tol = 1e-9) noexcept;

// Throws Error{OutsideRegion} when pp is not in the noisy-interference region.
// The sets are unbounded above along their free coordinates.
SubdiffSet subdifferential(const SubChannel& ch, const PowerPair& pp);

// Images O', S', T' of the region corners (two-sided channels only; throws
// like corner_points).
struct CornerImages {
    Subgradient o;
    Subgradient s;
    Subgradient t;
};
CornerImages corner_images(const SubChannel& ch);

// Maximizer of C(x) - k.x over the noisy-interference region, i.e. the power
// pair a channel "demands" at price k. When the label is empty the maximizer
// sits on the S-T edge with a strictly active edge constraint, so k is not a
// subgradient there and k lies outside B.
struct Demand {
    PowerPair pp;
    std::optional<RegionLabel> label;
};

// Requires k.kp > 0 and k.kq > 0 (throws Error{InvalidArgument} otherwise).
// Throws Error{NumericalFailure} if the interior solve does not converge.
Demand demand(const SubChannel& ch, const Subgradient& k);

struct Preimage {
    PowerPair pp;
    RegionLabel label;
};

// The unique point of the region whose subdifferential contains k, or
// std::nullopt when k is not in B.
std::optional<Preimage> invert(const SubChannel& ch, const Subgradient& k);

bool in_B(const SubChannel& ch, const Subgradient& k);

}  // namespace pgic
