#pragma once

#include <string>

#include "alliance/alliance.hpp"
#include "alliance/graph.hpp"

namespace alliance {

enum class BaseSet { Independent, Dominating, TwoDominating };

/// A certified alliance witness emitted by a construction, together with
/// the size bound the construction realizes. The certificate is always
/// recomputed from scratch before the report is returned.
struct WitnessReport {
    std::string construction; // independent_complement | maxcut_refined | two_dom_refined
    VertexSet set;
    AllianceKind kind;
    long long size_bound_claimed;
    PredicateCertificate certificate;
};

/// Complement of a maximum independent set. Yields a global offensive
/// alliance of size n - alpha whenever every vertex has a neighbor
/// (min degree >= 1), and a global strong offensive alliance when
/// min degree >= 2. Throws hypothesis_error below those degrees.
WitnessReport independent_complement_alliance(const Graph& g, bool strong);

/// Base set B (maximum independent / minimum dominating / minimum
/// 2-dominating), then a maximum-cut split X|Y of the rest with |X| <= |Y|;
/// returns W = B u X. The local-maximum cut property gives every v in Y at
/// least as many W-neighbors on the X side as it keeps in Y, and the base
/// set supplies the margin. Realized bounds:
///   Independent   -> |W| <= floor((n + alpha) / 2)        (global)
///   Dominating    -> |W| <= floor((gamma + n) / 2)        (global)
///   TwoDominating -> |W| <= floor((n + gamma_2) / 2)      (global strong)
/// strong must be true exactly for TwoDominating (margin 2 needs the
/// 2-dominating base); other combinations raise std::invalid_argument.
/// When fewer than two vertices remain outside B the construction falls
/// back to the degenerate case (the single outside vertex for the
/// independent base, B itself otherwise).
WitnessReport maxcut_refined_alliance(const Graph& g, BaseSet base, bool strong);

} // namespace alliance
