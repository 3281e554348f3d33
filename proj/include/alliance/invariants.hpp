#pragma once

#include "alliance/graph.hpp"
#include "alliance/vertex_set.hpp"

namespace alliance {

struct WitnessedValue {
    int value;
    VertexSet witness;
};

/// Exact independence number with the lexicographically smallest maximum
/// independent set as witness. Branch-and-bound for the value, then a
/// greedy feasibility scan for the canonical witness. Supports n <= 64.
WitnessedValue independence_number(const Graph& g);

/// Exact k-domination number: minimum |H| with |N_H(v)| >= k for every
/// v outside H. Search ascends by cardinality starting at the
/// ceil(k*n/(max_degree+k)) lower bound; witness is the lexicographically
/// smallest optimum. k = 1 is ordinary domination.
WitnessedValue k_domination_number(const Graph& g, int k);

/// Exact connected domination number. Requires a connected graph of order
/// at least 2 (std::domain_error on disconnected input).
WitnessedValue connected_domination_number(const Graph& g);

enum class CutMode { Exact, LocalSearch };

/// A bipartition of some vertex subset together with its cut size.
/// Partitions produced by max_cut_partition always satisfy the single-move
/// local-maximum property: for every v in y, |N_x(v)| >= |N_y(v)| within the
/// partitioned subset, and symmetrically for x.
struct CutPartition {
    VertexSet x; // the smaller side (|x| <= |y|)
    VertexSet y;
    long long cut_size;
};

/// Maximum (Exact, guarded |sub| <= 20) or locally maximum (LocalSearch)
/// edge cut across a bipartition of sub. Deterministic: exact mode returns
/// the lexicographically canonical optimum, local search starts from the
/// vertex-index parity split and applies first-improvement sweeps.
CutPartition max_cut_partition(const VertexSet& sub, const Graph& g, CutMode mode);

/// Largest Laplacian eigenvalue with a certified residual bound:
/// ||L w - mu w|| <= tolerance for the unit eigenvector estimate w, which
/// for the symmetric L bounds the eigenvalue error by the same amount.
struct SpectralResult {
    double mu;
    double tolerance;
};

/// Dense symmetric eigensolve for n <= 64, shifted power iteration beyond.
SpectralResult laplacian_spectral_radius(const Graph& g);

} // namespace alliance
