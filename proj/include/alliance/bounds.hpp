#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance {

/// One catalog inequality instantiated on a graph.
///
/// Catalog ids are a stable public naming contract:
///   U1..U13 upper bounds on alliance numbers (U12a/U12b are the two
///           non-global bounds), L1..L9 lower bounds, X1..X3 cross-checked
///           external inequalities, C1..C5 connected-subgraph results.
///
/// hypothesis_met = false leaves holds/tight unset (not-applicable, never
/// false). A record whose exact value sits beyond the solver capacity is
/// reported not-evaluable the same way, with an explanatory note.
struct BoundRecord {
    std::string id;
    std::string description;
    bool hypothesis_met = false;
    std::optional<long long> bound_value; // rounded bound (ceil/floor applied)
    std::optional<double> bound_real;     // pre-rounding value for real-valued bounds
    std::optional<long long> exact_value;
    std::optional<bool> holds;
    std::optional<bool> tight;
    std::string note;
};

struct BoundOptions {
    std::optional<int> exact_cap; // default: default_exact_cap()
    std::optional<int> enum_cap;  // default: default_enum_cap()
};

/// Evaluates the full catalog on g in fixed id order.
std::vector<BoundRecord> evaluate_all_bounds(const Graph& g, const BoundOptions& opts = {});

struct EnsembleGraph {
    Graph graph;
    std::string label;
};

struct SurveyRow {
    std::string id;
    long long applicable = 0;    // hypothesis met and evaluable
    long long holds = 0;
    long long tight = 0;
    long long violations = 0;    // should stay zero: the entries are proved inequalities
    long long hypothesis_unmet = 0;
    long long not_evaluable = 0;
    std::optional<std::pair<int, std::string>> smallest_tight; // (order, label)
};

/// Per-bound tally over an ensemble; ids may be filtered (empty = all).
std::vector<SurveyRow> tightness_survey(const std::vector<EnsembleGraph>& ensemble,
                                        const std::vector<std::string>& id_filter = {},
                                        const BoundOptions& opts = {});

// Closed-form bound expressions, shared by the catalog and by the solvers'
// search seeding. All integer variants are exact (no floating point).
namespace formulas {

long long ceil_div(long long a, long long b);  // b > 0
long long floor_div(long long a, long long b); // b > 0

/// ceil((a - sqrt(radicand)) / d) computed exactly in integers.
long long ceil_sub_sqrt_div(long long a, long long radicand, long long d);

/// Integer snap within 1e-9 before rounding, for real-valued bounds.
long long snap_ceil(double x);
long long snap_floor(double x);

/// ceil(k*n / (max_degree + k)): minimum size of any k-dominating set.
long long k_domination_lower(long long k, long long n, long long max_degree);

long long L1_value(long long n, long long min_degree, long long max_degree);
long long L2_value(long long n, long long min_degree, long long max_degree);
long long L3_value(long long n, long long m); // throws std::domain_error on negative radicand
long long L4_value(long long n, long long m);
long long L5_value(long long n, long long m, long long max_degree);
long long L6_value(long long n, long long m, long long max_degree);
long long L7_value(long long n, long long min_degree, double mu_high);
long long L8_value(long long n, long long min_degree, double mu_high);
long long C2_value(long long n, long long max_degree);
long long C3_value(long long n, long long max_degree);
long long C4_value(long long n, long long m, long long diameter, long long max_degree);
long long C5_value(long long n, long long m, long long diameter, long long max_degree);

} // namespace formulas

} // namespace alliance
