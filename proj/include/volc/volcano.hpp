#pragma once

#include <map>
#include <string>
#include <vector>

#include "volc/bounds.hpp"
#include "volc/curve.hpp"
#include "volc/poly.hpp"

namespace volc {

/// Connected component of G₂(F_q) on j-invariants. Adjacency keeps the raw
/// Φ₂ root multiplicities (self-roots included); structure checks work on
/// the self-loop-free simple view.
struct VolcanoComponent {
    const Fq* field = nullptr;
    std::vector<Fe> vertices;  // canonical order
    std::map<Fe, RootMultiset> adjacency;
    std::map<Fe, long> levels;  // filled by measure_height
    long height = -1;           // -1 until measured
    std::string surface_shape;  // "vertex" | "edge" | "cycle" after measuring
    bool measured_ok = false;
    Integer trace;     // one twist's trace (oracle), valid when has_trace
    Integer trace_sq;  // t², twist-invariant
    bool has_trace = false;
    bool contains_special_j = false;  // j ∈ {0, 1728}

    int degree_with_multiplicity(const Fe& v) const {
        return adjacency.at(v).total_multiplicity();
    }
};

/// BFS closure of j0 under phi2_neighbors, deterministic vertex order.
/// The trace is filled from the point-count oracle when q ≤ oracle_budget.
VolcanoComponent build_component(const Fq& field, const Fe& j0, uint64_t seed,
                                 uint64_t oracle_budget = 1'000'000);

/// Iterated leaf-stripping. A vertex is stripped when its remaining root
/// multiplicity (self-roots included) is ≤ 1; stripping stops when the
/// remainder is a cycle (≥ 3), a single edge, or a single vertex, with no
/// remaining vertex carrying both self-roots and outgoing edges. Rounds
/// stripped = height; levels are assigned as distance above the surface.
/// Returns false (reason in c.surface_shape left empty) if stripping stalls
/// on a non-volcano.
bool measure_height(VolcanoComponent& c);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Definition-4 structure checks against the measured levels: degree 3
/// (with multiplicity) off the floor and 1 on it when h > 0, exactly one
/// upward edge per mid-level vertex with the rest descending, legal
/// surface shape, simple degree ≤ 2 when h = 0.
VerifyReport verify_volcano(const VolcanoComponent& c);

struct SweepReport {
    Integer limit;
    bool fp2 = false;
    uint64_t primes = 0;
    uint64_t components = 0;
    uint64_t volcanoes_verified = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// For every odd prime p ≤ limit, enumerate all of G₂(F_q) (q = p or p²),
/// measure each ordinary component and assert: (a) height ≤ the Theorem 2 /
/// Theorem 1 bound, (b) height ≤ ⌊e(q;t)/2⌋, (c) per admissible even trace,
/// the max height over components equals ν₂((t²−4q)/D_K)/2. Components
/// containing j ∈ {0, 1728} are exempt from (b), (c) and the Definition-4
/// checks but not from (a). Enumeration budget: q ≤ 10⁴.
SweepReport sweep(const Integer& prime_limit, bool fp2_mode, uint64_t seed = 1);

/// Graphviz DOT dump: vertices labelled with j, ranked by level, component
/// annotated with trace² and height.
std::string to_dot(const std::vector<VolcanoComponent>& comps);

/// All components of G₂(F_q), deterministic order (used by the CLI).
std::vector<VolcanoComponent> all_components(const Fq& field, uint64_t seed,
                                             uint64_t oracle_budget = 1'000'000);

}  // namespace volc
