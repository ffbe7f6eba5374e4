#pragma once

#include <optional>
#include <string>
#include <vector>

#include "volc/bounds.hpp"
#include "volc/curve.hpp"

namespace volc {

enum class BoundMode { classic_h0, improved_h2, improved_h1_fp };

struct WalkConfig {
    BoundMode bound_mode = BoundMode::improved_h2;
    /// Budget is bound + 1 extension attempts when set: a height-h descent
    /// takes h steps to the floor plus one failing attempt to notice it.
    bool extra_attempt = true;
    uint64_t seed = 1;
};

enum class DetectReason { fewer_than_3_initial_roots, dead_end_quadratic };

struct Detection {
    int path = -1;  // -1: failed before any path started
    long step = 0;
    DetectReason reason = DetectReason::fewer_than_3_initial_roots;
};

struct WalkReport {
    enum class Verdict { ordinary, supersingular };
    Verdict verdict = Verdict::ordinary;
    std::vector<long> steps_taken;  // per path; empty if paths never started
    long step_budget = 0;
    std::optional<Detection> detection;
};

/// Walk budget for the mode: ⌊log₂ p⌋ + 1, ⌊⌊log₂ p⌋/2⌋ + 2, or the
/// Theorem 2 per-prime bound h₁ (F_p inputs only). The extra attempt is
/// added on top by the walk itself.
long step_budget(const Integer& p, BoundMode mode);

/// Sutherland-style test: three non-backtracking paths in G₂(F_{p²})
/// (F_p inputs are embedded), each extended by the roots of
/// Φ₂(j_cur, Y)/(Y − j_prev). A missing quadratic root means the walk left
/// the F_{p²}-rational graph: ordinary. Fewer than three initial roots:
/// ordinary. Surviving the budget on all paths: supersingular.
///
/// Note: improved_h1_fp bounds the F_p volcano, not the F_{p²} one the walk
/// descends, so it can under-budget ordinary inputs; classic_h0 and
/// improved_h2 are the verdict-exact modes.
WalkReport supersingularity_test(const Curve& E, const WalkConfig& cfg);

/// A supersingular curve over the given F_{p²}: y² = x³ + x for
/// p ≡ 3 (mod 4); the first class-number-one CM j-invariant with
/// (D|p) = −1 for p ≡ 1 (mod 4); exhaustive oracle search as a last
/// resort for p ≤ 3000. Throws when no method applies.
Curve make_supersingular(const Fq& fp2);

struct BenchRow {
    std::string mode;
    std::string p_class;  // "1mod4" | "3mod4"
    uint64_t walks = 0;
    uint64_t total_steps = 0;
    double mean_steps = 0;
    double mean_ms = 0;
    double ratio_vs_classic = 1.0;  // mean_ms ratio against classic_h0
};

/// Step/time benchmark on supersingular inputs (the worst case: every walk
/// exhausts its budget). Primes are sampled per congruence class mod 4;
/// mode batches are interleaved across repetitions so clock drift cancels.
/// max_p = 0 means no cap beyond the bit length.
std::vector<BenchRow> bench_steps(int bits, int trials_per_class,
                                  const std::vector<BoundMode>& modes,
                                  uint64_t seed, const Integer& max_p = 0,
                                  int repetitions = 0);

std::string to_string(BoundMode m);
std::optional<BoundMode> bound_mode_from_string(const std::string& s);

}  // namespace volc
