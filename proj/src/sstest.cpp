#include "volc/sstest.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <random>

#include "volc/poly.hpp"

namespace volc {

long step_budget(const Integer& p, BoundMode mode) {
    switch (mode) {
        case BoundMode::classic_h0:
            return h0_classic(p);
        case BoundMode::improved_h2:
            return floor_log2(p) / 2 + 2;
        case BoundMode::improved_h1_fp:
            return height_bound_fp(p).value;
    }
    throw std::invalid_argument("step_budget: unknown mode");
}

namespace {

struct Path {
    Fe prev, cur;
};

// roots of the quadratic Φ₂(j_cur, Y)/(Y − j_prev), smallest first
std::vector<Fe> extend_roots(const Path& path) {
    const Fq& F = *path.cur.field;
    auto cubic = phi2_at(path.cur);
    // synthetic division by (Y − j_prev); Φ₂ symmetry guarantees remainder 0
    Fe q2 = cubic[3];
    Fe q1 = cubic[2] + q2 * path.prev;
    Fe q0 = cubic[1] + q1 * path.prev;
    assert((cubic[0] + q0 * path.prev).is_zero());
    // monic quadratic y² + q1 y + q0
    Fe disc = q1 * q1 - F.from_integer(4) * q0;
    auto sd = F.sqrt(disc);
    if (!sd) return {};
    Fe half = F.from_integer(2).inv();
    Fe r1 = (*sd - q1) * half;
    Fe r2 = (-*sd - q1) * half;
    if (r2 < r1) std::swap(r1, r2);
    if (r1 == r2) return {r1};
    return {r1, r2};
}

}  // namespace

WalkReport supersingularity_test(const Curve& E, const WalkConfig& cfg) {
    const Integer& p = E.field->p();
    if (cfg.bound_mode == BoundMode::improved_h1_fp && E.field->degree() != 1)
        throw std::invalid_argument(
            "supersingularity_test: improved_h1_fp needs an F_p input");

    WalkReport rep;
    rep.step_budget = step_budget(p, cfg.bound_mode) + (cfg.extra_attempt ? 1 : 0);

    // the walk always runs in G2(F_{p^2})
    std::optional<Fq> owned;
    const Fq* f2 = E.field;
    Fe j0;
    if (E.field->degree() == 1) {
        owned.emplace(Fq::make(p, 2));
        f2 = &*owned;
        j0 = f2->make_element(E.j.a);
    } else {
        j0 = E.j;
    }

    RootMultiset initial = phi2_neighbors(j0, cfg.seed);
    if (initial.total_multiplicity() < 3) {
        rep.verdict = WalkReport::Verdict::ordinary;
        rep.detection = Detection{-1, 0, DetectReason::fewer_than_3_initial_roots};
        return rep;
    }
    std::vector<Path> paths;
    for (auto& [r, m] : initial.roots)
        for (int i = 0; i < m; ++i) paths.push_back({j0, r});
    assert(paths.size() == 3);
    rep.steps_taken.assign(3, 0);

    for (long step = 1; step <= rep.step_budget; ++step) {
        std::optional<int> died;
        for (int i = 0; i < 3; ++i) {
            rep.steps_taken[i] = step;
            auto roots = extend_roots(paths[i]);
            if (roots.empty()) {
                if (!died) died = i;
                continue;
            }
            paths[i] = {paths[i].cur, roots.front()};
        }
        if (died) {
            rep.verdict = WalkReport::Verdict::ordinary;
            rep.detection = Detection{*died, step, DetectReason::dead_end_quadratic};
            return rep;
        }
    }
    rep.verdict = WalkReport::Verdict::supersingular;
    return rep;
}

namespace {

struct CmCandidate {
    Integer disc;
    Integer j;
};

// class-number-one discriminants and their j-invariants; the curve with CM
// by disc D reduces supersingularly mod p exactly when (D|p) = -1
const std::array<CmCandidate, 8>& cm_table() {
    static const std::array<CmCandidate, 8> table = {{
        {Integer(-3), Integer(0)},
        {Integer(-8), Integer(8000)},
        {Integer(-7), Integer(-3375)},
        {Integer(-11), Integer(-32768)},
        {Integer(-19), Integer("-884736")},
        {Integer(-43), Integer("-884736000")},
        {Integer(-67), Integer("-147197952000")},
        {Integer(-163), Integer("-262537412640768000")},
    }};
    return table;
}

}  // namespace

Curve make_supersingular(const Fq& fp2) {
    if (fp2.degree() != 2)
        throw std::invalid_argument("make_supersingular: need an F_{p^2} field");
    const Integer& p = fp2.p();
    if (p % 4 == 3) return make_curve(fp2.one(), fp2.zero());
    for (const auto& cand : cm_table()) {
        if (cand.disc % p == 0) continue;
        if (legendre_symbol(cand.disc, p) == -1)
            return curve_from_j(fp2.from_integer(cand.j));
    }
    if (p <= 3000) {
        Fq fp = Fq::make(p, 1);
        uint64_t pu = p.get_ui();
        for (uint64_t i = 0; i < pu; ++i) {
            Curve e = curve_from_j(fp.element_at(i));
            if (is_supersingular_oracle(e))
                return curve_from_j(fp2.from_integer(e.j.a));
        }
    }
    throw std::runtime_error(
        "make_supersingular: no CM construction applies for p=" + p.get_str());
}

std::string to_string(BoundMode m) {
    switch (m) {
        case BoundMode::classic_h0:
            return "classic";
        case BoundMode::improved_h2:
            return "h2";
        case BoundMode::improved_h1_fp:
            return "h1";
    }
    return "?";
}

std::optional<BoundMode> bound_mode_from_string(const std::string& s) {
    if (s == "classic" || s == "h0") return BoundMode::classic_h0;
    if (s == "h2") return BoundMode::improved_h2;
    if (s == "h1") return BoundMode::improved_h1_fp;
    return std::nullopt;
}

std::vector<BenchRow> bench_steps(int bits, int trials_per_class,
                                  const std::vector<BoundMode>& modes,
                                  uint64_t seed, const Integer& max_p,
                                  int repetitions) {
    if (bits < 6) throw std::invalid_argument("bench_steps: need bits >= 6");
    std::mt19937_64 rng(seed);
    Integer lo = Integer(1) << (bits - 1);
    Integer hi = (Integer(1) << bits) - 1;
    if (max_p != 0 && max_p < hi) hi = max_p;
    if (hi <= lo) throw std::invalid_argument("bench_steps: empty prime range");

    auto draw_prime = [&](int residue_mod_4) {
        for (;;) {
            Integer span = hi - lo + 1;
            Integer c = lo + Integer(rng()) % span;
            c -= ((c % 4) - residue_mod_4 + 4) % 4;
            if (c < lo) c += 4;
            if (c > hi || !is_prime(c)) continue;
            return c;
        }
    };

    struct Input {
        int residue;
        Integer p;
        Fq field;
        Curve curve;
    };
    std::vector<Input> inputs;
    for (int residue : {1, 3}) {
        for (int i = 0; i < trials_per_class; ++i) {
            for (;;) {
                Integer p = draw_prime(residue);
                Fq f2 = Fq::make(p, 2);
                try {
                    Curve e = make_supersingular(f2);
                    inputs.push_back(Input{residue, p, std::move(f2), Curve{}});
                    // rebind the curve onto the stored field copy
                    inputs.back().curve = make_supersingular(inputs.back().field);
                    break;
                } catch (const std::runtime_error&) {
                    continue;  // rare: resample the prime
                }
            }
        }
    }

    if (repetitions <= 0) repetitions = bits <= 24 ? 40 : 4;

    struct Acc {
        uint64_t walks = 0, steps = 0;
        double ms = 0;
    };
    std::vector<std::array<Acc, 2>> acc(modes.size());  // [mode][class]

    using clock = std::chrono::steady_clock;
    for (int rep = 0; rep < repetitions; ++rep) {
        for (size_t mi = 0; mi < modes.size(); ++mi) {
            WalkConfig cfg{modes[mi], true, seed};
            for (const Input& in : inputs) {
                auto t0 = clock::now();
                WalkReport r = supersingularity_test(in.curve, cfg);
                auto t1 = clock::now();
                int cls = in.residue == 1 ? 0 : 1;
                acc[mi][cls].walks += 1;
                for (long s : r.steps_taken) acc[mi][cls].steps += s;
                acc[mi][cls].ms +=
                    std::chrono::duration<double, std::milli>(t1 - t0).count();
            }
        }
    }

    std::vector<BenchRow> rows;
    std::array<double, 2> classic_ms{0, 0};
    for (size_t mi = 0; mi < modes.size(); ++mi)
        if (modes[mi] == BoundMode::classic_h0)
            for (int cls = 0; cls < 2; ++cls)
                classic_ms[cls] = acc[mi][cls].ms / acc[mi][cls].walks;
    for (size_t mi = 0; mi < modes.size(); ++mi) {
        for (int cls = 0; cls < 2; ++cls) {
            const Acc& a = acc[mi][cls];
            if (a.walks == 0) continue;
            BenchRow row;
            row.mode = to_string(modes[mi]);
            row.p_class = cls == 0 ? "1mod4" : "3mod4";
            row.walks = a.walks;
            row.total_steps = a.steps;
            row.mean_steps = double(a.steps) / double(a.walks);
            row.mean_ms = a.ms / double(a.walks);
            row.ratio_vs_classic =
                classic_ms[cls] > 0 ? row.mean_ms / classic_ms[cls] : 1.0;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace volc
