#include "volc/volcano.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace volc {

VolcanoComponent build_component(const Fq& field, const Fe& j0, uint64_t seed,
                                 uint64_t oracle_budget) {
    VolcanoComponent c;
    c.field = &field;
    std::deque<Fe> queue{j0};
    std::set<Fe> seen{j0};
    while (!queue.empty()) {
        Fe v = queue.front();
        queue.pop_front();
        RootMultiset nb = phi2_neighbors(v, seed);
        for (auto& [u, m] : nb.roots) {
            if (seen.insert(u).second) queue.push_back(u);
        }
        c.adjacency.emplace(v, std::move(nb));
    }
    c.vertices.assign(seen.begin(), seen.end());
    Fe j1728 = field.from_integer(1728);
    for (const Fe& v : c.vertices)
        if (v.is_zero() || v == j1728) c.contains_special_j = true;
    if (field.q() <= oracle_budget) {
        c.trace = trace(curve_from_j(j0), oracle_budget);
        c.trace_sq = c.trace * c.trace;
        c.has_trace = true;
    }
    return c;
}

namespace {

struct StripState {
    const VolcanoComponent* c;
    std::set<Fe> alive;

    int mdeg(const Fe& v) const {
        int d = 0;
        for (auto& [u, m] : c->adjacency.at(v).roots)
            if (alive.count(u)) d += m;
        return d;
    }
    int self_mult(const Fe& v) const { return c->adjacency.at(v).multiplicity_of(v); }
    int simple_deg(const Fe& v) const {
        int d = 0;
        for (auto& [u, m] : c->adjacency.at(v).roots)
            if (!(u == v) && alive.count(u)) ++d;
        return d;
    }

    // surface shape of the remainder, or "" if it is not a legal surface.
    // A vertex still carrying self-roots plus outgoing edges is a surface
    // vertex with unstripped levels below it, so it blocks stopping.
    std::string stop_shape() const {
        for (const Fe& v : alive)
            if (self_mult(v) > 0 && simple_deg(v) > 0) return "";
        size_t n = alive.size();
        if (n == 1) return "vertex";
        bool all1 = true, all2 = true;
        for (const Fe& v : alive) {
            int d = simple_deg(v);
            all1 &= d == 1;
            all2 &= d == 2;
        }
        if (n == 2 && all1) return "edge";
        if (n >= 3 && all2) return "cycle";
        return "";
    }
};

}  // namespace

bool measure_height(VolcanoComponent& c) {
    StripState st{&c, {c.vertices.begin(), c.vertices.end()}};
    std::vector<std::vector<Fe>> stripped_rounds;
    std::string shape;
    for (;;) {
        shape = st.stop_shape();
        if (!shape.empty()) break;
        std::vector<Fe> leaves;
        for (const Fe& v : st.alive)
            if (st.mdeg(v) <= 1) leaves.push_back(v);
        if (leaves.empty() || leaves.size() == st.alive.size()) {
            c.measured_ok = false;
            c.height = -1;
            return false;  // stripping stalled: not a volcano
        }
        stripped_rounds.push_back(leaves);
        for (const Fe& v : leaves) st.alive.erase(v);
    }
    long h = static_cast<long>(stripped_rounds.size());
    c.height = h;
    c.surface_shape = shape;
    c.measured_ok = true;
    c.levels.clear();
    for (const Fe& v : st.alive) c.levels[v] = 0;
    for (size_t r = 0; r < stripped_rounds.size(); ++r)
        for (const Fe& v : stripped_rounds[r])
            c.levels[v] = h - static_cast<long>(r);
    return true;
}

VerifyReport verify_volcano(const VolcanoComponent& c) {
    VerifyReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    if (!c.measured_ok) {
        fail("stripping stalled: component is not a volcano");
        return rep;
    }
    long h = c.height;
    for (const Fe& v : c.vertices) {
        long lv = c.levels.at(v);
        const RootMultiset& nb = c.adjacency.at(v);
        int total = nb.total_multiplicity();
        int self = nb.multiplicity_of(v);
        int up = 0, down = 0, lateral = 0, simple_deg = 0;
        for (auto& [u, m] : nb.roots) {
            if (u == v) continue;
            ++simple_deg;
            long lu = c.levels.at(u);
            if (lu == lv - 1)
                up += m;
            else if (lu == lv + 1)
                down += m;
            else
                lateral += m;
        }
        if (h == 0) {
            if (simple_deg > 2)
                fail("h=0 vertex " + v.str() + " has simple degree > 2");
            continue;
        }
        if (lv == h) {
            if (total != 1)
                fail("floor vertex " + v.str() + " has degree " +
                     std::to_string(total) + " (want 1)");
            if (up != 1) fail("floor vertex " + v.str() + " edge does not ascend");
        } else {
            if (total != 3)
                fail("vertex " + v.str() + " at level " + std::to_string(lv) +
                     " has degree " + std::to_string(total) + " (want 3)");
        }
        if (lv > 0 && lv < h) {
            if (self != 0) fail("mid-level vertex " + v.str() + " has a self-loop");
            if (up != 1)
                fail("mid-level vertex " + v.str() + " has " + std::to_string(up) +
                     " upward edges (want 1)");
            if (lateral != 0)
                fail("mid-level vertex " + v.str() + " has lateral edges");
        }
        if (lv == 0) {
            if (up != 0 || (lateral != 0))
                fail("surface vertex " + v.str() + " has edges outside V0/V1");
        }
    }
    return rep;
}

std::vector<VolcanoComponent> all_components(const Fq& field, uint64_t seed,
                                             uint64_t oracle_budget) {
    std::vector<VolcanoComponent> comps;
    std::set<Fe> seen;
    uint64_t q = field.q().get_ui();
    for (uint64_t i = 0; i < q; ++i) {
        Fe j = field.element_at(i);
        if (seen.count(j)) continue;
        comps.push_back(build_component(field, j, seed, oracle_budget));
        for (const Fe& v : comps.back().vertices) seen.insert(v);
    }
    return comps;
}

SweepReport sweep(const Integer& prime_limit, bool fp2_mode, uint64_t seed) {
    SweepReport rep;
    rep.limit = prime_limit;
    rep.fp2 = fp2_mode;
    auto note = [&](const Integer& p, std::string msg) {
        rep.violations.push_back("p=" + p.get_str() + ": " + std::move(msg));
    };
    for (Integer p = 5; p <= prime_limit; ++p) {
        if (!is_prime(p)) continue;
        Fq field = Fq::make(p, fp2_mode ? 2 : 1);
        if (field.q() > 10'000)
            throw budget_error("sweep: field size exceeds the full-graph budget");
        ++rep.primes;
        long bound = fp2_mode ? bound_fp2(p).value : height_bound_fp(p).value;
        auto comps = all_components(field, seed);
        std::map<Integer, long> max_h_by_tracesq;
        for (auto& c : comps) {
            if (!c.has_trace) {
                note(p, "component missing oracle trace");
                continue;
            }
            if (c.trace % p == 0) continue;  // supersingular component
            ++rep.components;
            if (!measure_height(c)) {
                note(p, "component of j=" + c.vertices.front().str() +
                            " is not strippable to a surface");
                continue;
            }
            // (a) the global case bound, special components included
            if (c.height > bound)
                note(p, "height " + std::to_string(c.height) + " exceeds bound " +
                            std::to_string(bound));
            if (c.contains_special_j) continue;
            // (b) per-trace e-value bound
            long e = e_value(field.q(), c.trace);
            if (c.height > e / 2)
                note(p, "height " + std::to_string(c.height) + " exceeds e/2 = " +
                            std::to_string(e / 2) + " for t=" + c.trace.get_str());
            VerifyReport v = verify_volcano(c);
            if (!v.ok)
                for (auto& msg : v.violations) note(p, msg);
            else
                ++rep.volcanoes_verified;
            auto [it, fresh] = max_h_by_tracesq.emplace(c.trace_sq, c.height);
            if (!fresh) it->second = std::max(it->second, c.height);
        }
        // (c) Prop-2 exactness per admissible even trace class
        const Integer& q = field.q();
        for (Integer t = 2; t * t < 4 * q; t += 2) {
            if (t % p == 0) continue;
            long expected = max_height_from_trace(q, t);
            auto it = max_h_by_tracesq.find(t * t);
            if (it == max_h_by_tracesq.end()) {
                // legitimate only when the class is anchored at j = 0 or 1728
                Integer dk = fundamental_discriminant(t * t - 4 * q).d_k;
                if (dk != -3 && dk != -4)
                    note(p, "trace class t=" + t.get_str() + " not found in any component");
            } else if (it->second != expected) {
                note(p, "trace class t=" + t.get_str() + ": max height " +
                            std::to_string(it->second) + " != Prop-2 value " +
                            std::to_string(expected));
            }
        }
    }
    return rep;
}

std::string to_dot(const std::vector<VolcanoComponent>& comps) {
    std::ostringstream os;
    os << "graph g2 {\n";
    int ci = 0;
    for (const auto& c : comps) {
        os << "  subgraph cluster_" << ci++ << " {\n";
        os << "    label=\"t^2=" << (c.has_trace ? c.trace_sq.get_str() : "?")
           << " h=" << (c.measured_ok ? std::to_string(c.height) : "?") << "\";\n";
        std::map<long, std::vector<const Fe*>> by_level;
        for (const Fe& v : c.vertices) {
            os << "    \"" << v.str() << "\"";
            auto it = c.levels.find(v);
            if (it != c.levels.end()) {
                os << " [label=\"" << v.str() << "\\nL" << it->second << "\"]";
                by_level[it->second].push_back(&v);
            }
            os << ";\n";
        }
        for (auto& [lvl, vs] : by_level) {
            os << "    { rank=same;";
            for (auto* v : vs) os << " \"" << v->str() << "\";";
            os << " }\n";
        }
        std::set<std::pair<std::string, std::string>> done;
        for (const Fe& v : c.vertices) {
            for (auto& [u, m] : c.adjacency.at(v).roots) {
                std::string a = v.str(), b = u.str();
                if (b < a) std::swap(a, b);
                if (!done.emplace(a, b).second) continue;
                os << "    \"" << a << "\" -- \"" << b << "\"";
                if (m > 1 && !(u == v)) os << " [label=\"x" << m << "\"]";
                os << ";\n";
            }
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace volc
