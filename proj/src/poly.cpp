#include "volc/poly.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace volc {

namespace {

// Φ₂(X,Y) = X³ + Y³ − X²Y² + 1488(X²Y + XY²) − 162000(X² + Y²)
//           + 40773375 XY + 8748000000 (X + Y) − 157464000000000
const Integer kC1488("1488");
const Integer kC162000("162000");
const Integer kC40773375("40773375");
const Integer kC8748e6("8748000000");
const Integer kC157464e9("157464000000000");

using Poly = std::vector<Fe>;  // ascending coefficients

void trim(Poly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly make_monic(Poly f) {
    trim(f);
    if (f.empty()) return f;
    Fe il = f.back().inv();
    for (Fe& c : f) c = c * il;
    return f;
}

// remainder of a modulo monic m
Poly poly_mod(Poly a, const Poly& m) {
    trim(a);
    int dm = degree(m);
    while (degree(a) >= dm) {
        Fe c = a.back();
        size_t shift = a.size() - m.size();
        if (!c.is_zero())
            for (size_t i = 0; i < m.size(); ++i)
                a[shift + i] = a[shift + i] - c * m[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const Fq& F) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    }
    return poly_mod(std::move(r), m);
}

// base^e mod m (m monic)
Poly poly_powmod(const Poly& base, const Integer& e, const Poly& m, const Fq& F) {
    Poly r{F.one()};
    Poly b = poly_mod(base, m);
    size_t nbits = e > 0 ? mpz_sizeinbase(e.get_mpz_t(), 2) : 0;
    for (size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = poly_mulmod(r, b, m, F);
        if (i + 1 < nbits) b = poly_mulmod(b, b, m, F);
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly m = make_monic(b);
        a = poly_mod(std::move(a), m);
        b = std::move(a);
        a = std::move(m);
    }
    return make_monic(std::move(a));
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), b[0].field->zero());
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    trim(a);
    return a;
}

// exact division by monic d
Poly poly_divide(Poly a, const Poly& d) {
    trim(a);
    Poly q(a.size() - d.size() + 1, a[0].field->zero());
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Fe c = a[i + d.size() - 1];
        q[i] = c;
        if (c.is_zero()) continue;
        for (size_t k = 0; k < d.size(); ++k)
            a[i + k] = a[i + k] - c * d[k];
    }
    return q;
}

// roots of a monic quadratic y² + b y + c (char ≥ 5)
void quadratic_roots(const Fe& c, const Fe& b, std::vector<std::pair<Fe, int>>& out) {
    const Fq& F = *b.field;
    Fe four = F.from_integer(4);
    Fe disc = b * b - four * c;
    auto sd = F.sqrt(disc);
    if (!sd) return;
    Fe half = F.from_integer(2).inv();
    if (sd->is_zero()) {
        out.emplace_back((-b) * half, 2);
        return;
    }
    out.emplace_back((*sd - b) * half, 1);
    out.emplace_back((-*sd - b) * half, 1);
}

// distinct roots of a monic squarefree fully-split polynomial of degree ≤ 3
void split_all(const Poly& g, std::mt19937_64& rng, const Fq& F,
               std::vector<std::pair<Fe, int>>& out) {
    int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.emplace_back(-g[0], 1);
        return;
    }
    if (d == 2) {
        quadratic_roots(g[0], g[1], out);
        return;
    }
    // Cantor–Zassenhaus degree-one split: gcd((Y+δ)^((q−1)/2) − 1, g)
    const Integer half = (F.q() - 1) / 2;
    for (;;) {
        Integer da(static_cast<unsigned long>(rng() % 0xffffffffUL));
        Integer db(static_cast<unsigned long>(rng() % 0xffffffffUL));
        Fe delta = F.degree() == 2 ? F.make_element(da, db) : F.make_element(da);
        Poly shifted{delta, F.one()};
        Poly t = poly_powmod(shifted, half, g, F);
        Poly w = poly_gcd(poly_sub(std::move(t), {F.one()}), g);
        int dw = degree(w);
        if (dw <= 0 || dw >= d) continue;
        split_all(w, rng, F, out);
        split_all(poly_divide(g, w), rng, F, out);
        return;
    }
}

// multiplicity of root r in f (possibly non-monic)
int root_multiplicity(const Poly& f, const Fe& r) {
    Poly cur = f;
    int mult = 0;
    while (degree(cur) >= 1) {
        // synthetic division of cur (ascending) by (Y − r), remainder last
        Poly quo(cur.size() - 1, r.field->zero());
        Fe rem = cur.back();
        for (int i = static_cast<int>(cur.size()) - 2; i >= 0; --i) {
            quo[i] = rem;
            rem = cur[i] + rem * r;
        }
        if (!rem.is_zero()) break;
        ++mult;
        cur = std::move(quo);
    }
    return mult;
}

}  // namespace

std::array<Fe, 4> phi2_at(const Fe& j) {
    const Fq& F = *j.field;
    Fe j2 = j * j;
    Fe j3 = j2 * j;
    Fe c2 = F.from_integer(kC1488) * j - j2 - F.from_integer(kC162000);
    Fe c1 = F.from_integer(kC1488) * j2 + F.from_integer(kC40773375) * j +
            F.from_integer(kC8748e6);
    Fe c0 = j3 - F.from_integer(kC162000) * j2 + F.from_integer(kC8748e6) * j -
            F.from_integer(kC157464e9);
    return {c0, c1, c2, F.one()};
}

Fe phi2_eval(const Fe& j1, const Fe& j2) {
    auto c = phi2_at(j1);
    return ((c[3] * j2 + c[2]) * j2 + c[1]) * j2 + c[0];
}

RootMultiset roots_deg_le3(const std::vector<Fe>& coeffs, uint64_t rng_seed) {
    if (coeffs.empty() || coeffs.size() > 4)
        throw std::invalid_argument("roots_deg_le3: need 1..4 coefficients");
    if (coeffs.back().is_zero())
        throw std::invalid_argument("roots_deg_le3: leading coefficient is zero");
    const Fq& F = *coeffs.back().field;
    Poly f(coeffs.begin(), coeffs.end());

    RootMultiset out;
    int d = degree(f);
    if (d == 0) return out;

    Poly monic = make_monic(f);
    std::vector<std::pair<Fe, int>> distinct;
    if (d == 1) {
        distinct.emplace_back(-monic[0], 1);
    } else if (d == 2) {
        quadratic_roots(monic[0], monic[1], distinct);
    } else {
        // g carries each rational root exactly once, whatever its
        // multiplicity in f
        Poly y{F.zero(), F.one()};
        Poly yq = poly_powmod(y, F.q(), monic, F);
        Poly g = poly_gcd(poly_sub(std::move(yq), y), monic);
        std::mt19937_64 rng(rng_seed);
        split_all(g, rng, F, distinct);
    }

    for (auto& [r, m] : distinct) {
        int mult = d <= 2 ? m : root_multiplicity(f, r);
        out.roots.emplace_back(r, mult);
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

RootMultiset phi2_neighbors(const Fe& j, uint64_t rng_seed) {
    auto c = phi2_at(j);
    return roots_deg_le3({c[0], c[1], c[2], c[3]}, rng_seed);
}

}  // namespace volc
