#pragma once

#include <optional>
#include <string>

#include "volc/arith.hpp"

namespace volc {

/// Legendre symbol (a|p) ∈ {−1, 0, 1} for odd prime p; equals
/// a^((p−1)/2) mod p lifted to {−1, 0, 1}.
int legendre_symbol(const Integer& a, const Integer& p);

class Fq;

/// Element of F_p or F_{p²} = F_p(√d), stored as a + b·√d with coefficients
/// reduced to [0, p). Equality is coefficient-wise; the ordering is
/// lexicographic on (a, b), which fixes the canonical square root sign and
/// the walk's deterministic neighbor choice. Elements do not own their
/// field; the Fq must outlive them.
struct Fe {
    const Fq* field = nullptr;
    Integer a, b;

    bool is_zero() const { return a == 0 && b == 0; }

    bool operator==(const Fe& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Fe& o) const { return !(*this == o); }
    bool operator<(const Fe& o) const { return a != o.a ? a < o.a : b < o.b; }

    Fe operator+(const Fe& o) const;
    Fe operator-(const Fe& o) const;
    Fe operator*(const Fe& o) const;
    Fe operator-() const;
    Fe inv() const;
    Fe pow(const Integer& e) const;

    /// "c0" (degree 1) or "c0+c1*s" (degree 2) — the wire form used in
    /// JSON and DOT output.
    std::string str() const;
};

/// F_p (degree 1) or F_{p²} = F_p[x]/(x² − d) (degree 2), p odd prime ≥ 5,
/// d the smallest positive quadratic nonresidue mod p. Immutable after
/// construction; all element operations are const.
class Fq {
  public:
    /// Validates p (primality, p ≥ 5) and, for degree 2, picks d.
    static Fq make(const Integer& p, int degree);

    const Integer& p() const { return p_; }
    int degree() const { return degree_; }
    /// Defining nonresidue d; only meaningful for degree 2.
    const Integer& nonresidue() const { return d_; }
    /// Field size q = p^degree.
    const Integer& q() const { return q_; }

    bool same_field(const Fq& o) const {
        return this == &o || (p_ == o.p_ && degree_ == o.degree_);
    }

    Fe make_element(Integer a, Integer b = 0) const;
    Fe zero() const { return make_element(0); }
    Fe one() const { return make_element(1); }
    /// Embeds an integer (e.g. a Φ₂ coefficient) into the field.
    Fe from_integer(const Integer& n) const { return make_element(n); }

    /// Parses the str() wire form.
    Fe parse(const std::string& s) const;

    /// Canonical square root (lexicographically smaller of {r, −r}),
    /// or nullopt when x is a nonsquare. Tonelli–Shanks in the cyclic
    /// group of order q − 1; works for both degrees.
    std::optional<Fe> sqrt(const Fe& x) const;

    bool is_square(const Fe& x) const;

    /// Elements in a fixed deterministic order (index = a + b·p);
    /// only for enumeration-budget fields.
    Fe element_at(uint64_t index) const;
    uint64_t index_of(const Fe& x) const;

  private:
    Fq(Integer p, int degree, Integer d);

    Integer p_;
    int degree_;
    Integer d_;
    Integer q_;
    // Tonelli–Shanks precomputation: q − 1 = 2^s · m, (za, zb) a fixed
    // nonsquare (coefficients only, so Fq stays safely copyable)
    long two_adicity_;
    Integer odd_part_;
    Integer nonsquare_a_, nonsquare_b_;

    friend struct Fe;
};

}  // namespace volc
