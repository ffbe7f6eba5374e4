#pragma once

#include "volc/field.hpp"

namespace volc {

/// Short Weierstrass curve y² = x³ + Ax + B over F_p or F_{p²} (p ≥ 5),
/// nonsingular, j-invariant cached at construction.
struct Curve {
    const Fq* field = nullptr;
    Fe A, B;
    Fe j;
};

/// Long Weierstrass coefficients; kept only for the discriminant formula.
struct LongWeierstrass {
    Fe a1, a2, a3, a4, a6;
};

/// Δ = −b2²b8 + 9 b2 b4 b6 − 8 b4³ − 27 b6² with the standard b-quantities.
Fe long_discriminant(const LongWeierstrass& c);

/// j = 1728·4A³ / (4A³ + 27B²). Rejects singular (A, B).
Fe j_invariant(const Fe& A, const Fe& B);

/// Validates nonsingularity and caches j.
Curve make_curve(const Fe& A, const Fe& B);

/// A representative curve with the given j-invariant: (0,1) for j = 0,
/// (1,0) for j = 1728, else A = 3j(1728−j), B = 2j(1728−j)². One twist
/// is chosen arbitrarily; t² is twist-invariant.
Curve curve_from_j(const Fe& j);

/// j(λ) = 256(λ²−λ+1)³ / (λ²(λ−1)²). Rejects λ ∈ {0, 1}.
Fe j_from_lambda(const Fe& lambda);

/// Exact #E(F_q) by quadratic-character enumeration, q ≤ budget.
Integer point_count(const Curve& E, uint64_t budget = 1'000'000);

/// Frobenius trace t = q + 1 − #E(F_q).
Integer trace(const Curve& E, uint64_t budget = 1'000'000);

/// t ≡ 0 (mod p).
bool is_supersingular_oracle(const Curve& E, uint64_t budget = 1'000'000);

}  // namespace volc
