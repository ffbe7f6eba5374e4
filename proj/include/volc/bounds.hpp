#pragma once

#include <optional>
#include <vector>

#include "volc/arith.hpp"

namespace volc {

/// State of the 2-adic lifting run for p ≡ 1 (mod 8): the square-root
/// lift a₃..a_{μ+1} of p modulo powers of two, the selected branch,
/// b_p, and the derived quantities.
struct LiftResult {
    enum class Branch { kept_a, flipped_to_2mu_minus_a };

    Integer p;
    long mu = 0;
    std::vector<Integer> a_seq;  // a_3 .. a_{mu+1}
    Branch branch = Branch::kept_a;
    Integer b_p;
    long nu = 0;     // ν₂(p − b_p²)
    long e_max = 0;  // ν₂(4(p − b_p²)) = nu + 2
    long h1 = 0;     // ⌊nu/2⌋ + 1 = ⌊e_max/2⌋
};

enum class QKind { prime, prime_square };
enum class BoundCase { mod4_3, mod8_5, mod8_1, fp2 };

struct HeightBound {
    QKind q_kind = QKind::prime;
    BoundCase bound_case = BoundCase::mod4_3;
    long value = 0;
    std::optional<LiftResult> certificate;  // present for mod8_1
};

/// e(q;t) = ν₂(t² − 4q). Rejects the supersingular boundary t² = 4q.
long e_value(const Integer& q, const Integer& t);

/// h₂ = ⌊⌊log₂ p⌋ / 2⌋ + 2, the F_{p²} height bound.
HeightBound bound_fp2(const Integer& p);

/// ⌊log₂ p⌋ + 4, the underlying bound on e(p²;t).
long e_bound_fp2(const Integer& p);

/// ⌊log₂ p⌋ + 1, the classic walk-step bound.
long h0_classic(const Integer& p);

/// t = 2(2^{f+1} − p) with f = ⌊log₂ p⌋; attains e(p²;t) = f + 4 exactly.
Integer tightness_witness_fp2(const Integer& p);

/// The lift a₃..a_{μ+1}: a₃ = 1; a_j stays when a_{j-1}² ≡ p (mod 2^j),
/// else flips to 2^{j-2} − a_{j-1}. Rejects p ≢ 1 (mod 8).
std::vector<Integer> lift_2adic(const Integer& p);

/// Branch selection: b_p = 2^μ − a_{μ+1} when that candidate squares below p
/// and strictly wins on ν₂(p − ·²), else b_p = a_{μ+1}. Fills nu, e_max, h1.
LiftResult select_bp(const Integer& p);

/// Case bound over F_p: 1 for p ≡ 3 (mod 4), 2 for p ≡ 5 (mod 8),
/// h₁ with a LiftResult certificate for p ≡ 1 (mod 8).
HeightBound height_bound_fp(const Integer& p);

struct EmaxResult {
    long e_max = 0;
    Integer t;  // smallest positive witness
};

/// Exact max of e(q;t) over even t with t² < 4q, t ≢ 0 (mod p), by full
/// scan (odd t give 0). Budget: 2√q ≤ 10⁸.
EmaxResult emax_bruteforce(const Integer& q, const Integer& p);
/// Same, inferring p from q ∈ {p, p²}.
EmaxResult emax_bruteforce(const Integer& q);

struct FundamentalDiscriminant {
    Integer d_k;        // fundamental discriminant
    Integer conductor;  // f with D = f²·d_k
};

/// Unique splitting D = f²·D_K of a negative discriminant (D ≡ 0, 1 mod 4).
FundamentalDiscriminant fundamental_discriminant(const Integer& D);

/// ν₂((t² − 4q)/D_K)/2 = ν₂(f): the Prop-2 height of the 2-maximal-surface
/// component with trace ±t, and an upper bound for every such component.
long max_height_from_trace(const Integer& q, const Integer& t);

}  // namespace volc
