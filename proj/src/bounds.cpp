#include "volc/bounds.hpp"

#include <cassert>

namespace volc {

long e_value(const Integer& q, const Integer& t) {
    Integer d = t * t - 4 * q;
    if (d == 0) throw std::invalid_argument("e_value: t^2 = 4q has infinite valuation");
    return nu2(d);
}

namespace {

void require_odd_prime(const Integer& p, long at_least) {
    if (p < at_least || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
        throw std::invalid_argument("expected an odd prime >= " +
                                    Integer(at_least).get_str());
}

}  // namespace

long e_bound_fp2(const Integer& p) { return floor_log2(p) + 4; }

long h0_classic(const Integer& p) { return floor_log2(p) + 1; }

HeightBound bound_fp2(const Integer& p) {
    require_odd_prime(p, 3);
    HeightBound hb;
    hb.q_kind = QKind::prime_square;
    hb.bound_case = BoundCase::fp2;
    hb.value = floor_log2(p) / 2 + 2;
    return hb;
}

Integer tightness_witness_fp2(const Integer& p) {
    require_odd_prime(p, 3);
    long f = floor_log2(p);
    Integer t = 2 * ((Integer(1) << (f + 1)) - p);
    return t;
}

std::vector<Integer> lift_2adic(const Integer& p) {
    if (p % 8 != 1) throw std::invalid_argument("lift_2adic: need p = 1 (mod 8)");
    long mu = mu_of(p);
    std::vector<Integer> a;
    a.reserve(mu - 1);
    a.emplace_back(1);  // a_3
    for (long j = 4; j <= mu + 1; ++j) {
        const Integer& prev = a.back();
        Integer diff = prev * prev - p;
        if (mpz_divisible_2exp_p(diff.get_mpz_t(), j))
            a.push_back(prev);
        else
            a.push_back((Integer(1) << (j - 2)) - prev);
    }
    return a;
}

LiftResult select_bp(const Integer& p) {
    require_odd_prime(p, 17);
    LiftResult r;
    r.p = p;
    r.mu = mu_of(p);
    r.a_seq = lift_2adic(p);
    const Integer& a = r.a_seq.back();
    Integer flipped = (Integer(1) << r.mu) - a;
    if (flipped * flipped < p && nu2(p - a * a) < nu2(p - flipped * flipped)) {
        r.branch = LiftResult::Branch::flipped_to_2mu_minus_a;
        r.b_p = flipped;
    } else {
        r.branch = LiftResult::Branch::kept_a;
        r.b_p = a;
        // equal valuations would contradict the Theorem 2 proof
        assert(!(flipped * flipped < p) ||
               nu2(p - a * a) != nu2(p - flipped * flipped));
    }
    r.nu = nu2(p - r.b_p * r.b_p);
    r.e_max = r.nu + 2;
    r.h1 = r.nu / 2 + 1;
    return r;
}

HeightBound height_bound_fp(const Integer& p) {
    require_odd_prime(p, 5);
    HeightBound hb;
    hb.q_kind = QKind::prime;
    if (p % 4 == 3) {
        hb.bound_case = BoundCase::mod4_3;
        hb.value = 1;
    } else if (p % 8 == 5) {
        hb.bound_case = BoundCase::mod8_5;
        hb.value = 2;
    } else {
        hb.bound_case = BoundCase::mod8_1;
        hb.certificate = select_bp(p);
        hb.value = hb.certificate->h1;
    }
    return hb;
}

EmaxResult emax_bruteforce(const Integer& q, const Integer& p) {
    if (!(q == p || q == p * p))
        throw std::invalid_argument("emax_bruteforce: q must be p or p^2");
    require_odd_prime(p, 5);
    if (2 * isqrt(q) > 100'000'000)
        throw budget_error("emax_bruteforce: scan range exceeds budget");
    // t = 2 t0; odd t give valuation 0 and never win
    Integer t0_max = isqrt(q);
    if (t0_max * t0_max == q) t0_max -= 1;  // |t| < 2√q when q = p²
    EmaxResult best{0, Integer(0)};
    for (Integer t0 = 1; t0 <= t0_max; ++t0) {
        if (q != p && t0 % p == 0) continue;  // t = 2t0 = 0 (mod p)
        long e = 2 + nu2(t0 * t0 - q);
        if (e > best.e_max) {
            best.e_max = e;
            best.t = 2 * t0;
        }
    }
    return best;
}

EmaxResult emax_bruteforce(const Integer& q) {
    if (is_prime(q)) return emax_bruteforce(q, q);
    Integer p = isqrt(q);
    if (p * p == q && is_prime(p)) return emax_bruteforce(q, p);
    throw std::invalid_argument("emax_bruteforce: q is neither a prime nor a prime square");
}

FundamentalDiscriminant fundamental_discriminant(const Integer& D) {
    if (D >= 0) throw std::invalid_argument("fundamental_discriminant: need D < 0");
    Integer m = ((D % 4) + 4) % 4;
    if (m != 0 && m != 1)
        throw std::invalid_argument("fundamental_discriminant: need D = 0 or 1 (mod 4)");
    Integer n = -D;
    Integer square_part = 1, squarefree = 1;
    for (const Factor& f : factorize(n)) {
        for (unsigned i = 0; i + 1 < f.exponent; i += 2) square_part *= f.prime;
        if (f.exponent % 2) squarefree *= f.prime;
    }
    Integer d0 = -squarefree;
    FundamentalDiscriminant out;
    if (((d0 % 4) + 4) % 4 == 1) {
        out.d_k = d0;
        out.conductor = square_part;
    } else {
        // d0 = 2, 3 (mod 4): the square part must be even here
        out.d_k = 4 * d0;
        out.conductor = square_part / 2;
        assert(square_part % 2 == 0);
    }
    assert(out.conductor * out.conductor * out.d_k == D);
    return out;
}

long max_height_from_trace(const Integer& q, const Integer& t) {
    Integer p = is_prime(q) ? q : isqrt(q);
    if (t % p == 0)
        throw std::invalid_argument("max_height_from_trace: supersingular trace");
    Integer D = t * t - 4 * q;
    if (D >= 0) throw std::invalid_argument("max_height_from_trace: |t| must be < 2*sqrt(q)");
    auto fd = fundamental_discriminant(D);
    return fd.conductor == 1 ? 0 : nu2(fd.conductor);
}

}  // namespace volc
