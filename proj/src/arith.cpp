#include "volc/arith.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace volc {

long nu2(const Integer& n) {
    if (n == 0) throw std::invalid_argument("nu2: valuation of 0 is infinite");
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

long floor_log2(const Integer& n) {
    if (n < 1) throw std::invalid_argument("floor_log2: need n >= 1");
    return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
}

long mu_of(const Integer& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("mu_of: need odd p >= 3");
    long mu = 0;
    Integer pow4 = 1;
    while (pow4 < p) {
        pow4 <<= 2;
        ++mu;
    }
    return mu;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt: need n >= 0");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace {

// one strong-pseudoprime round to base a; n odd > 2, n - 1 = 2^s * d
bool mr_round(const Integer& n, const Integer& a, const Integer& d, long s) {
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static constexpr std::array<unsigned, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                        17, 19, 23, 29, 31, 37};
    for (unsigned b : kBases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    Integer d = n - 1;
    long s = nu2(d);
    d >>= s;
    // the 12-base set is a proven deterministic witness set below 2^64
    for (unsigned b : kBases)
        if (!mr_round(n, b, d, s)) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return true;

    static gmp_randclass rng = [] {
        gmp_randclass r(gmp_randinit_mt);
        r.seed(0x9e3779b97f4a7c15ull);
        return r;
    }();
    for (int round = 0; round < 65; ++round) {
        Integer a = 2 + rng.get_z_range(n - 3);
        if (!mr_round(n, a, d, s)) return false;
    }
    return true;
}

namespace {

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t kLimit = 1'000'000;
        std::vector<bool> sieve(kLimit, true);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i < kLimit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < kLimit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// Pollard-Brent rho; returns a nontrivial factor of odd composite n,
// or throws budget_error once the iteration budget is gone.
Integer rho_factor(const Integer& n, uint64_t& budget) {
    for (unsigned c = 1;; ++c) {
        Integer x = 2, y = 2, q = 1, g = 1, xs = x;
        uint64_t r = 1;
        auto step = [&](Integer& v) { v = (v * v + c) % n; };
        while (g == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) step(y);
            for (uint64_t k = 0; k < r && g == 1; k += 128) {
                xs = y;
                uint64_t chunk = std::min<uint64_t>(128, r - k);
                if (chunk > budget) throw budget_error("factorize: rho budget exceeded");
                budget -= chunk;
                for (uint64_t i = 0; i < chunk; ++i) {
                    step(y);
                    Integer diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = q * diff % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r <<= 1;
        }
        if (g == n) {
            // backtrack one by one
            g = 1;
            while (g == 1) {
                step(xs);
                Integer diff = x - xs;
                if (diff < 0) diff = -diff;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
        // cycle found the trivial factor; retry with the next polynomial
    }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned>& out, uint64_t& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Integer g = rho_factor(n, budget);
    factor_rec(g, out, budget);
    factor_rec(n / g, out, budget);
}

}  // namespace

std::vector<Factor> factorize(const Integer& n, uint64_t rho_budget) {
    if (n < 1) throw std::invalid_argument("factorize: need n >= 1");
    std::map<Integer, unsigned> acc;
    Integer rest = n;
    for (uint32_t p : small_primes()) {
        if (Integer(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++acc[p];
        }
    }
    if (rest > 1) {
        if (is_prime(rest))
            ++acc[rest];
        else
            factor_rec(rest, acc, rho_budget);
    }
    std::vector<Factor> out;
    out.reserve(acc.size());
    for (auto& [p, e] : acc) out.push_back({p, e});
    return out;
}

}  // namespace volc
