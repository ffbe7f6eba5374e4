#include "volc/field.hpp"

#include <cassert>

namespace volc {

int legendre_symbol(const Integer& a, const Integer& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw std::invalid_argument("legendre_symbol: need odd prime p");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace {

Integer mod_reduce(Integer v, const Integer& p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return r;
}

}  // namespace

Fe Fq::make_element(Integer a, Integer b) const {
    if (degree_ == 1 && b != 0)
        throw std::invalid_argument("make_element: degree-1 field has no s coefficient");
    return Fe{this, mod_reduce(std::move(a), p_), mod_reduce(std::move(b), p_)};
}

Fe Fe::operator+(const Fe& o) const {
    assert(field && field->same_field(*o.field));
    return field->make_element(a + o.a, b + o.b);
}

Fe Fe::operator-(const Fe& o) const {
    assert(field && field->same_field(*o.field));
    return field->make_element(a - o.a, b - o.b);
}

Fe Fe::operator-() const {
    return field->make_element(-a, -b);
}

Fe Fe::operator*(const Fe& o) const {
    assert(field && field->same_field(*o.field));
    if (field->degree() == 1) return field->make_element(a * o.a);
    // (a + b s)(c + d s) = ac + bd·d0 + (ad + bc) s,  s² = d0
    return field->make_element(a * o.a + b * o.b * field->nonresidue(),
                               a * o.b + b * o.a);
}

Fe Fe::inv() const {
    if (is_zero()) throw std::invalid_argument("inv: zero has no inverse");
    const Integer& p = field->p();
    if (field->degree() == 1) {
        Integer r;
        mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        return field->make_element(std::move(r));
    }
    // 1/(a + b s) = (a − b s)/(a² − d b²); the norm is nonzero since d is
    // a nonresidue
    Integer norm = mod_reduce(a * a - field->nonresidue() * b * b, p);
    Integer ninv;
    mpz_invert(ninv.get_mpz_t(), norm.get_mpz_t(), p.get_mpz_t());
    return field->make_element(a * ninv, -b * ninv);
}

Fe Fe::pow(const Integer& e) const {
    if (e < 0) return inv().pow(-e);
    if (field->degree() == 1) {
        Integer r;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), field->p().get_mpz_t());
        return field->make_element(std::move(r));
    }
    Fe result = field->one();
    Fe base = *this;
    size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
        if (i + 1 < nbits) base = base * base;
    }
    return result;
}

std::string Fe::str() const {
    if (field && field->degree() == 2)
        return a.get_str() + "+" + b.get_str() + "*s";
    return a.get_str();
}

Fq::Fq(Integer p, int degree, Integer d)
    : p_(std::move(p)), degree_(degree), d_(std::move(d)) {
    q_ = degree_ == 2 ? p_ * p_ : p_;
    Integer m = q_ - 1;
    two_adicity_ = nu2(m);
    odd_part_ = m >> two_adicity_;
    // fixed nonsquare for Tonelli–Shanks, found deterministically
    if (degree_ == 1) {
        Integer z = 2;
        while (legendre_symbol(z, p_) != -1) ++z;
        nonsquare_a_ = z;
        nonsquare_b_ = 0;
    } else {
        // x = k + s is a nonsquare iff its norm k² − d is a nonresidue mod p
        Integer k = 0;
        while (legendre_symbol(k * k - d_, p_) != -1) ++k;
        nonsquare_a_ = k;
        nonsquare_b_ = 1;
    }
}

Fq Fq::make(const Integer& p, int degree) {
    if (degree != 1 && degree != 2)
        throw std::invalid_argument("Fq::make: degree must be 1 or 2");
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("Fq::make: p must be a prime >= 5");
    Integer d = 0;
    if (degree == 2) {
        d = 2;
        while (legendre_symbol(d, p) != -1) ++d;
    }
    return Fq(p, degree, d);
}

Fe Fq::parse(const std::string& s) const {
    auto plus = s.find('+');
    if (plus == std::string::npos) return make_element(Integer(s));
    auto star = s.find("*s", plus);
    if (star == std::string::npos || degree_ != 2)
        throw std::invalid_argument("Fe parse: bad element literal '" + s + "'");
    return make_element(Integer(s.substr(0, plus)),
                        Integer(s.substr(plus + 1, star - plus - 1)));
}

bool Fq::is_square(const Fe& x) const {
    if (x.is_zero()) return true;
    if (degree_ == 1) return legendre_symbol(x.a, p_) == 1;
    // euler criterion via the norm map: x^((q−1)/2) = N(x)^((p−1)/2)
    Integer norm = mod_reduce(x.a * x.a - d_ * x.b * x.b, p_);
    return legendre_symbol(norm, p_) == 1;
}

std::optional<Fe> Fq::sqrt(const Fe& x) const {
    if (x.is_zero()) return zero();
    if (!is_square(x)) return std::nullopt;
    // Tonelli–Shanks on the group of order q − 1 = 2^s · m
    Fe z{this, nonsquare_a_, nonsquare_b_};
    Fe c = z.pow(odd_part_);
    Fe t = x.pow(odd_part_);
    Fe r = x.pow((odd_part_ + 1) / 2);
    long m = two_adicity_;
    while (!(t == one())) {
        long i = 0;
        Fe probe = t;
        while (!(probe == one())) {
            probe = probe * probe;
            ++i;
        }
        Fe bpow = c;
        for (long k = 0; k < m - i - 1; ++k) bpow = bpow * bpow;
        m = i;
        c = bpow * bpow;
        t = t * c;
        r = r * bpow;
    }
    Fe r2 = -r;
    Fe canonical = r < r2 ? r : r2;
    assert(canonical * canonical == x);
    return canonical;
}

Fe Fq::element_at(uint64_t index) const {
    uint64_t pu = p_.get_ui();
    if (degree_ == 1) return make_element(Integer(static_cast<unsigned long>(index)));
    return make_element(Integer(static_cast<unsigned long>(index % pu)),
                        Integer(static_cast<unsigned long>(index / pu)));
}

uint64_t Fq::index_of(const Fe& x) const {
    if (degree_ == 1) return x.a.get_ui();
    return x.a.get_ui() + x.b.get_ui() * p_.get_ui();
}

}  // namespace volc
