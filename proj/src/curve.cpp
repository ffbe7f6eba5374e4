#include "volc/curve.hpp"

#include <vector>

namespace volc {

Fe long_discriminant(const LongWeierstrass& c) {
    const Fq& F = *c.a1.field;
    Fe two = F.from_integer(2), three = F.from_integer(3), four = F.from_integer(4);
    Fe b2 = c.a1 * c.a1 + four * c.a2;
    Fe b4 = c.a1 * c.a3 + two * c.a4;
    Fe b6 = c.a3 * c.a3 + four * c.a6;
    Fe b8 = c.a1 * c.a1 * c.a6 + four * c.a2 * c.a6 - c.a1 * c.a3 * c.a4 +
            c.a2 * c.a3 * c.a3 - c.a4 * c.a4;
    Fe nine = three * three;
    Fe eight = four * two;
    Fe twentyseven = nine * three;
    return -(b2 * b2 * b8) + nine * b2 * b4 * b6 - eight * b4 * b4 * b4 -
           twentyseven * b6 * b6;
}

namespace {

Fe short_disc_term(const Fe& A, const Fe& B) {
    const Fq& F = *A.field;
    return F.from_integer(4) * A * A * A + F.from_integer(27) * B * B;
}

}  // namespace

Fe j_invariant(const Fe& A, const Fe& B) {
    const Fq& F = *A.field;
    Fe denom = short_disc_term(A, B);
    if (denom.is_zero()) throw std::invalid_argument("j_invariant: singular curve");
    Fe fourA3 = F.from_integer(4) * A * A * A;
    return F.from_integer(1728) * fourA3 * denom.inv();
}

Curve make_curve(const Fe& A, const Fe& B) {
    return Curve{A.field, A, B, j_invariant(A, B)};
}

Curve curve_from_j(const Fe& j) {
    const Fq& F = *j.field;
    Fe j1728 = F.from_integer(1728);
    if (j.is_zero()) return make_curve(F.zero(), F.one());
    if (j == j1728) return make_curve(F.one(), F.zero());
    Fe k = j1728 - j;
    Fe A = F.from_integer(3) * j * k;
    Fe B = F.from_integer(2) * j * k * k;
    return make_curve(A, B);
}

Fe j_from_lambda(const Fe& lambda) {
    const Fq& F = *lambda.field;
    if (lambda.is_zero() || lambda == F.one())
        throw std::invalid_argument("j_from_lambda: lambda must avoid {0, 1}");
    Fe num = lambda * lambda - lambda + F.one();
    num = F.from_integer(256) * num * num * num;
    Fe lm1 = lambda - F.one();
    Fe den = lambda * lambda * lm1 * lm1;
    return num * den.inv();
}

Integer point_count(const Curve& E, uint64_t budget) {
    const Fq& F = *E.field;
    if (F.q() > budget)
        throw budget_error("point_count: field size exceeds enumeration budget");
    uint64_t q = F.q().get_ui();

    // mark the nonzero squares once, then read the character off the table
    std::vector<uint8_t> is_sq(q, 0);
    for (uint64_t i = 0; i < q; ++i) {
        Fe y = F.element_at(i);
        is_sq[F.index_of(y * y)] = 1;
    }
    uint64_t count = 1;  // point at infinity
    for (uint64_t i = 0; i < q; ++i) {
        Fe x = F.element_at(i);
        Fe v = (x * x + E.A) * x + E.B;
        if (v.is_zero())
            count += 1;
        else if (is_sq[F.index_of(v)])
            count += 2;
    }
    return Integer(static_cast<unsigned long>(count));
}

Integer trace(const Curve& E, uint64_t budget) {
    return E.field->q() + 1 - point_count(E, budget);
}

bool is_supersingular_oracle(const Curve& E, uint64_t budget) {
    return trace(E, budget) % E.field->p() == 0;
}

}  // namespace volc
