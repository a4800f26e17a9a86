#include "gapseq/genfun.hpp"

namespace gapseq {
namespace {

Rat q(const Term& t) { return Rat(t); }

Poly linear_den(const HoradamParams& p) { return Poly{1, -q(p.r), -q(p.s)}; }

// 1 - (r^2+s)x - s(r^2+s)x^2 + s^3 x^3
Poly square_den(const HoradamParams& p) {
    const Term t = p.r * p.r + p.s;
    return Poly{1, -q(t), -q(p.s * t), q(p.s * p.s * p.s)};
}

}  // namespace

RatFunc horadam_gf(const HoradamParams& p) {
    return RatFunc(Poly{q(p.alpha), -q(p.alpha * p.r - p.beta)}, linear_den(p));
}

RatFunc horadam_shift_gf(const HoradamParams& p) {
    return RatFunc(Poly{q(p.beta), q(p.alpha * p.s)}, linear_den(p));
}

RatFunc horadam_sq_gf(const HoradamParams& p) {
    const Term& a = p.alpha;
    const Term& b = p.beta;
    const Term& r = p.r;
    const Term& s = p.s;
    Poly num{q(a * a), -q(a * a * (r * r + s) - b * b), -q(s * (a * a * r * r - 2 * a * b * r + b * b))};
    return RatFunc(std::move(num), square_den(p));
}

RatFunc horadam_sq_shift_gf(const HoradamParams& p) {
    const Term& a = p.alpha;
    const Term& b = p.beta;
    const Term& r = p.r;
    const Term& s = p.s;
    Poly num{q(b * b), q(s * (a * a * s + 2 * a * b * r - b * b)), -q(a * a * s * s * s)};
    return RatFunc(std::move(num), square_den(p));
}

RatFunc horadam_gapsum_gf(const HoradamParams& p) {
    const RatFunc w = horadam_sq_shift_gf(p);
    const RatFunc x = horadam_sq_gf(p);
    const RatFunc y = horadam_shift_gf(p);
    const RatFunc z = horadam_gf(p);
    return (w - x - y - z) * Rat(1, 2);
}

}  // namespace gapseq
