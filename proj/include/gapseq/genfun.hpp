#pragma once

#include "gapseq/ratfunc.hpp"
#include "gapseq/term.hpp"

namespace gapseq {

/// Second-order recurrence a_n = r a_{n-1} + s a_{n-2} with a_0 = alpha, a_1 = beta.
struct HoradamParams {
    Term alpha;
    Term beta;
    Term r;
    Term s;
    bool operator==(const HoradamParams&) const = default;
};

/// Z: generating function of a_n, (alpha - (alpha r - beta) x) / (1 - r x - s x^2).
RatFunc horadam_gf(const HoradamParams& p);

/// Y: generating function of a_{n+1}, (beta + alpha s x) / (1 - r x - s x^2).
RatFunc horadam_shift_gf(const HoradamParams& p);

/// X: generating function of a_n^2, over 1 - (r^2+s)x - s(r^2+s)x^2 + s^3 x^3.
RatFunc horadam_sq_gf(const HoradamParams& p);

/// W: generating function of a_{n+1}^2, same denominator as X.
RatFunc horadam_sq_shift_gf(const HoradamParams& p);

/// (W - X - Y - Z) / 2: generating function of the signed gap-sum sequence.
RatFunc horadam_gapsum_gf(const HoradamParams& p);

}  // namespace gapseq
