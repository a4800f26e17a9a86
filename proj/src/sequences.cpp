#include "gapseq/sequences.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "gapseq/combinatorics.hpp"
#include "gapseq/folding.hpp"

namespace gapseq {

namespace detail {
std::vector<Term> prime_range(std::uint64_t n0, std::size_t count);
}

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void validate_poly(family::Poly& p) {
    while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
    const std::size_t degree = p.coeffs.empty() ? 0 : p.coeffs.size() - 1;

    std::vector<Rat> values;
    for (std::size_t n = 0; n <= degree + 1; ++n) {
        values.push_back(eval_poly(p.coeffs, Rat(n)));
        if (!is_integer(values.back()))
            throw InvalidSpec("poly is not integer-valued at n = " + std::to_string(n));
    }
    // Binomial basis: f(n) = sum_i d_i C(n, i) with d_i = (Delta^i f)(0).
    // f is integer-valued on the naturals iff every d_i is an integer.
    std::vector<Rat> diff(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(degree + 1));
    for (std::size_t i = 0; i <= degree; ++i) {
        if (!is_integer(diff[0]))
            throw InvalidSpec("poly has non-integral binomial-basis coefficient at C(n, " + std::to_string(i) + ")");
        for (std::size_t j = 0; j + 1 < diff.size() - i; ++j) diff[j] = diff[j + 1] - diff[j];
    }
}

std::vector<Term> horadam_run(const family::Horadam& h, std::uint64_t n0, std::size_t count) {
    std::vector<Term> out;
    out.reserve(count);
    Term prev = h.alpha;
    Term cur = h.beta;
    const std::uint64_t first = n0 + h.shift;
    for (std::uint64_t i = 0; out.size() < count; ++i) {
        if (i >= first) out.push_back(prev);
        Term next = h.r * cur + h.s * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

std::string join(const auto& items) {
    std::string s;
    for (const auto& x : items) {
        if (!s.empty()) s += ',';
        s += to_string(x);
    }
    return s;
}

}  // namespace

SeqSpec::SeqSpec(family::Linear v) : v_(std::move(v)) {
    if (std::get<family::Linear>(v_).k < 0) throw InvalidSpec("linear: k must be >= 0");
}

SeqSpec::SeqSpec(family::Geometric v) : v_(std::move(v)) {
    if (std::get<family::Geometric>(v_).k < 2) throw InvalidSpec("geom: k must be >= 2");
}

SeqSpec::SeqSpec(family::Poly v) {
    validate_poly(v);
    v_ = std::move(v);
}

SeqSpec::SeqSpec(family::Binomial v) : v_(v) {
    if (v.lower < 1) throw InvalidSpec("binom: lower must be >= 1");
}

SeqSpec::SeqSpec(family::Horadam v) : v_(std::move(v)) {}
SeqSpec::SeqSpec(family::Primes v) : v_(v) {}
SeqSpec::SeqSpec(family::Fold v) : v_(v) {}

SeqSpec::SeqSpec(family::Explicit v) : v_(std::move(v)) {
    if (std::get<family::Explicit>(v_).terms.size() < 2)
        throw InvalidSpec("explicit: at least two terms are required");
}

std::vector<Term> terms(const SeqSpec& spec, std::uint64_t n0, std::size_t count) {
    return std::visit(
        overloaded{
            [&](const family::Linear& l) {
                std::vector<Term> out;
                out.reserve(count);
                for (std::size_t i = 0; i < count; ++i) out.push_back(l.k * (n0 + i) + l.r);
                return out;
            },
            [&](const family::Geometric& g) {
                std::vector<Term> out;
                out.reserve(count);
                if (count == 0) return out;
                Term power = boost::multiprecision::pow(g.k, static_cast<unsigned>(n0));
                for (std::size_t i = 0; i < count; ++i, power *= g.k) out.push_back(power + g.offset);
                return out;
            },
            [&](const family::Poly& p) {
                std::vector<Term> out;
                out.reserve(count);
                for (std::size_t i = 0; i < count; ++i) out.push_back(to_integer(eval_poly(p.coeffs, Rat(n0 + i))));
                return out;
            },
            [&](const family::Binomial& b) {
                std::vector<Term> out;
                out.reserve(count);
                for (std::size_t i = 0; i < count; ++i)
                    out.push_back(binom(n0 + i + b.shift, static_cast<std::int64_t>(b.lower)));
                return out;
            },
            [&](const family::Horadam& h) { return horadam_run(h, n0, count); },
            [&](const family::Primes&) { return detail::prime_range(n0, count); },
            [&](const family::Fold&) { return a088748_terms(n0, count); },
            [&](const family::Explicit& e) {
                if (count > 0 && (n0 >= e.terms.size() || count > e.terms.size() - n0))
                    throw IndexOutOfRange("explicit: index " + std::to_string(n0 + count - 1) +
                                          " out of range (length " + std::to_string(e.terms.size()) + ")");
                return std::vector<Term>(e.terms.begin() + static_cast<std::ptrdiff_t>(n0),
                                         e.terms.begin() + static_cast<std::ptrdiff_t>(n0 + count));
            },
        },
        spec.variant());
}

Term term(const SeqSpec& spec, std::uint64_t n) {
    if (spec.get_if<family::Primes>()) return nth_prime(n);
    return terms(spec, n, 1).front();
}

std::string to_string(const SeqSpec& spec) {
    return std::visit(
        overloaded{
            [](const family::Linear& l) { return "linear:" + l.k.str() + "," + l.r.str(); },
            [](const family::Geometric& g) {
                return "geom:" + g.k.str() + (g.offset == 0 ? "" : "," + g.offset.str());
            },
            [](const family::Poly& p) { return "poly:" + (p.coeffs.empty() ? std::string("0") : join(p.coeffs)); },
            [](const family::Binomial& b) {
                return "binom:" + std::to_string(b.shift) + "," + std::to_string(b.lower);
            },
            [](const family::Horadam& h) {
                return "horadam:" + h.alpha.str() + "," + h.beta.str() + "," + h.r.str() + "," + h.s.str() +
                       (h.shift == 0 ? "" : "," + std::to_string(h.shift));
            },
            [](const family::Primes&) { return std::string("primes"); },
            [](const family::Fold&) { return std::string("fold"); },
            [](const family::Explicit& e) { return "explicit:" + join(e.terms); },
        },
        spec.variant());
}

}  // namespace gapseq
