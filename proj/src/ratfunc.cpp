#include "gapseq/ratfunc.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <map>

namespace gapseq {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    const Poly g = gcd(num, den);
    num = divmod(num, g).first;
    den = divmod(den, g).first;
    const Rat d0 = den.coeff(0);
    if (d0 == 0) throw std::domain_error("denominator vanishes at 0; no power series expansion");
    const Rat scale = Rat(1) / d0;
    num_ = num * scale;
    den_ = den * scale;
}

RatFunc RatFunc::operator-() const {
    RatFunc f = *this;
    f.num_ = -f.num_;
    return f;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator*(const RatFunc& a, const Rat& c) {
    RatFunc f = a;
    f.num_ *= c;
    if (f.num_.is_zero()) f.den_ = Poly::constant(1);
    return f;
}

std::vector<Rat> rf_expand(const RatFunc& f, std::size_t count) {
    // den(0) = 1, so c_n = num_n - sum_{i>=1} den_i c_{n-i}
    const auto& den = f.den().coeffs();
    std::vector<Rat> c;
    c.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        Rat v = f.num().coeff(n);
        for (std::size_t i = 1; i < den.size() && i <= n; ++i) v -= den[i] * c[n - i];
        c.push_back(std::move(v));
    }
    return c;
}

std::vector<Term> rf_expand_integral(const RatFunc& f, std::size_t count) {
    std::vector<Term> out;
    out.reserve(count);
    for (const auto& q : rf_expand(f, count)) out.push_back(to_integer(q));
    return out;
}

std::string to_string(const RatFunc& f) {
    Term lcm = 1;
    for (const Poly* p : {&f.num(), &f.den()})
        for (const auto& c : p->coeffs()) lcm = boost::multiprecision::lcm(lcm, Term(denominator(c)));
    std::vector<Term> num, den;
    Term g = 0;
    for (const auto& c : f.num().coeffs()) {
        num.push_back(to_integer(c * lcm));
        g = boost::multiprecision::gcd(g, num.back());
    }
    for (const auto& c : f.den().coeffs()) {
        den.push_back(to_integer(c * lcm));
        g = boost::multiprecision::gcd(g, den.back());
    }
    auto scaled = [&](const std::vector<Term>& v) {
        std::vector<Rat> out;
        for (const auto& t : v) out.emplace_back(t / g);
        return Poly(std::move(out));
    };
    return "(" + to_string(scaled(num)) + ") / (" + to_string(scaled(den)) + ")";
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t base) : s_(text), base_(base) {}

    Poly parse() {
        std::map<std::size_t, Rat> acc;
        skip_ws();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == s_.size()) break;
            bool negative = false;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                negative = s_[pos_] == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Rat coeff = 1;
            bool have_coeff = false;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                Term n = digits();
                Term d = 1;
                if (pos_ < s_.size() && s_[pos_] == '/') {
                    ++pos_;
                    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                        fail("expected denominator digits");
                    d = digits();
                    if (d == 0) fail("zero denominator");
                }
                coeff = Rat(n, d);
                have_coeff = true;
                const std::size_t after = pos_;
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == '*') {
                    ++pos_;
                    skip_ws();
                    if (pos_ == s_.size() || s_[pos_] != 'x') fail("expected 'x' after '*'");
                } else {
                    pos_ = after;
                }
            }
            std::size_t power = 0;
            if (pos_ < s_.size() && s_[pos_] == 'x') {
                ++pos_;
                power = 1;
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                        fail("expected exponent digits");
                    power = static_cast<std::size_t>(to_u64(digits()));
                }
            } else if (!have_coeff) {
                fail("expected a coefficient or 'x'");
            }
            acc[power] += negative ? Rat(-coeff) : coeff;
        }
        std::vector<Rat> v(acc.empty() ? 0 : acc.rbegin()->first + 1, Rat(0));
        for (auto& [k, c] : acc) v[k] = c;
        return Poly(std::move(v));
    }

private:
    Term digits() {
        Term v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
        return v;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw RatFuncSyntaxError(what + " at position " + std::to_string(base_ + pos_), base_ + pos_);
    }

    std::string_view s_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

Poly parse_poly_at(std::string_view text, std::size_t base) { return PolyParser(text, base).parse(); }

// Returns the text inside a parenthesized group starting at `pos` and advances past ')'.
std::string_view group(std::string_view text, std::size_t& pos) {
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw RatFuncSyntaxError("missing ')'", text.size());
    const auto inner = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    return inner;
}

void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

Poly parse_poly(std::string_view text) { return parse_poly_at(text, 0); }

RatFunc parse_ratfunc(std::string_view text) {
    std::size_t pos = 0;
    skip_ws(text, pos);
    if (pos == text.size() || text[pos] != '(') return RatFunc(parse_poly_at(text, 0));
    const std::size_t num_at = pos + 1;
    const Poly num = parse_poly_at(group(text, pos), num_at);
    skip_ws(text, pos);
    if (pos == text.size()) return RatFunc(num);
    if (text[pos] != '/') throw RatFuncSyntaxError("expected '/' at position " + std::to_string(pos), pos);
    ++pos;
    skip_ws(text, pos);
    if (pos == text.size() || text[pos] != '(')
        throw RatFuncSyntaxError("expected '(' at position " + std::to_string(pos), pos);
    const std::size_t den_at = pos + 1;
    const Poly den = parse_poly_at(group(text, pos), den_at);
    skip_ws(text, pos);
    if (pos != text.size())
        throw RatFuncSyntaxError("trailing input at position " + std::to_string(pos), pos);
    if (den.is_zero()) throw RatFuncSyntaxError("zero denominator", den_at);
    return RatFunc(num, den);
}

}  // namespace gapseq
