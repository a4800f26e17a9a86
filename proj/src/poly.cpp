#include "gapseq/poly.hpp"

#include <stdexcept>

namespace gapseq {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) return {Poly{}, a};
    std::vector<Rat> quo(rem.size() - db, Rat(0));
    const Rat lead = b.leading();
    for (std::size_t i = rem.size(); i-- > db;) {
        const Rat q = rem[i] / lead;
        quo[i - db] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.leading());
}

Poly pow(const Poly& p, unsigned e) {
    Poly acc = Poly::constant(1);
    for (unsigned i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Rat& c = p.coeffs()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rat mag = negative ? Rat(-c) : c;
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (i == 0 || mag != 1) s += to_string(mag);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace gapseq
