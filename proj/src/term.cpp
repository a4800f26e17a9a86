#include "gapseq/term.hpp"

#include <cctype>
#include <limits>

namespace gapseq {

std::string to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Term parse_term(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    Term value = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? Term(-value) : value;
}

Rat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_term(text));
    const Term num = parse_term(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
    const Term den = parse_term(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

Term to_integer(const Rat& q) {
    if (denominator(q) != 1) throw NotIntegral(to_string(q) + " is not an integer");
    return numerator(q);
}

std::uint64_t to_u64(const Term& t) {
    if (t < 0 || t > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error(t.str() + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(t);
}

}  // namespace gapseq
