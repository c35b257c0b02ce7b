#pragma once

#include <gmpxx.h>

#include <string>

#include "multiproj/errors.hpp"

namespace multiproj {

using Integer = mpz_class;

/// Exact rational scalar. Values are kept canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw SyntaxError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "+p", "-p" or "p/q" with integer p and positive integer q.
inline Rational parse_rational(const std::string& token) {
    const auto bad = [&] { return SyntaxError("invalid rational '" + token + "'"); };
    std::size_t pos = 0;
    if (pos < token.size() && (token[pos] == '+' || token[pos] == '-'))
        ++pos;
    std::size_t digits = 0;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0)
        throw bad();
    std::string num = token.substr(0, pos);
    std::string den = "1";
    if (pos < token.size()) {
        if (token[pos] != '/')
            throw bad();
        den = token.substr(pos + 1);
        if (den.empty())
            throw bad();
        for (char c : den)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw bad();
    }
    Integer d(den);
    if (d == 0)
        throw SyntaxError("rational with zero denominator '" + token + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

/// Renders canonically as "p" or "p/q".
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace multiproj
