#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fairdiv {

// Exact rational arithmetic. Every value in the library (valuations, alpha
// parameters, matching weights) is a Rational; no floating point is used in
// any checker or solver.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p/q" or a bare integer string. The denominator must be positive
// after canonicalization (cpp_rational normalizes signs and reduces).
inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (text.empty() || slash == 0 || slash == text.size() - 1)
            throw ParseError("malformed rational: \"" + text + "\"");
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0)
            throw ParseError("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("malformed rational: \"" + text + "\"");
    }
}

// Canonical form: "p/q" with gcd(|p|,q)=1, or bare "p" when q=1.
inline std::string format_rational(const Rational& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

} // namespace fairdiv
