#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "errors.hpp"

namespace toeplitz {

// expression templates off: values may be returned from lambdas and ternaries safely
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "3/2", or "3" when the denominator is one
inline std::string to_string(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::uint64_t to_u64(const BigInt& v, const char* what = "value") {
    if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
        fail(ErrorKind::Overflow, std::string(what) + " does not fit in 64 bits");
    return v.convert_to<std::uint64_t>();
}

inline std::size_t to_size(const BigInt& v, const char* what = "value") {
    if (v < 0 || v > BigInt(std::numeric_limits<std::size_t>::max()))
        fail(ErrorKind::Overflow, std::string(what) + " does not fit in size_t");
    return v.convert_to<std::size_t>();
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "period product overflow");
    return r;
}

// parse "p/q", "p" or a finite decimal like "1.5"
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
            return Rational(num, den);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(BigInt(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        BigInt den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return Rational(BigInt(digits), den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorKind::Parse, "not a rational number: '" + s + "'");
    }
}

} // namespace toeplitz
