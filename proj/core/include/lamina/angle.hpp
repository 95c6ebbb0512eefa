#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace lamina {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Degree {
public:
    explicit Degree(int d);
    int value() const { return d_; }
    friend bool operator==(Degree, Degree) = default;

private:
    int d_;
};

// A point of R/Z as a reduced fraction in [0,1).
// Values that fit in 62 bits live in machine words; anything larger falls
// back to cpp_int. The representation is canonical, so equality and hashing
// can look at the stored form directly.
class Angle {
public:
    Angle() = default;
    Angle(std::int64_t num, std::int64_t den);
    static Angle from_big(const BigInt& num, const BigInt& den);
    static Angle from_rational(const Rational& r);

    BigInt numerator() const;
    BigInt denominator() const;
    Rational value() const;

    // d*a mod 1
    Angle times(int d) const;
    // a + b mod 1
    Angle plus(const Angle& b) const;
    // a - b mod 1
    Angle minus(const Angle& b) const;
    // the i-th of the d preimages, (a + i)/d
    Angle preimage(int d, int i) const;

    bool is_zero() const;
    bool is_small() const { return std::holds_alternative<Small>(rep_); }
    double approx() const;
    std::string str() const;
    std::size_t hash() const;

    friend bool operator==(const Angle& a, const Angle& b);
    friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

private:
    struct Small {
        std::int64_t n = 0;
        std::int64_t d = 1;
        bool operator==(const Small&) const = default;
    };
    struct Big {
        BigInt n;
        BigInt d;
        bool operator==(const Big&) const = default;
    };
    std::variant<Small, Big> rep_{Small{}};

    static Angle normalize(BigInt n, BigInt d);
};

// Parses "p/q". The slash is mandatory; the value is reduced mod 1.
Angle parse_angle(std::string_view text);

// Positive arc length from a to b, in [0,1).
Rational arc_length(const Angle& a, const Angle& b);
// Distance on R/Z, in [0,1/2].
Rational circle_distance(const Angle& a, const Angle& b);

}  // namespace lamina

template <>
struct std::hash<lamina::Angle> {
    std::size_t operator()(const lamina::Angle& a) const noexcept { return a.hash(); }
};
