#pragma once

/**
 * @file ratio.hpp
 * @brief Exact positive rationals.
 *
 * Every pitch, string length and interval in the library is a Ratio: a
 * strictly positive fraction kept in lowest terms. Arithmetic runs on
 * 128-bit integers with overflow checks; an operation that would wrap
 * throws OverflowError instead.
 */

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace harmonia {

using Int = __int128;

/// Thrown when an intermediate result does not fit in Int.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Thrown for zero/negative parts or malformed text.
class RatioError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace checked {
Int add(Int a, Int b);
Int mul(Int a, Int b);
Int gcd(Int a, Int b);
Int pow(Int base, unsigned exp);
} // namespace checked

std::string to_string(Int value);

class Ratio {
public:
    constexpr Ratio() = default;

    /// Reduces to lowest terms. Throws RatioError unless num, den >= 1.
    Ratio(Int num, Int den = 1);

    /// Accepts "num/den", "num:den" and bare integers.
    static Ratio parse(std::string_view text);

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    double to_double() const;

    /// Always "num/den", integers included ("2/1").
    std::string str() const;

    Ratio inverse() const;
    Ratio pow(int exp) const;

    friend Ratio operator+(const Ratio& a, const Ratio& b);
    friend Ratio operator*(const Ratio& a, const Ratio& b);
    friend Ratio operator/(const Ratio& a, const Ratio& b);

    Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
    Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
    Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

    friend bool operator==(const Ratio& a, const Ratio& b) = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

private:
    struct Reduced {};
    Ratio(Int num, Int den, Reduced) : num_(num), den_(den) {}

    Int num_ = 1;
    Int den_ = 1;
};

/// Unlike the difference a - b, the quotient of two pitches is always a valid Ratio.
inline Ratio interval(const Ratio& from, const Ratio& to) { return to / from; }

std::string to_string(const Ratio& r);

} // namespace harmonia

template <>
struct std::hash<harmonia::Ratio> {
    std::size_t operator()(const harmonia::Ratio& r) const noexcept;
};
