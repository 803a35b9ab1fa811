#pragma once

#include "harmonia/ratio.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace harmonia {

/// r = 2^exp2 * 3^exp3 * 5^exp5 * residual, residual coprime to 2, 3 and 5.
struct Factorization {
    int exp2 = 0;
    int exp3 = 0;
    int exp5 = 0;
    Ratio residual;

    Ratio recompose() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

Factorization factorize(const Ratio& r);

/// A prime limit: the set of primes a tone's numerator and denominator may use.
class Restriction {
public:
    /// Throws std::invalid_argument unless nonempty, all prime, and containing 2.
    explicit Restriction(std::vector<int> primes);
    Restriction(std::initializer_list<int> primes) : Restriction(std::vector<int>(primes)) {}

    static Restriction pythagorean() { return Restriction{2, 3}; }
    static Restriction natural() { return Restriction{2, 3, 5}; }

    /// "2,3,5"
    static Restriction parse(std::string_view text);

    const std::vector<int>& primes() const { return primes_; }
    bool allows(int prime) const;
    std::string str() const;

    friend bool operator==(const Restriction&, const Restriction&) = default;

private:
    std::vector<int> primes_;
};

bool is_smooth(const Ratio& r, const Restriction& restriction);

/// s with s*s == r, when numerator and denominator are both perfect squares.
std::optional<Ratio> exact_sqrt(const Ratio& r);

/// floor(sqrt(n)) for n >= 0.
Int isqrt(Int n);

} // namespace harmonia
