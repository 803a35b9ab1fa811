#include "harmonia/ratio.hpp"

#include <algorithm>

namespace harmonia {

namespace checked {

Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int pow(Int base, unsigned exp) {
    Int result = 1;
    while (exp > 0) {
        if (exp & 1u) result = mul(result, base);
        exp >>= 1;
        if (exp > 0) base = mul(base, base);
    }
    return result;
}

} // namespace checked

std::string to_string(Int value) {
    if (value == 0) return "0";
    bool negative = value < 0;
    // Work on the negative side so that INT128_MIN does not overflow.
    std::string digits;
    Int v = negative ? value : -value;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Ratio::Ratio(Int num, Int den) {
    if (num <= 0 || den <= 0)
        throw RatioError("ratio parts must be positive, got " + to_string(num) + "/" + to_string(den));
    Int g = checked::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

namespace {

Int parse_positive(std::string_view digits, std::string_view whole) {
    if (digits.empty())
        throw RatioError("malformed ratio '" + std::string(whole) + "'");
    Int value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw RatioError("malformed ratio '" + std::string(whole) + "'");
        value = checked::add(checked::mul(value, 10), c - '0');
    }
    return value;
}

} // namespace

Ratio Ratio::parse(std::string_view text) {
    auto sep = text.find_first_of("/:");
    if (sep == std::string_view::npos)
        return Ratio(parse_positive(text, text));
    return Ratio(parse_positive(text.substr(0, sep), text),
                 parse_positive(text.substr(sep + 1), text));
}

double Ratio::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Ratio::str() const {
    return to_string(num_) + "/" + to_string(den_);
}

Ratio Ratio::inverse() const {
    return Ratio(den_, num_, Reduced{});
}

Ratio Ratio::pow(int exp) const {
    unsigned e = exp < 0 ? static_cast<unsigned>(-static_cast<long>(exp)) : static_cast<unsigned>(exp);
    Ratio r(checked::pow(num_, e), checked::pow(den_, e), Reduced{});
    return exp < 0 ? r.inverse() : r;
}

Ratio operator+(const Ratio& a, const Ratio& b) {
    Int g = checked::gcd(a.den_, b.den_);
    Int num = checked::add(checked::mul(a.num_, b.den_ / g), checked::mul(b.num_, a.den_ / g));
    Int den = checked::mul(a.den_ / g, b.den_);
    return Ratio(num, den);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
    // Cross-cancel first; the product of coprime pairs is already reduced.
    Int g1 = checked::gcd(a.num_, b.den_);
    Int g2 = checked::gcd(b.num_, a.den_);
    return Ratio(checked::mul(a.num_ / g1, b.num_ / g2),
                 checked::mul(a.den_ / g2, b.den_ / g1), Ratio::Reduced{});
}

Ratio operator/(const Ratio& a, const Ratio& b) {
    return a * b.inverse();
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    // Continued-fraction comparison: never multiplies, so it cannot overflow.
    auto cmp = [](Int x, Int y) {
        return x < y ? std::strong_ordering::less
             : x > y ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    };
    Int an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    bool flipped = false;
    for (;;) {
        Int aq = an / ad, bq = bn / bd;
        Int ar = an % ad, br = bn % bd;
        auto ord = cmp(aq, bq);
        if (ord == 0 && (ar == 0 || br == 0))
            ord = cmp(ar, br);
        if (ord != 0)
            return flipped ? 0 <=> ord : ord;
        if (ar == 0)
            return std::strong_ordering::equal;
        // ar/ad < br/bd  <=>  ad/ar > bd/br
        an = ad;
        ad = ar;
        bn = bd;
        bd = br;
        flipped = !flipped;
    }
}

std::string to_string(const Ratio& r) { return r.str(); }

} // namespace harmonia

std::size_t std::hash<harmonia::Ratio>::operator()(const harmonia::Ratio& r) const noexcept {
    auto lo = [](harmonia::Int v) {
        auto u = static_cast<unsigned __int128>(v);
        return static_cast<std::size_t>(u) ^ static_cast<std::size_t>(u >> 64);
    };
    std::size_t h = lo(r.num());
    return h ^ (lo(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}
