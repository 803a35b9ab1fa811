#include "harmonia/factor.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace harmonia {

namespace {

int strip(Int& n, Int p) {
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

Ratio Factorization::recompose() const {
    return Ratio(2).pow(exp2) * Ratio(3).pow(exp3) * Ratio(5).pow(exp5) * residual;
}

Factorization factorize(const Ratio& r) {
    Int num = r.num(), den = r.den();
    Factorization f;
    f.exp2 = strip(num, 2) - strip(den, 2);
    f.exp3 = strip(num, 3) - strip(den, 3);
    f.exp5 = strip(num, 5) - strip(den, 5);
    f.residual = Ratio(num, den);
    return f;
}

Restriction::Restriction(std::vector<int> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    if (primes_.empty())
        throw std::invalid_argument("restriction needs at least one prime");
    for (int p : primes_)
        if (!is_prime(p))
            throw std::invalid_argument("restriction entry " + std::to_string(p) + " is not prime");
    if (primes_.front() != 2)
        throw std::invalid_argument("restriction must contain 2");
}

Restriction Restriction::parse(std::string_view text) {
    std::vector<int> primes;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        int value = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || end != item.data() + item.size())
            throw std::invalid_argument("bad prime list '" + std::string(text) + "'");
        primes.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Restriction(std::move(primes));
}

bool Restriction::allows(int prime) const {
    return std::binary_search(primes_.begin(), primes_.end(), prime);
}

std::string Restriction::str() const {
    std::string out;
    for (int p : primes_) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

bool is_smooth(const Ratio& r, const Restriction& restriction) {
    Int num = r.num(), den = r.den();
    for (int p : restriction.primes()) {
        strip(num, p);
        strip(den, p);
    }
    return num == 1 && den == 1;
}

Int isqrt(Int n) {
    if (n < 2) return n;
    // Newton from an overestimate; decreases monotonically to floor(sqrt(n)).
    auto u = static_cast<unsigned __int128>(n);
    int bits = 0;
    for (auto t = u; t != 0; t >>= 1) ++bits;
    unsigned __int128 x = static_cast<unsigned __int128>(1) << ((bits + 1) / 2);
    for (;;) {
        unsigned __int128 y = (x + u / x) / 2;
        if (y >= x) return static_cast<Int>(x);
        x = y;
    }
}

std::optional<Ratio> exact_sqrt(const Ratio& r) {
    Int sn = isqrt(r.num()), sd = isqrt(r.den());
    if (sn * sn != r.num() || sd * sd != r.den())
        return std::nullopt;
    return Ratio(sn, sd);
}

} // namespace harmonia
