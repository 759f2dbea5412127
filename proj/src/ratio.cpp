#include "mwis/ratio.hpp"

#include <limits>
#include <numeric>

namespace mwis {

namespace {

Ratio from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("ratio: zero denominator");
    if (d < 0) n = -n, d = -d;
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) n /= a, d /= a;
    constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("ratio: 64-bit overflow");
    Ratio r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d);
    return r;
}

}  // namespace

Ratio::Ratio(std::int64_t n, std::int64_t d) { *this = from128(n, d); }

Ratio Ratio::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t pos = 0;
        if (slash == std::string::npos) {
            auto n = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return Ratio(n);
        }
        auto n = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument(text);
        auto rest = text.substr(slash + 1);
        auto d = std::stoll(rest, &pos);
        if (pos != rest.size()) throw std::invalid_argument(text);
        return Ratio(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad rational '" + text + "'");
    }
}

std::string Ratio::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Ratio operator+(Ratio a, Ratio b) {
    return from128(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
}
Ratio operator-(Ratio a, Ratio b) {
    return from128(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
}
Ratio operator*(Ratio a, Ratio b) {
    return from128(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}
Ratio operator/(Ratio a, Ratio b) {
    return from128(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
}

BigRational pow(const BigRational& r, int k) {
    BigRational out = 1;
    for (int i = 0; i < k; ++i) out *= r;
    return out;
}

bool leq_one_minus_pow(Weight a, Ratio r, int k, Weight b) {
    // a <= b - r^k b  <=>  a * den^k <= b * (den^k - num^k)
    BigInt dk = boost::multiprecision::pow(BigInt(r.den), k);
    BigInt nk = boost::multiprecision::pow(BigInt(r.num), k);
    return BigInt(a) * dk <= BigInt(b) * (dk - nk);
}

bool leq_pow_scaled(Weight a, Ratio r, int k, Weight b) {
    BigInt dk = boost::multiprecision::pow(BigInt(r.den), k);
    BigInt nk = boost::multiprecision::pow(BigInt(r.num), k);
    return BigInt(a) * dk <= BigInt(b) * nk;
}

Weight checked_add(Weight a, Weight b) {
    Weight out;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("weight sum overflows 64 bits");
    return out;
}

Weight checked_mul(Weight a, Weight b) {
    Weight out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("weight product overflows 64 bits");
    return out;
}

}  // namespace mwis
