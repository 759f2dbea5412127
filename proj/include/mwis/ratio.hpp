#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mwis {

using Weight = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact rational with 64-bit parts; comparisons go through 128-bit products.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n) : num(n), den(1) {}  // NOLINT
    Ratio(std::int64_t n, std::int64_t d);

    static Ratio parse(const std::string& text);
    std::string str() const;
    BigRational big() const { return BigRational(BigInt(num), BigInt(den)); }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Ratio operator+(Ratio a, Ratio b);
    friend Ratio operator-(Ratio a, Ratio b);
    friend Ratio operator*(Ratio a, Ratio b);
    friend Ratio operator/(Ratio a, Ratio b);
    friend bool operator==(Ratio a, Ratio b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(Ratio a, Ratio b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(Ratio a, Ratio b) { return !(b < a); }
    friend bool operator>(Ratio a, Ratio b) { return b < a; }
    friend bool operator>=(Ratio a, Ratio b) { return !(a < b); }
};

// a <= r * b, exactly.
inline bool leq_scaled(Weight a, Ratio r, Weight b) {
    return static_cast<__int128>(a) * r.den <= static_cast<__int128>(r.num) * b;
}
// a > r * b
inline bool gt_scaled(Weight a, Ratio r, Weight b) { return !leq_scaled(a, r, b); }

// a <= (1 - r^k) * b, exactly (big integers; r^k overflows quickly).
bool leq_one_minus_pow(Weight a, Ratio r, int k, Weight b);
// a <= r^k * b
bool leq_pow_scaled(Weight a, Ratio r, int k, Weight b);
BigRational pow(const BigRational& r, int k);

// checked 64-bit arithmetic for weight sums
Weight checked_add(Weight a, Weight b);
Weight checked_mul(Weight a, Weight b);

}  // namespace mwis
