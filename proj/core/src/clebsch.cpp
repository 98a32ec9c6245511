// Copyright 2026 The spinent Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <spinent/clebsch.hpp>

#include <spinent/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numeric>

namespace spinent {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial(int n) {
    cpp_int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Integer value of a half-integer sum that the selection rules made integral.
int whole(HalfInt h) { return h.twice() / 2; }

std::uint64_t to_u64(const cpp_int& v) {
    if (v < 0 || v > cpp_int(std::numeric_limits<std::uint64_t>::max())) {
        throw CapacityError("exact amplitude exceeds 64-bit range");
    }
    return static_cast<std::uint64_t>(v);
}

}  // namespace

ExactAmplitude ExactAmplitude::from_square(std::uint64_t p, std::uint64_t q, int sign) {
    if (q == 0) throw ValidationError("zero denominator in exact amplitude");
    if (p == 0 || sign == 0) return {};
    const auto g = std::gcd(p, q);
    p /= g;
    q /= g;
    // Smallest c with p | c^2, then p/q = c^2 / (c^2 q / p).
    std::uint64_t c = 1, rest = p;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
        int e = 0;
        while (rest % f == 0) {
            rest /= f;
            ++e;
        }
        for (int k = 0; k < (e + 1) / 2; ++k) c *= f;
    }
    c *= rest;
    const cpp_int radicand = cpp_int(c) * c * q / p;
    return {sign > 0 ? 1 : -1, c, to_u64(radicand)};
}

double ExactAmplitude::value() const {
    if (sign == 0) return 0.0;
    return sign * static_cast<double>(numerator) / std::sqrt(static_cast<double>(radicand));
}

std::string ExactAmplitude::to_string() const {
    if (sign == 0) return "0";
    std::string out = sign > 0 ? "+" : "-";
    out += std::to_string(numerator);
    if (radicand != 1) out += "/sqrt(" + std::to_string(radicand) + ")";
    return out;
}

ExactAmplitude ExactAmplitude::operator*(const ExactAmplitude& other) const {
    if (is_zero() || other.is_zero()) return {};
    const cpp_int p = cpp_int(numerator) * numerator * other.numerator * other.numerator;
    const cpp_int q = cpp_int(radicand) * other.radicand;
    const cpp_int g = boost::multiprecision::gcd(p, q);
    return from_square(to_u64(p / g), to_u64(q / g), sign * other.sign);
}

bool triangle(HalfInt j1, HalfInt j2, HalfInt J) {
    if ((j1 + j2 + J).twice() % 2 != 0) return false;
    return abs(j1 - j2) <= J && J <= j1 + j2;
}

ExactAmplitude clebsch_gordan_exact(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    if (j1.twice() < 0 || j2.twice() < 0 || J.twice() < 0) {
        throw ValidationError("angular momenta must be non-negative");
    }
    if (m1 + m2 != M) return {};
    if (abs(m1) > j1 || abs(m2) > j2 || abs(M) > J) return {};
    if (!(j1 - m1).is_integer() || !(j2 - m2).is_integer() || !(J - M).is_integer()) return {};
    if (!triangle(j1, j2, J)) return {};

    // Racah closed form; every factorial argument below is a non-negative integer.
    const int a = whole(j1 + j2 - J);
    const int b = whole(j1 - m1);
    const int c = whole(j2 + m2);
    const int d = whole(J - j2 + m1);
    const int e = whole(J - j1 - m2);

    cpp_rational prefactor(cpp_int(J.twice() + 1) * factorial(whole(J + j1 - j2)) * factorial(whole(J - j1 + j2)) *
                               factorial(a),
                           factorial(whole(j1 + j2 + J) + 1));
    prefactor *= cpp_rational(factorial(whole(J + M)) * factorial(whole(J - M)) * factorial(b) *
                              factorial(whole(j1 + m1)) * factorial(whole(j2 - m2)) * factorial(c));

    cpp_rational sum = 0;
    const int k_min = std::max({0, -d, -e});
    const int k_max = std::min({a, b, c});
    for (int k = k_min; k <= k_max; ++k) {
        const cpp_int denom = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(c - k) *
                              factorial(d + k) * factorial(e + k);
        const cpp_rational term(cpp_int(1), denom);
        sum += (k % 2 == 0) ? term : cpp_rational(-term);
    }
    if (sum == 0) return {};

    const cpp_rational square = prefactor * sum * sum;
    return ExactAmplitude::from_square(to_u64(boost::multiprecision::numerator(square)),
                                       to_u64(boost::multiprecision::denominator(square)), sum > 0 ? 1 : -1);
}

}  // namespace spinent
