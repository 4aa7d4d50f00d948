#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include "errors.hpp"

namespace pqell {

/// A finite, strictly positive real. Arguments of Γ and B.
class PositiveReal {
public:
    PositiveReal(double v) : value_(v)  // NOLINT: implicit by intent
    {
        if (!(v > 0.0) || !std::isfinite(v))
            detail::domain_fail("PositiveReal", "value must be finite and > 0");
    }
    constexpr double value() const { return value_; }
    constexpr operator double() const { return value_; }

private:
    double value_;
};

namespace detail {

// Lanczos-type approximation (Godfrey, g = 671/128, 14 terms).
// Relative error of Γ is ~1e-15 over the positive axis.
inline constexpr std::array<double, 14> kLanczosCoef = {
    57.1562356658629235,      -59.5979603554754912,      14.1360979747417471,
    -0.491913816097620199,    0.339946499848118887e-4,   0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,   -0.210264441724104883e-3,
    0.217439618115212643e-3,  -0.164318106536763890e-3,  0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};
inline constexpr double kLanczosG = 671.0 / 128.0;
inline constexpr double kLanczosC0 = 0.999999999999997092;
inline constexpr double kSqrt2Pi = 2.5066282746310005;

inline double log_gamma_lanczos(double x)
{
    double series = kLanczosC0;
    double y = x;
    for (double c : kLanczosCoef) series += c / ++y;
    const double tmp = x + kLanczosG;
    return (x + 0.5) * std::log(tmp) - tmp + std::log(kSqrt2Pi * series / x);
}

// lnΓ(1+e) for small |e| via the Taylor series at 1, so the zeros at 1 and 2
// keep full relative accuracy.
inline double log_gamma_near_one(double e)
{
    // zeta(k) for k = 2..25
    static constexpr std::array<double, 24> zeta = {
        1.6449340668482264, 1.2020569031595943, 1.0823232337111382, 1.0369277551433699,
        1.0173430619844491, 1.0083492773819228, 1.0040773561979443, 1.0020083928260822,
        1.0009945751278181, 1.0004941886041195, 1.0002460865533080, 1.0001227133475785,
        1.0000612481350587, 1.0000305882363070, 1.0000152822594087, 1.0000076371976379,
        1.0000038172932650, 1.0000019082127166, 1.0000009539620339, 1.0000004769329868,
        1.0000002384505027, 1.0000001192199260, 1.0000000596081891, 1.0000000298035035};
    constexpr double euler_gamma = 0.57721566490153286;
    double sum = 0.0;
    double pw = -e;
    for (std::size_t i = 0; i < zeta.size(); ++i) {
        pw *= -e;
        sum += zeta[i] * pw / static_cast<double>(i + 2);
    }
    return -euler_gamma * e + sum;
}

} // namespace detail

/// Natural log of Γ(x) for x > 0.
inline double log_gamma(PositiveReal xr)
{
    const double x = xr;
    if (std::abs(x - 1.0) < 0.125) return detail::log_gamma_near_one(x - 1.0);
    if (std::abs(x - 2.0) < 0.125) {
        // lnΓ(x) = ln(x-1) + lnΓ(x-1)
        const double e = x - 2.0;
        return std::log1p(e) + detail::log_gamma_near_one(e);
    }
    return detail::log_gamma_lanczos(x);
}

inline double gamma(PositiveReal x)
{
    return std::exp(log_gamma(x));
}

/// B(x,y) = Γ(x)Γ(y)/Γ(x+y), evaluated in log space.
inline double beta(PositiveReal x, PositiveReal y)
{
    // sum in a fixed order so beta(x,y) == beta(y,x) bit for bit
    const double lx = log_gamma(x);
    const double ly = log_gamma(y);
    return std::exp((lx + ly) - log_gamma(x.value() + y.value()));
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
inline double pochhammer(double a, std::uint32_t n)
{
    if (n <= 64 || a <= 0.0) {
        double prod = 1.0;
        for (std::uint32_t i = 0; i < n; ++i) prod *= a + static_cast<double>(i);
        return prod;
    }
    return std::exp(log_gamma(a + n) - log_gamma(a));
}

/// Generalized binomial coefficient C(a,k) = a(a-1)...(a-k+1)/k!.
inline double gen_binomial(double a, std::uint32_t k)
{
    double prod = 1.0;
    for (std::uint32_t i = 0; i < k; ++i)
        prod *= (a - static_cast<double>(i)) / static_cast<double>(i + 1);
    return prod;
}

} // namespace pqell
