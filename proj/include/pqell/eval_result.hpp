#pragma once

#include <string_view>

namespace pqell {

enum class Method { quadrature, hyp_series, lambda_series, agm, closed_form };

constexpr std::string_view to_string(Method m)
{
    switch (m) {
    case Method::quadrature: return "quadrature";
    case Method::hyp_series: return "hyp-series";
    case Method::lambda_series: return "lambda-series";
    case Method::agm: return "agm";
    case Method::closed_form: return "closed-form";
    }
    return "unknown";
}

/// A computed value, the backend that produced it, and an a-posteriori
/// absolute error estimate.
struct EvalResult {
    double value = 0.0;
    Method method = Method::closed_form;
    double error_estimate = 0.0;
};

} // namespace pqell
