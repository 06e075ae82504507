#pragma once

#include <string>

#include "heckelab/complexx.hpp"

namespace heckelab {

// A numerically integrated Petersson-type pairing with a split error budget.
struct InnerProductResult {
    Complex value;
    Real quadrature_error{0L};
    Real truncation_error{0L}; // q-expansion tail inside the mesh
    Real tail_error{0L};       // omitted region y > Y

    Real total_error() const { return quadrature_error + truncation_error + tail_error; }
    Real real_value() const { return value.re; }
};

enum class LMethod {
    dirichlet_series,
    functional_equation,
    norm_relation,
    watson_extraction,
};

inline const char* to_string(LMethod m) {
    switch (m) {
        case LMethod::dirichlet_series: return "dirichlet-series";
        case LMethod::functional_equation: return "functional-equation";
        case LMethod::norm_relation: return "norm-relation";
        case LMethod::watson_extraction: return "watson-extraction";
    }
    return "?";
}

struct LValueResult {
    Real value;
    LMethod method = LMethod::dirichlet_series;
    Real precision_estimate{0L}; // claimed absolute error, > 0
};

} // namespace heckelab
