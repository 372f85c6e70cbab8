#pragma once

#include <functional>
#include <vector>

#include "common.hpp"

namespace egg {

using TensorField = std::function<CMatrix(const CVector&)>;

// Wirtinger derivatives of a matrix field from real-coordinate central differences,
// one Richardson level (steps h and h/2)
struct FirstDerivatives {
    std::vector<CMatrix> d;     // d/dz_k
    std::vector<CMatrix> dbar;  // d/dzbar_k
};

struct SecondDerivatives {
    CMatrix value;
    std::vector<CMatrix> d;
    std::vector<CMatrix> dbar;
    std::vector<CMatrix> ddbar;  // index k * n + l: d/dz_k d/dzbar_l
};

FirstDerivatives first_derivatives(const TensorField& f, const CVector& z, double h);
SecondDerivatives second_derivatives(const TensorField& f, const CVector& z, double h);

}  // namespace egg
