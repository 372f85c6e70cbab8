#pragma once

#include <string>

#include "domain.hpp"

namespace egg {

// Hermitian form stored as H(i, j) = h_{i jbar}; |v|^2 = sum H(i, j) v_i conj(v_j)
struct HermitianForm {
    CMatrix h;

    double norm2(const CVector& v) const;
    double min_eig() const;
    double max_eig() const;
    double hermitian_defect() const;
};

enum class TensorFormula { Chord, KahlerPotential, ContactEquation, OriginLimit };
const char* tensor_formula_name(TensorFormula f);

struct WuTensorResult {
    HermitianForm form;
    RegionLabel region = RegionLabel::Generic;
    TensorFormula formula = TensorFormula::Chord;
    bool limit = false;  // evaluated by the origin-limit transport on Z
    RegionLabel side = RegionLabel::Generic;  // closed form used on M0 (its M+ side)
};

// Closed-form Wu tensor at an interior point
WuTensorResult wu_tensor(const DomainParams& d, const PointCoords& z, double tol = 1e-10);
CMatrix wu_matrix(const DomainParams& d, const PointCoords& z);

// Independent route: transport the diagonal reference fit by the automorphism Phi_z
HermitianForm pullback_tensor(const DomainParams& d, const PointCoords& z);

double wu_norm(const DomainParams& d, const PointCoords& z, const CVector& v);

// max |d_k h_{i jbar} - d_i h_{k jbar}| by differencing; the step shrinks to
// stay clear of the seams and the boundary
double kahler_defect(const DomainParams& d, const PointCoords& z, double step = 1e-5);

// differencing step honouring seam and boundary distances (throws near a seam)
double safe_step(const DomainParams& d, const PointCoords& z, double step, int stencil_reach = 8);

}  // namespace egg
