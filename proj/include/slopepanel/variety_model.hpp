#pragma once

#include "slopepanel/polyhedral.hpp"
#include "slopepanel/rational.hpp"
#include "slopepanel/splitting_type.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slopepanel {

/// Linear functional num / den on curve classes, den > 0.
struct RationalFunctional {
    IntVector num;
    std::int64_t den = 1;

    Rational operator()(const IntVector& alpha) const { return Rational(dot(num, alpha), den); }
    friend bool operator==(const RationalFunctional&, const RationalFunctional&) = default;
};

struct FiltrationStep {
    std::int64_t rank = 0;
    RationalFunctional slope;  // slope of F_k / F_{k-1} as a function of the class
    friend bool operator==(const FiltrationStep&, const FiltrationStep&) = default;
};

/// Subcone of the nef cone on whose interior the Harder-Narasimhan filtration
/// of the tangent bundle is constant.
struct Chamber {
    std::vector<IntVector> facets;
    std::vector<FiltrationStep> filtration;
    friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// Finite presentation of N_1(X)_Z = Z^rho with the anticanonical functional,
/// the nef cone of curves (H-representation) and its chamber decomposition.
struct VarietyModel {
    std::size_t rho = 0;
    std::int64_t dim = 0;
    IntVector minus_k;
    std::vector<IntVector> nef_facets;
    std::optional<std::vector<IntVector>> nef_generators;
    std::vector<Chamber> chambers;

    std::int64_t degree(const IntVector& alpha) const { return dot(minus_k, alpha); }
    bool in_nef_cone(const IntVector& alpha) const { return satisfies(nef_facets, alpha); }
    bool in_chamber(std::size_t chamber, const IntVector& alpha) const;
    friend bool operator==(const VarietyModel&, const VarietyModel&) = default;
};

/// Structural problems (vector lengths, ranks, denominators). Empty when the
/// model is well-formed enough for the other operations to run.
std::vector<std::string> shape_problems(const VarietyModel& model);

/// Expected slope panel of a class: each chamber slope repeated by rank,
/// divided by <-K, alpha> / dim, sorted non-increasing. When alpha lies in
/// several chambers their panels must agree (BoundaryMismatch otherwise);
/// the first listed chamber is used.
SlopePanel esp(const VarietyModel& model, const IntVector& alpha);

/// Index of the chamber esp() uses for alpha.
std::size_t chamber_of(const VarietyModel& model, const IntVector& alpha);

/// min ESP - dim^2 / (2 <-K, alpha>). When positive, a general free curve of
/// class alpha has minimal slope ratio above this value.
Rational liberated_lower_bound(const VarietyModel& model, const IntVector& alpha);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const VarietyModel& model);

/// Projective bundle P(O(a_0) + ... + O(a_m)) over P^n0 in the basis
/// (beta, line in a fiber) of the nef cone. One chamber: relative tangent
/// bundle (rank m) above the pulled-back base tangent bundle (rank n0).
VarietyModel pbundle(std::int64_t n0, std::int64_t m, std::vector<std::int64_t> a_list);

/// Picard rank 1, -K = c times the generator, semistable tangent bundle of
/// rank n.
VarietyModel toy_rho1(std::int64_t c, std::int64_t n = 2);

/// Picard rank 2 surface-like model on the quadrant with -K = (1, 1) and two
/// chambers split by the diagonal. Slopes (2x+y)/3 and (x+2y)/3 swap order
/// across it, so the minimal expected slope ratio stays >= 2/3.
VarietyModel toy_rho2();

}  // namespace slopepanel
