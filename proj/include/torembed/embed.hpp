#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torembed/curve.hpp"
#include "torembed/fan.hpp"
#include "torembed/intersect.hpp"

namespace torembed {

using TorusElement = std::array<Rational, 3>;

TorusElement default_torus();

/// Everything that determines the map C -> X: the curve divisors D_j (one per
/// ray, deg D_j = xi_j) and the images of the standard basis of M.
struct EmbeddingData {
    Fan fan;
    TDivisor h;
    XiVector xi;
    std::uint64_t seed = 0;
    std::vector<CDivisor> divisors;
    std::array<RationalFunction, 3> epsilon;
    TorusElement torus = default_torus();

    /// eps(m) = prod_i eps(m_i)^{m_i}.
    RationalFunction epsilon_of(const IntVector& m) const;
    /// sum_j <m, n_j> D_j.
    CDivisor character_pullback(const IntVector& m) const;

    friend bool operator==(const EmbeddingData&, const EmbeddingData&) = default;
};

/// Samples D_j of degree xi_j in ray order, each avoiding every point chosen
/// before it, and sets eps(m_i) = t_i * (function with divisor sum_j a_ij D_j).
/// Throws XiMismatch when xi is not a positive kernel vector of the ray matrix.
EmbeddingData build_embedding_data(const Fan& fan, const TDivisor& h, const XiVector& xi, std::uint64_t seed,
                                   const TorusElement& torus = default_torus());

/// Same construction from explicitly given divisors (fixtures, replays).
/// Requires deg D_j = xi_j; does not require reducedness or disjointness.
EmbeddingData assemble_embedding_data(const Fan& fan, const TDivisor& h, const XiVector& xi,
                                      std::vector<CDivisor> divisors, const TorusElement& torus = default_torus());

struct ConditionReport {
    bool disjointness = true;  // D over every primitive collection has empty intersection
    bool divisor_relation = true;  // div eps(m_i) = sum_j a_ij D_j for i = 1,2,3
    std::optional<std::vector<std::size_t>> failing_collection;
    std::optional<CurvePoint> shared_point;
    std::optional<std::size_t> failing_basis_index;
    std::optional<CurvePoint> mismatch_point;

    bool passed() const { return disjointness && divisor_relation; }
};

/// Checks the two conditions that make (D, eps) define a morphism to X.
/// Minimal non-faces suffice for the intersection condition since every
/// non-face contains one.
ConditionReport check_theorem_conditions(const EmbeddingData& data);

/// Restriction of the map to one affine chart U_tau = Spec C[M cap tau^dual].
struct ChartMap {
    std::size_t cone = 0;
    /// Global ray indices of the cone, in the chart's coordinate order.
    ConeIndices rays{};
    /// duals[q] pairs to 1 with rays[q] and 0 with the other two.
    std::array<IntVector, 3> duals;
    /// p_q = eps(duals[q]).
    std::array<RationalFunction, 3> coords;
    /// Union of D_j over rays j outside the cone; C_tau is its complement.
    std::vector<CurvePoint> excluded;

    bool in_domain(const CurvePoint& p) const;
};

std::vector<ChartMap> chart_maps(const EmbeddingData& data);
ChartMap chart_map(const EmbeddingData& data, std::size_t cone);

}  // namespace torembed
