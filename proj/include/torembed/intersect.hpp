#pragma once

#include <string>
#include <vector>

#include "torembed/curve.hpp"
#include "torembed/fan.hpp"

namespace torembed {

/// Torus-invariant divisor sum_j c_j V_j, indexed by ray.
using TDivisor = IntVector;

TDivisor unit_divisor(const Fan& fan, std::size_t ray);
/// div(e(m)) = sum_j <m, n_j> V_j.
TDivisor character_divisor(const Fan& fan, const IntVector& m);

/// deg(D restricted to the invariant curve of the wall) = c_k + c_l + a c_i + b c_j.
Integer wall_curve_degree(const Wall& wall, const TDivisor& d);

/// Triple intersection numbers V_i V_j V_k on a smooth complete fan.
class IntersectionTable {
public:
    explicit IntersectionTable(const Fan& fan);

    const Integer& operator()(std::size_t i, std::size_t j, std::size_t k) const;
    /// Multilinear product D1 . D2 . D3.
    Integer product(const TDivisor& d1, const TDivisor& d2, const TDivisor& d3) const;
    std::size_t num_rays() const { return r_; }

private:
    std::size_t r_;
    std::vector<Integer> table_;
};

/// V_i . V_j . V_k, computed by shift-to-zero reduction along linear
/// equivalence. Requires a smooth complete fan.
Integer triple_intersection(const Fan& fan, std::size_t i, std::size_t j, std::size_t k);

/// Strict convexity of the support function: with m_s defined on each maximal
/// cone by <m_s, n_p> = -c_p, require <m_s, n_l> > -c_l across every wall.
bool is_ample(const Fan& fan, const TDivisor& d);

/// Deterministic ample divisor; throws NotProjective when none exists.
TDivisor find_ample(const Fan& fan);

/// Nonnegative weights on walls whose curve classes sum to zero, proving that
/// no divisor has positive degree on every invariant curve. Empty when the
/// fan is projective.
std::vector<Rational> non_projectivity_certificate(const Fan& fan);

enum class XiMethod { Intersection, Kernel };

std::string to_string(XiMethod m);
XiMethod xi_method_from_string(const std::string& s);

/// Positive solution of the lattice relations, sum_j <m_i, n_j> xi_j = 0.
struct XiVector {
    IntVector xi;
    XiMethod method = XiMethod::Intersection;
    /// Multiplier applied to clear the xi_j > 2 g(C) threshold.
    Integer scale = 1;

    friend bool operator==(const XiVector&, const XiVector&) = default;
};

/// Intersection method: xi_j = H.H.V_j (requires H ample, else NotAmple).
/// Kernel method: minimise sum xi_j with xi_j >= 1 on the kernel of the ray
/// matrix; H is ignored. Either way the result is scaled by the smallest
/// positive integer making every entry exceed 2 g(curve).
XiVector xi_vector(const Fan& fan, const TDivisor& h, XiMethod method,
                   const FunctionField& curve = ProjectiveLine{});

/// True iff A xi = 0 and every entry is positive.
bool is_valid_xi(const Fan& fan, const IntVector& xi);

}  // namespace torembed
