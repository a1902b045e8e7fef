#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torembed/linalg.hpp"
#include "torembed/poly.hpp"

namespace torembed {

/// The curve side of the construction. Only the projective line is
/// implemented; the genus is what the xi_j > 2g(C) threshold reads.
class FunctionField {
public:
    virtual ~FunctionField() = default;
    virtual long genus() const = 0;
    virtual std::string name() const = 0;
};

class ProjectiveLine final : public FunctionField {
public:
    long genus() const override { return 0; }
    std::string name() const override { return "P1"; }
};

/// A rational point t = a of the projective line, or the point at infinity.
class CurvePoint {
public:
    CurvePoint() = default;  // infinity
    CurvePoint(Rational a) : value_(std::move(a)) { value_->canonicalize(); }  // NOLINT
    CurvePoint(long a) : CurvePoint(Rational(a)) {}                          // NOLINT
    static CurvePoint infinity() { return {}; }

    bool is_infinity() const { return !value_.has_value(); }
    const Rational& value() const { return value_.value(); }

    /// "inf" or the reduced fraction "p/q" ("p" when integral).
    std::string str() const;
    static CurvePoint parse(const std::string& s);

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) { return a.value_ == b.value_; }
    /// Finite points by value, then infinity.
    friend bool operator<(const CurvePoint& a, const CurvePoint& b);

private:
    std::optional<Rational> value_;
};

/// Finite formal sum of points, kept sorted with nonzero multiplicities.
class CDivisor {
public:
    using Term = std::pair<CurvePoint, long>;

    CDivisor() = default;
    explicit CDivisor(const std::vector<Term>& terms);

    void add(const CurvePoint& p, long multiplicity);
    long degree() const;
    bool is_reduced() const;
    bool is_effective() const;
    long multiplicity(const CurvePoint& p) const;
    bool contains(const CurvePoint& p) const { return multiplicity(p) != 0; }
    std::vector<CurvePoint> support() const;
    const std::vector<Term>& terms() const { return terms_; }

    CDivisor& operator+=(const CDivisor& o);
    friend CDivisor operator+(CDivisor a, const CDivisor& b) { return a += b; }
    friend CDivisor operator*(long k, const CDivisor& d);
    friend bool operator==(const CDivisor&, const CDivisor&) = default;

    std::string str() const;

private:
    std::vector<Term> terms_;
};

/// c * prod (t - a)^e over distinct finite roots a; the order at infinity is
/// -sum e, so div(f) always has degree zero.
class RationalFunction {
public:
    using Factor = std::pair<Rational, long>;

    RationalFunction() : constant_(1) {}
    RationalFunction(Rational c, const std::vector<Factor>& factors);
    static RationalFunction constant(const Rational& c) { return RationalFunction(c, {}); }

    const Rational& constant_factor() const { return constant_; }
    const std::vector<Factor>& factors() const { return factors_; }

    CDivisor divisor() const;
    long order_at(const CurvePoint& p) const;
    /// f = numerator / denominator with the constant in the numerator.
    Poly numerator() const;
    Poly denominator() const;

    RationalFunction& operator*=(const RationalFunction& o);
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    RationalFunction inverse() const;
    RationalFunction pow(long e) const;
    RationalFunction scaled(const Rational& k) const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string str() const;

private:
    Rational constant_;
    std::vector<Factor> factors_;
};

/// Value and first derivative at a point, or a pole marker. At infinity the
/// derivative is taken in the local coordinate 1/t.
struct PointValue {
    bool pole = false;
    Rational value;
    Rational derivative;
};

PointValue evaluate_with_derivative(const RationalFunction& f, const CurvePoint& p);

/// d distinct finite rational points with small numerators and denominators,
/// none in `avoid`, drawn deterministically from `seed`.
CDivisor sample_divisor(long degree, std::uint64_t seed, const std::vector<CurvePoint>& avoid);

/// The function with divisor exactly D and constant 1. Throws NotDegreeZero.
RationalFunction principal_function(const CDivisor& d);

}  // namespace torembed
