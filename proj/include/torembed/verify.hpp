#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torembed/embed.hpp"
#include "torembed/poly.hpp"

namespace torembed {

struct VerifyOptions {
    /// Largest admissible degree (in s) of an intermediate resultant.
    long degree_cap = 512;
    /// Verify charts concurrently; results are merged in cone order.
    bool parallel = true;
};

/// Exact evidence for a failed chart check.
///
/// A collision is a pair s != u in C_tau with p(s) = p(u). A derivative zero
/// is a point where (p_1', p_2', p_3') vanishes. When a coordinate is not
/// rational it is described algebraically: s is any root of `s_poly`, and u
/// any root in u of `u_poly` (coefficients in s, lowest u-degree first).
struct Witness {
    enum class Kind { Collision, DerivativeZero };
    Kind kind = Kind::Collision;
    std::optional<CurvePoint> s;
    std::optional<CurvePoint> u;
    Poly s_poly;
    std::vector<Poly> u_poly;
    /// Set after the witness has been re-evaluated directly on the chart.
    bool rechecked = false;

    bool exact() const { return s.has_value() && (kind == Kind::DerivativeZero || u.has_value()); }
};

struct InjectivityResult {
    bool injective = true;
    std::optional<Witness> witness;
};

struct ImmersionResult {
    bool immersive = true;
    std::optional<Witness> witness;
};

/// Decides over C whether (p_1, p_2, p_3) is injective on C_tau.
/// Throws DegreeOverflow when an intermediate resultant would exceed the cap.
InjectivityResult chart_injective(const ChartMap& chart, const VerifyOptions& options = {});

/// Decides whether the derivative vector vanishes somewhere on C_tau.
ImmersionResult chart_immersive(const ChartMap& chart);

/// Re-evaluates a witness against the chart coordinates without any
/// elimination: rational coordinates are substituted, algebraic ones are
/// reduced modulo their defining polynomials.
bool recheck_witness(const ChartMap& chart, const Witness& w);

struct PullbackResult {
    bool passed = true;
    std::optional<std::size_t> cone;
    std::optional<std::size_t> ray;
    std::optional<CurvePoint> point;
    /// "reducedness", "extra-zero" or "missing-zero".
    std::string reason;
};

/// For every chart and every ray of its cone, the zero divisor of the matching
/// coordinate on C_tau must equal D_ray there, with multiplicity one.
PullbackResult pullback_check(const EmbeddingData& data, const std::vector<ChartMap>& charts);

struct ChartVerdict {
    std::size_t cone = 0;
    ConeIndices rays{};
    bool injective = true;
    bool immersive = true;
    std::vector<Witness> witnesses;
};

struct Certificate {
    ConditionReport conditions;
    std::vector<ChartVerdict> charts;
    PullbackResult pullback;
    bool embedding = false;

    /// (injective, immersive) per chart followed by the pullback verdict.
    std::vector<bool> verdict_vector() const;
};

/// Runs the condition check, both chart checks on every maximal cone and the
/// pullback check. Charts are only examined when the conditions hold.
Certificate certify(const EmbeddingData& data, const VerifyOptions& options = {});

}  // namespace torembed
