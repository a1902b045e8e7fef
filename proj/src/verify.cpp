#include "torembed/verify.hpp"

#include <algorithm>
#include <future>

#include "torembed/errors.hpp"

namespace torembed {

namespace {

struct Coordinate {
    Poly num;
    Poly den;
};

std::array<Coordinate, 3> coordinates(const ChartMap& chart) {
    std::array<Coordinate, 3> out;
    for (std::size_t q = 0; q < 3; ++q) out[q] = {chart.coords[q].numerator(), chart.coords[q].denominator()};
    return out;
}

std::vector<Rational> finite_excluded(const ChartMap& chart) {
    std::vector<Rational> out;
    for (const auto& p : chart.excluded)
        if (!p.is_infinity()) out.push_back(p.value());
    return out;
}

// P(s) Q(u) - P(u) Q(s): vanishes exactly where p(s) = p(u), plus pole pairs.
BiPoly difference_numerator(const Coordinate& c) {
    return BiPoly::in_s(c.num) * BiPoly::in_u(c.den) - BiPoly::in_u(c.num) * BiPoly::in_s(c.den);
}

BiPoly strip_excluded_lines(BiPoly g, const std::vector<Rational>& excluded) {
    for (const auto& e : excluded) {
        while (!g.is_zero() && g.degree_s() >= 1 &&
               std::all_of(g.coeffs().begin(), g.coeffs().end(), [&](const Poly& p) { return p(e) == 0; }))
            g = g.div_s(Poly::linear(e));
        while (g.degree_u() >= 1) {
            auto [q, r] = g.divmod_u_minus(e);
            if (!r.is_zero()) break;
            g = std::move(q);
        }
    }
    return g;
}

Rational rational_outside(const std::vector<Rational>& excluded, const Rational& also) {
    for (long k = 1;; ++k) {
        Rational c(k);
        if (c != also && std::find(excluded.begin(), excluded.end(), c) == excluded.end()) return c;
    }
}

// ------------------------------------------------------------------
// Polynomials in u over A = Q[s]/(m) for squarefree m. When a leading
// coefficient is a zero divisor the modulus is split and both factors are
// followed, so every branch behaves like a field for its roots.

using APoly = std::vector<Poly>;

struct Branch {
    Poly modulus;
    APoly h;  // monic in u, or empty for the zero polynomial
};

void trim(APoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

APoly reduce(const APoly& a, const Poly& m) {
    APoly out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(c % m);
    trim(out);
    return out;
}

APoly to_apoly(const BiPoly& b, const Poly& m) { return reduce(b.coeffs(), m); }

std::vector<Branch> make_monic(const Poly& m, APoly a) {
    a = reduce(a, m);
    if (a.empty()) return {{m, {}}};
    const Poly g = gcd(a.back(), m);
    if (g.degree() == 0) {
        const XGcd x = xgcd(a.back(), m);
        for (auto& c : a) c = (c * x.s) % m;
        return {{m, std::move(a)}};
    }
    std::vector<Branch> out = make_monic(g, a);
    auto rest = make_monic(exact_div(m, g), a);
    out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
    return out;
}

APoly rem_monic(APoly a, const APoly& b, const Poly& m) {
    while (!a.empty() && a.size() >= b.size()) {
        const Poly c = a.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] - c * b[j]) % m;
        trim(a);
    }
    return a;
}

std::vector<Branch> gcd_over(const Poly& m, const APoly& a, const APoly& b) {
    std::vector<Branch> out;
    for (auto& br : make_monic(m, b)) {
        APoly aa = reduce(a, br.modulus);
        std::vector<Branch> sub;
        if (br.h.empty())
            sub = make_monic(br.modulus, aa);
        else
            sub = gcd_over(br.modulus, br.h, rem_monic(std::move(aa), br.h, br.modulus));
        out.insert(out.end(), std::make_move_iterator(sub.begin()), std::make_move_iterator(sub.end()));
    }
    return out;
}

// Removes every factor (u - r(s)) from each branch, splitting the modulus
// where the factor divides only on some roots.
std::vector<Branch> strip_u_root(Branch start, const Poly& r) {
    std::vector<Branch> done;
    std::vector<Branch> work{std::move(start)};
    while (!work.empty()) {
        Branch cur = std::move(work.back());
        work.pop_back();
        if (cur.h.size() <= 1) {
            done.push_back(std::move(cur));
            continue;
        }
        const Poly& m = cur.modulus;
        APoly q(cur.h.size() - 1);
        Poly carry;
        for (std::size_t k = cur.h.size(); k-- > 1;) {
            carry = (cur.h[k] + carry * r) % m;
            q[k - 1] = carry;
        }
        const Poly rem = (cur.h[0] + carry * r) % m;
        if (rem.is_zero()) {
            work.push_back({m, std::move(q)});
            continue;
        }
        const Poly g = gcd(rem, m);
        if (g.degree() == 0) {
            done.push_back(std::move(cur));
            continue;
        }
        const Poly other = exact_div(m, g);
        work.push_back({g, reduce(q, g)});
        done.push_back({other, reduce(cur.h, other)});
    }
    return done;
}

Witness witness_from_branch(const Branch& br, const std::vector<Rational>& excluded) {
    Witness w;
    w.kind = Witness::Kind::Collision;
    if (br.modulus.degree() == 1) {
        const Rational s0 = -br.modulus.coeff(0) / br.modulus.coeff(1);
        w.s = CurvePoint(s0);
        if (br.h.empty()) {
            w.u = CurvePoint(rational_outside(excluded, s0));
            return w;
        }
        std::vector<Rational> hc;
        for (const auto& c : br.h) hc.push_back(c.coeff(0));
        const Poly hu(hc);
        if (hu.degree() == 1) {
            w.u = CurvePoint(-hu.coeff(0) / hu.coeff(1));
        } else {
            for (const auto& c : hc) w.u_poly.push_back(Poly::constant(c));
        }
        return w;
    }
    w.s_poly = br.modulus;
    w.u_poly = br.h;
    return w;
}

void check_cap(long bound, const VerifyOptions& options, const ChartMap& chart) {
    if (bound > options.degree_cap)
        throw DegreeOverflow("chart " + std::to_string(chart.cone) + ": resultant degree bound " +
                             std::to_string(bound) + " exceeds cap " + std::to_string(options.degree_cap));
}

BiPoly coprime_combination(const BiPoly& f, const BiPoly& a, const BiPoly& b) {
    for (long lambda = 0; lambda < 64; ++lambda) {
        BiPoly h = a + b * Rational(lambda);
        if (h.is_zero()) continue;
        if (gcd(f, h).is_constant()) return h;
    }
    throw std::logic_error("no coprime combination found");
}

// Collisions between two finite points of C_tau.
std::optional<Witness> finite_collision(const ChartMap& chart, const std::array<Coordinate, 3>& coords,
                                        const VerifyOptions& options) {
    const std::vector<Rational> excluded = finite_excluded(chart);
    std::array<BiPoly, 3> g;
    for (std::size_t q = 0; q < 3; ++q) {
        g[q] = difference_numerator(coords[q]).div_u_minus_s();
        if (g[q].is_constant()) return std::nullopt;  // that coordinate alone separates points
    }

    // A common curve component (other than excluded lines) is a positive-
    // dimensional family of collisions.
    BiPoly common = strip_excluded_lines(gcd(g[0], gcd(g[1], g[2])), excluded);
    if (!common.is_constant()) {
        for (long k = 0; k < 400; ++k) {
            const Rational s0 = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k + 1) / 2);
            if (std::find(excluded.begin(), excluded.end(), s0) != excluded.end()) continue;
            Poly fibre = common.at_s(s0);
            Witness w;
            w.s = CurvePoint(s0);
            if (fibre.is_zero()) {
                w.u = CurvePoint(rational_outside(excluded, s0));
                return w;
            }
            strip_root(fibre, s0);
            for (const auto& e : excluded) strip_root(fibre, e);
            if (fibre.degree() < 1) continue;
            fibre = squarefree_part(fibre);
            if (fibre.degree() == 1) {
                w.u = CurvePoint(-fibre.coeff(0) / fibre.coeff(1));
            } else {
                for (const auto& c : fibre.coeffs()) w.u_poly.push_back(Poly::constant(c));
            }
            return w;
        }
        throw std::logic_error("common component found but no witness fibre located");
    }

    // Finitely many common zeros: project to s with two independent resultants.
    const BiPoly h1 = coprime_combination(g[0], g[1], g[2]);
    const BiPoly h2 = coprime_combination(g[1], g[2], g[0]);
    check_cap(resultant_degree_bound(g[0], h1), options, chart);
    check_cap(resultant_degree_bound(g[1], h2), options, chart);
    Poly candidates = gcd(resultant_u(g[0], h1), resultant_u(g[1], h2));
    for (const auto& e : excluded) strip_root(candidates, e);
    if (candidates.degree() < 1) return std::nullopt;
    candidates = squarefree_part(candidates);

    // Exact gcd over Q[s]/(candidates), then discard u = s and u in the
    // excluded set; any surviving branch of positive u-degree is a collision.
    std::vector<Branch> branches;
    for (auto& br : gcd_over(candidates, to_apoly(g[0], candidates), to_apoly(g[1], candidates))) {
        auto sub = gcd_over(br.modulus, br.h, to_apoly(g[2], br.modulus));
        branches.insert(branches.end(), sub.begin(), sub.end());
    }
    std::vector<Branch> current = std::move(branches);
    std::vector<Poly> roots{Poly::x()};
    for (const auto& e : excluded) roots.push_back(Poly::constant(e));
    for (const auto& r : roots) {
        std::vector<Branch> next;
        for (auto& br : current) {
            auto sub = strip_u_root(std::move(br), r);
            next.insert(next.end(), sub.begin(), sub.end());
        }
        current = std::move(next);
    }
    for (const auto& br : current)
        if (br.h.empty() || br.h.size() >= 2) return witness_from_branch(br, excluded);
    return std::nullopt;
}

// Collisions between the point at infinity and a finite point.
std::optional<Witness> infinity_collision(const ChartMap& chart, const std::array<Coordinate, 3>& coords) {
    if (!chart.in_domain(CurvePoint::infinity())) return std::nullopt;
    const std::vector<Rational> excluded = finite_excluded(chart);
    Poly common;
    for (std::size_t q = 0; q < 3; ++q) {
        const PointValue at_inf = evaluate_with_derivative(chart.coords[q], CurvePoint::infinity());
        if (at_inf.pole) return std::nullopt;  // chart not regular at infinity
        common = gcd(common, coords[q].num - coords[q].den * at_inf.value);
    }
    for (const auto& e : excluded) strip_root(common, e);
    if (common.degree() < 1) return std::nullopt;
    common = squarefree_part(common);
    Witness w;
    w.s = CurvePoint::infinity();
    if (common.degree() == 1)
        w.u = CurvePoint(-common.coeff(0) / common.coeff(1));
    else
        for (const auto& c : common.coeffs()) w.u_poly.push_back(Poly::constant(c));
    return w;
}

Poly derivative_numerator(const Coordinate& c) {
    return c.num.derivative() * c.den - c.num * c.den.derivative();
}

// N(s, u) reduced modulo (s_poly(s), u_poly(s, u)); u_poly monic in u.
bool vanishes_modulo(const BiPoly& n, const Poly& s_poly, const APoly& u_poly) {
    APoly a = s_poly.is_zero() ? APoly(n.coeffs()) : to_apoly(n, s_poly);
    if (u_poly.empty()) return a.empty();
    if (s_poly.is_zero()) {
        // s is rational and already substituted; coefficients are constants.
        APoly r = a;
        while (!r.empty() && r.size() >= u_poly.size()) {
            const Poly c = r.back();
            const std::size_t shift = r.size() - u_poly.size();
            for (std::size_t j = 0; j < u_poly.size(); ++j) r[shift + j] -= c * u_poly[j];
            trim(r);
        }
        return r.empty();
    }
    return rem_monic(std::move(a), u_poly, s_poly).empty();
}

APoly monic_constant_poly(const std::vector<Poly>& coeffs) {
    APoly a = coeffs;
    trim(a);
    if (a.empty()) return a;
    const Rational inv = 1 / a.back().coeff(0);
    for (auto& c : a) c *= inv;
    return a;
}

}  // namespace

InjectivityResult chart_injective(const ChartMap& chart, const VerifyOptions& options) {
    const auto coords = coordinates(chart);
    InjectivityResult result;
    std::optional<Witness> w = finite_collision(chart, coords, options);
    if (!w) w = infinity_collision(chart, coords);
    if (w) {
        w->rechecked = recheck_witness(chart, *w);
        result.injective = false;
        result.witness = std::move(w);
    }
    return result;
}

ImmersionResult chart_immersive(const ChartMap& chart) {
    const auto coords = coordinates(chart);
    const std::vector<Rational> excluded = finite_excluded(chart);
    ImmersionResult result;
    Poly common;
    for (const auto& c : coords) common = gcd(common, derivative_numerator(c));
    for (const auto& e : excluded) strip_root(common, e);
    std::optional<Witness> w;
    if (common.degree() >= 1) {
        common = squarefree_part(common);
        w.emplace();
        w->kind = Witness::Kind::DerivativeZero;
        if (common.degree() == 1)
            w->s = CurvePoint(-common.coeff(0) / common.coeff(1));
        else
            w->s_poly = common;
    } else if (chart.in_domain(CurvePoint::infinity())) {
        bool all_zero = true;
        for (const auto& f : chart.coords) {
            const PointValue v = evaluate_with_derivative(f, CurvePoint::infinity());
            if (v.pole || v.derivative != 0) all_zero = false;
        }
        if (all_zero) {
            w.emplace();
            w->kind = Witness::Kind::DerivativeZero;
            w->s = CurvePoint::infinity();
        }
    }
    if (w) {
        w->rechecked = recheck_witness(chart, *w);
        result.immersive = false;
        result.witness = std::move(w);
    }
    return result;
}

bool recheck_witness(const ChartMap& chart, const Witness& w) {
    const auto coords = coordinates(chart);
    const std::vector<Rational> excluded = finite_excluded(chart);
    auto outside = [&](const Poly& p) {
        return std::none_of(excluded.begin(), excluded.end(), [&](const Rational& e) { return p(e) == 0; });
    };

    if (w.kind == Witness::Kind::DerivativeZero) {
        if (w.s) {
            if (!chart.in_domain(*w.s)) return false;
            for (const auto& f : chart.coords) {
                const PointValue v = evaluate_with_derivative(f, *w.s);
                if (v.pole || v.derivative != 0) return false;
            }
            return true;
        }
        if (w.s_poly.degree() < 1 || !outside(w.s_poly)) return false;
        for (const auto& c : coords)
            if (!(derivative_numerator(c) % w.s_poly).is_zero()) return false;
        return true;
    }

    // Collision with both points rational.
    if (w.s && w.u) {
        if (*w.s == *w.u || !chart.in_domain(*w.s) || !chart.in_domain(*w.u)) return false;
        for (const auto& f : chart.coords) {
            const PointValue a = evaluate_with_derivative(f, *w.s);
            const PointValue b = evaluate_with_derivative(f, *w.u);
            if (a.pole || b.pole || a.value != b.value) return false;
        }
        return true;
    }
    // Rational s (possibly infinity), algebraic u.
    if (w.s) {
        if (!chart.in_domain(*w.s)) return false;
        const APoly u_poly = monic_constant_poly(w.u_poly);
        std::vector<Rational> uc;
        for (const auto& c : u_poly) uc.push_back(c.coeff(0));
        const Poly u_univariate(uc);
        if (u_univariate.degree() < 1 || !outside(u_univariate)) return false;
        if (!w.s->is_infinity() && u_univariate(w.s->value()) == 0) return false;
        for (std::size_t q = 0; q < 3; ++q) {
            const PointValue at_s = evaluate_with_derivative(chart.coords[q], *w.s);
            if (at_s.pole) return false;
            const Poly diff = coords[q].num - coords[q].den * at_s.value;
            if (!(diff % u_univariate).is_zero()) return false;
        }
        return true;
    }
    // Algebraic s and u: reduce N_q modulo the triangular set.
    if (w.s_poly.degree() < 1 || !outside(w.s_poly)) return false;
    const APoly u_poly = reduce(w.u_poly, w.s_poly);
    if (!u_poly.empty()) {
        // u = s and u = e must not be roots on any root s.
        auto value_at = [&](const Poly& r) {
            Poly acc;
            for (std::size_t k = u_poly.size(); k-- > 0;) acc = (acc * r + u_poly[k]) % w.s_poly;
            return acc;
        };
        if (gcd(value_at(Poly::x()), w.s_poly).degree() != 0) return false;
        for (const auto& e : excluded)
            if (gcd(value_at(Poly::constant(e)), w.s_poly).degree() != 0) return false;
    }
    for (const auto& c : coords)
        if (!vanishes_modulo(difference_numerator(c), w.s_poly, u_poly)) return false;
    return true;
}

PullbackResult pullback_check(const EmbeddingData& data, const std::vector<ChartMap>& charts) {
    PullbackResult result;
    auto fail = [&](const ChartMap& chart, std::size_t ray, const CurvePoint& p, const char* reason) {
        result.passed = false;
        result.cone = chart.cone;
        result.ray = ray;
        result.point = p;
        result.reason = reason;
        return result;
    };
    for (const ChartMap& chart : charts) {
        for (std::size_t q = 0; q < 3; ++q) {
            const std::size_t ray = chart.rays[q];
            const CDivisor& expected = data.divisors.at(ray);
            const CDivisor zeros = chart.coords[q].divisor();
            for (const auto& [p, m] : zeros.terms()) {
                if (m <= 0 || !chart.in_domain(p)) continue;
                if (!expected.contains(p)) return fail(chart, ray, p, "extra-zero");
                if (m != 1) return fail(chart, ray, p, "reducedness");
            }
            for (const auto& [p, m] : expected.terms()) {
                if (!chart.in_domain(p)) continue;
                if (zeros.multiplicity(p) <= 0) return fail(chart, ray, p, "missing-zero");
                if (m != 1) return fail(chart, ray, p, "reducedness");
            }
        }
    }
    return result;
}

std::vector<bool> Certificate::verdict_vector() const {
    std::vector<bool> v{conditions.passed()};
    for (const auto& c : charts) {
        v.push_back(c.injective);
        v.push_back(c.immersive);
    }
    v.push_back(pullback.passed);
    v.push_back(embedding);
    return v;
}

Certificate certify(const EmbeddingData& data, const VerifyOptions& options) {
    Certificate cert;
    cert.conditions = check_theorem_conditions(data);
    if (!cert.conditions.passed()) {
        cert.pullback.passed = false;
        cert.pullback.reason = "conditions-failed";
        cert.embedding = false;
        return cert;
    }
    const std::vector<ChartMap> charts = chart_maps(data);
    auto run = [&options](const ChartMap& chart) {
        ChartVerdict v;
        v.cone = chart.cone;
        v.rays = chart.rays;
        InjectivityResult inj = chart_injective(chart, options);
        ImmersionResult imm = chart_immersive(chart);
        v.injective = inj.injective;
        v.immersive = imm.immersive;
        if (inj.witness) v.witnesses.push_back(*inj.witness);
        if (imm.witness) v.witnesses.push_back(*imm.witness);
        return v;
    };
    if (options.parallel && charts.size() > 1) {
        std::vector<std::future<ChartVerdict>> futures;
        futures.reserve(charts.size());
        for (const auto& chart : charts) futures.push_back(std::async(std::launch::async, run, std::cref(chart)));
        for (auto& f : futures) cert.charts.push_back(f.get());
    } else {
        for (const auto& chart : charts) cert.charts.push_back(run(chart));
    }
    cert.pullback = pullback_check(data, charts);
    cert.embedding = cert.pullback.passed && std::all_of(cert.charts.begin(), cert.charts.end(), [](const auto& c) {
                         return c.injective && c.immersive;
                     });
    return cert;
}

}  // namespace torembed
