#include <doctest.h>

#include <map>
#include <random>

#include "support/fixtures.hpp"
#include "torembed/errors.hpp"
#include "torembed/io.hpp"
#include "torembed/verify.hpp"

using namespace torembed;

namespace {

EmbeddingData pipeline_data(const std::string& name, std::uint64_t seed, const TorusElement& t = default_torus()) {
    const Fan f = preset(name);
    const TDivisor h = find_ample(f);
    return build_embedding_data(f, h, xi_vector(f, h, XiMethod::Intersection), seed, t);
}

std::array<Rational, 3> image(const ChartMap& chart, const CurvePoint& p) {
    std::array<Rational, 3> v;
    for (std::size_t q = 0; q < 3; ++q) {
        const PointValue pv = evaluate_with_derivative(chart.coords[q], p);
        REQUIRE_FALSE(pv.pole);
        v[q] = pv.value;
    }
    return v;
}

// Rational points of small height plus every divisor point, restricted to the chart.
std::vector<CurvePoint> sample_points(const EmbeddingData& data, const ChartMap& chart, std::size_t count) {
    std::vector<CurvePoint> pts;
    for (const auto& d : data.divisors)
        for (const auto& p : d.support())
            if (chart.in_domain(p)) pts.push_back(p);
    for (long den = 1; pts.size() < count; ++den)
        for (long num = -3 * den; num <= 3 * den && pts.size() < count; ++num) {
            if (gcd(Integer(num), Integer(den)) != 1) continue;
            const CurvePoint p(Rational(num, den));
            if (chart.in_domain(p)) pts.push_back(p);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// p = (t^2, t^2, t (t - 1)(t + 2)) collides exactly at s = -u = +-sqrt(2).
ChartMap irrational_collision_chart() {
    ChartMap c;
    c.cone = 0;
    c.rays = {0, 1, 2};
    c.duals = {IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{0, 0, 1}};
    const RationalFunction sq(Rational(1), {{Rational(0), 2}});
    c.coords = {sq, sq, RationalFunction(Rational(1), {{Rational(0), 1}, {Rational(1), 1}, {Rational(-2), 1}})};
    c.excluded = {CurvePoint::infinity()};
    return c;
}

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("pipeline data on every preset is certified") {
        VerifyOptions opts;
        for (const auto& name : preset_names()) {
            const Certificate cert = certify(pipeline_data(name, 1), opts);
            CHECK(cert.conditions.passed());
            CHECK(cert.pullback.passed);
            for (const auto& c : cert.charts) {
                CHECK(c.injective);
                CHECK(c.immersive);
                CHECK(c.witnesses.empty());
            }
            CHECK(cert.embedding);
            CHECK(cert.verdict_vector().size() == 2 + 2 * cert.charts.size() + 1);
        }
    }

    TEST_CASE("even coordinates give a rechecked collision s, -s") {
        const EmbeddingData data = fixtures::symmetric_p3();
        REQUIRE(check_theorem_conditions(data).passed());
        const Certificate cert = certify(data);
        CHECK_FALSE(cert.embedding);
        for (const auto& c : cert.charts) {
            CHECK_FALSE(c.injective);
            CHECK_FALSE(c.immersive);
            REQUIRE_FALSE(c.witnesses.empty());
            for (const auto& w : c.witnesses) {
                CHECK(w.rechecked);
                if (w.kind == Witness::Kind::Collision && w.exact()) CHECK(w.s->value() == -w.u->value());
                if (w.kind == Witness::Kind::DerivativeZero && w.exact()) CHECK(*w.s == CurvePoint(0));
            }
        }
    }

    TEST_CASE("collision at an irrational point has an algebraic witness") {
        const ChartMap chart = irrational_collision_chart();
        const InjectivityResult r = chart_injective(chart);
        CHECK_FALSE(r.injective);
        REQUIRE(r.witness.has_value());
        const Witness& w = *r.witness;
        CHECK_FALSE(w.exact());
        CHECK(w.s_poly.monic() == Poly(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)}));
        CHECK(w.rechecked);
        CHECK(recheck_witness(chart, w));
        CHECK(chart_immersive(chart).immersive);
    }

    TEST_CASE("a forged witness fails the recheck") {
        const EmbeddingData data = pipeline_data("p3", 2);
        const ChartMap chart = chart_map(data, 3);
        Witness w;
        w.kind = Witness::Kind::Collision;
        w.s = CurvePoint(Rational(1, 7));
        w.u = CurvePoint(Rational(-1, 7));
        CHECK_FALSE(recheck_witness(chart, w));
        Witness d;
        d.kind = Witness::Kind::DerivativeZero;
        d.s = CurvePoint(Rational(1, 7));
        CHECK_FALSE(recheck_witness(chart, d));
    }

    TEST_CASE("doubled point fails the reducedness check") {
        const EmbeddingData data = fixtures::doubled_point_p3();
        const Certificate cert = certify(data);
        CHECK(cert.conditions.passed());
        CHECK_FALSE(cert.pullback.passed);
        CHECK(cert.pullback.reason == "reducedness");
        REQUIRE(cert.pullback.ray.has_value());
        CHECK(*cert.pullback.ray == 0);
        CHECK(*cert.pullback.point == CurvePoint(5));
        CHECK_FALSE(cert.embedding);
    }

    TEST_CASE("extra zero is caught by the conditions and by the pullback check") {
        const EmbeddingData data = fixtures::extra_zero_p3(Rational(1000));
        // On the identity chart the first coordinate is eps(m_1) itself.
        const PullbackResult r = pullback_check(data, {chart_map(data, 3)});
        CHECK_FALSE(r.passed);
        CHECK(r.reason == "extra-zero");
        CHECK(*r.ray == 0);
        CHECK(*r.point == CurvePoint(1000));
        // Elsewhere eps(m_1) also acquires a pole at infinity, which shows up as a zero.
        const PullbackResult all = pullback_check(data, chart_maps(data));
        CHECK_FALSE(all.passed);
        CHECK(all.reason == "extra-zero");
        const Certificate cert = certify(data);
        CHECK_FALSE(cert.conditions.passed());
        CHECK_FALSE(cert.embedding);
        CHECK(cert.charts.empty());
    }

    TEST_CASE("verdicts do not depend on the torus element") {
        std::mt19937_64 gen(12);
        for (const auto& name : preset_names()) {
            const auto base = certify(pipeline_data(name, 4)).verdict_vector();
            for (int trial = 0; trial < 2; ++trial) {
                TorusElement t;
                for (auto& c : t) {
                    c = Rational(static_cast<long>(gen() % 9) + 1, static_cast<long>(gen() % 5) + 1);
                    c.canonicalize();
                }
                CHECK(certify(pipeline_data(name, 4, t)).verdict_vector() == base);
            }
            CHECK(certify(fixtures::symmetric_p3()).verdict_vector() ==
                  certify(assemble_embedding_data(preset("p3"), unit_divisor(preset("p3"), 0),
                                                  XiVector{{2, 2, 2, 2}, XiMethod::Kernel, 1},
                                                  fixtures::symmetric_p3().divisors,
                                                  {Rational(3), Rational(-2), Rational(1, 5)}))
                      .verdict_vector());
        }
    }

    TEST_CASE("certificates are deterministic and independent of scheduling") {
        const EmbeddingData data = pipeline_data("bl-p3-point", 6);
        VerifyOptions serial;
        serial.parallel = false;
        const std::string a = dump(certificate_to_json(certify(data)));
        const std::string b = dump(certificate_to_json(certify(data)));
        const std::string c = dump(certificate_to_json(certify(data, serial)));
        CHECK(a == b);
        CHECK(a == c);
    }

    TEST_CASE("no collisions among sampled points on certified charts") {
        for (const auto& name : preset_names()) {
            const EmbeddingData data = pipeline_data(name, 8);
            REQUIRE(certify(data).embedding);
            for (const ChartMap& chart : chart_maps(data)) {
                const auto pts = sample_points(data, chart, 45);
                std::map<std::array<Rational, 3>, CurvePoint> seen;
                for (const auto& p : pts) {
                    const auto [it, inserted] = seen.emplace(image(chart, p), p);
                    CHECK_MESSAGE(inserted, "collision between " << it->second.str() << " and " << p.str());
                }
            }
        }
        // The symmetric fixture collides on sampled pairs.
        const EmbeddingData sym = fixtures::symmetric_p3();
        const ChartMap chart = chart_map(sym, 3);
        CHECK(image(chart, CurvePoint(Rational(1, 2))) == image(chart, CurvePoint(Rational(-1, 2))));
    }

    TEST_CASE("resultant degree cap") {
        const Fan f = preset("p1p1p1");
        const TDivisor h(6, Integer(1));
        const EmbeddingData data = build_embedding_data(f, h, xi_vector(f, h, XiMethod::Intersection), 1);
        VerifyOptions opts;
        opts.degree_cap = 16;
        CHECK_THROWS_AS(chart_injective(chart_map(data, 0), opts), DegreeOverflow);
        CHECK_THROWS_AS(certify(data, opts), DegreeOverflow);
    }
}
