#include <doctest.h>

#include "torembed/curve.hpp"
#include "torembed/errors.hpp"

using namespace torembed;

TEST_SUITE("curve") {
    TEST_CASE("points parse and print") {
        CHECK(CurvePoint::parse("3/6").str() == "1/2");
        CHECK(CurvePoint::parse("-4").str() == "-4");
        CHECK(CurvePoint::parse("inf").is_infinity());
        CHECK(CurvePoint::infinity().str() == "inf");
        CHECK_THROWS_AS(CurvePoint::parse("abc"), FormatError);
        CHECK_THROWS_AS(CurvePoint::parse("1/0"), FormatError);
        CHECK(CurvePoint(Rational(1, 2)) < CurvePoint(1));
        CHECK(CurvePoint(1000) < CurvePoint::infinity());
    }

    TEST_CASE("divisors") {
        CDivisor d({{CurvePoint(1), 2}, {CurvePoint(-1), 1}});
        CHECK(d.degree() == 3);
        CHECK_FALSE(d.is_reduced());
        CHECK(d.is_effective());
        CHECK(d.multiplicity(CurvePoint(1)) == 2);
        d.add(CurvePoint(1), -2);
        CHECK_FALSE(d.contains(CurvePoint(1)));
        CHECK(d.is_reduced());
        const CDivisor e = 2 * d + CDivisor({{CurvePoint::infinity(), -2}});
        CHECK(e.degree() == 0);
        CHECK_FALSE(e.is_effective());
    }

    TEST_CASE("rational functions and their divisors") {
        // 3 (t - 1)^2 / (t + 2)
        const RationalFunction f(Rational(3), {{Rational(1), 2}, {Rational(-2), -1}});
        const CDivisor d = f.divisor();
        CHECK(d.degree() == 0);
        CHECK(d.multiplicity(CurvePoint(1)) == 2);
        CHECK(d.multiplicity(CurvePoint(-2)) == -1);
        CHECK(f.order_at(CurvePoint::infinity()) == -1);
        CHECK(f.numerator() == Poly::linear(Rational(1)) * Poly::linear(Rational(1)) * Rational(3));
        CHECK(f.denominator() == Poly::linear(Rational(-2)));
        CHECK((f * f.inverse()) == RationalFunction::constant(Rational(1)));
        CHECK(f.pow(2).order_at(CurvePoint(1)) == 4);
        CHECK(f.pow(-1) == f.inverse());
        CHECK(f.scaled(Rational(2)).constant_factor() == 6);
    }

    TEST_CASE("evaluation with derivative") {
        const RationalFunction f(Rational(3), {{Rational(1), 2}, {Rational(-2), -1}});
        for (long k = -5; k <= 5; ++k) {
            if (k == -2) continue;
            Rational t(k, 3);
            t.canonicalize();
            const PointValue v = evaluate_with_derivative(f, CurvePoint(t));
            const Rational num = 3 * (t - 1) * (t - 1), den = t + 2;
            CHECK_FALSE(v.pole);
            CHECK(v.value == num / den);
            // Quotient rule by hand.
            CHECK(v.derivative == (6 * (t - 1) * den - num) / (den * den));
        }
        CHECK(evaluate_with_derivative(f, CurvePoint(-2)).pole);
        CHECK(evaluate_with_derivative(f, CurvePoint::infinity()).pole);
        // g = (t - 1)/(t - 2) at infinity: in w = 1/t, g = (1 - w)/(1 - 2w).
        const RationalFunction g(Rational(1), {{Rational(1), 1}, {Rational(2), -1}});
        const PointValue at_inf = evaluate_with_derivative(g, CurvePoint::infinity());
        CHECK_FALSE(at_inf.pole);
        CHECK(at_inf.value == 1);
        CHECK(at_inf.derivative == 1);
    }

    TEST_CASE("sampling is deterministic, reduced and avoids the given points") {
        const std::vector<CurvePoint> avoid{CurvePoint(0), CurvePoint(1)};
        const CDivisor a = sample_divisor(12, 99, avoid);
        const CDivisor b = sample_divisor(12, 99, avoid);
        CHECK(a == b);
        CHECK(a.degree() == 12);
        CHECK(a.is_reduced());
        for (const auto& p : avoid) CHECK_FALSE(a.contains(p));
        CHECK_FALSE(a.contains(CurvePoint::infinity()));
        CHECK(sample_divisor(12, 100, avoid) != a);
        CHECK(sample_divisor(0, 5, {}).degree() == 0);
        CHECK_THROWS(sample_divisor(-1, 5, {}));
    }

    TEST_CASE("principal function of a degree-zero divisor") {
        const CDivisor d({{CurvePoint(1), 1}, {CurvePoint(2), 1}, {CurvePoint(3), -2}});
        const RationalFunction f = principal_function(d);
        CHECK(f.divisor() == d);
        CHECK(f.constant_factor() == 1);
        const CDivisor with_inf({{CurvePoint(5), 1}, {CurvePoint::infinity(), -1}});
        CHECK(principal_function(with_inf).divisor() == with_inf);
        CHECK_THROWS_AS(principal_function(CDivisor({{CurvePoint(1), 1}})), NotDegreeZero);
    }

    TEST_CASE("the projective line has genus zero") {
        const ProjectiveLine p1;
        CHECK(p1.genus() == 0);
        CHECK(p1.name() == "P1");
    }
}
