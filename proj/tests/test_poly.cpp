#include <doctest.h>

#include <random>

#include "torembed/poly.hpp"

using namespace torembed;

namespace {

Poly from_roots(const std::vector<Rational>& roots, const Rational& lead = 1) {
    Poly p = Poly::constant(lead);
    for (const auto& r : roots) p *= Poly::linear(r);
    return p;
}

Poly random_poly(std::mt19937_64& gen, long degree, long range) {
    std::vector<Rational> c;
    for (long k = 0; k <= degree; ++k) c.emplace_back(static_cast<long>(gen() % static_cast<std::uint64_t>(2 * range + 1)) - range);
    if (c.back() == 0) c.back() = 1;
    return Poly(c);
}

// Determinant of the Sylvester matrix by rational Gaussian elimination.
Rational sylvester_resultant(const Poly& a, long da, const Poly& b, long db) {
    const std::size_t n = static_cast<std::size_t>(da + db);
    if (n == 0) return 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (long r = 0; r < db; ++r)
        for (long k = 0; k <= da; ++k) m[r][r + k] = a.coeff(static_cast<std::size_t>(da - k));
    for (long r = 0; r < da; ++r)
        for (long k = 0; k <= db; ++k) m[db + r][r + k] = b.coeff(static_cast<std::size_t>(db - k));
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

BiPoly random_bipoly(std::mt19937_64& gen, long du, long ds, long range) {
    std::vector<Poly> c;
    for (long k = 0; k <= du; ++k) c.push_back(random_poly(gen, ds, range));
    return BiPoly(c);
}

}  // namespace

TEST_SUITE("poly") {
    TEST_CASE("arithmetic and evaluation") {
        const Poly p = from_roots({Rational(1), Rational(-2)});  // x^2 + x - 2
        CHECK(p.coeffs() == std::vector<Rational>{Rational(-2), Rational(1), Rational(1)});
        CHECK(p(Rational(1)) == 0);
        CHECK(p(Rational(3)) == 10);
        CHECK(p.derivative() == Poly(std::vector<Rational>{Rational(1), Rational(2)}));
        CHECK(Poly::x().pow(3).degree() == 3);
        CHECK((p - p).is_zero());
        CHECK(Poly().degree() == -1);
        CHECK(p.reversed(2) == Poly(std::vector<Rational>{Rational(1), Rational(1), Rational(-2)}));
        const auto [q, r] = divmod(p, Poly::linear(Rational(1)));
        CHECK(q == Poly::linear(Rational(-2)));
        CHECK(r.is_zero());
        CHECK_THROWS(exact_div(p, Poly::linear(Rational(5))));
    }

    TEST_CASE("gcd of polynomials with known common factor") {
        std::mt19937_64 gen(42);
        for (int trial = 0; trial < 40; ++trial) {
            const Poly f = random_poly(gen, static_cast<long>(gen() % 4), 9);
            const Poly g = random_poly(gen, static_cast<long>(gen() % 5), 9);
            const Poly h = random_poly(gen, static_cast<long>(gen() % 5), 9);
            const Poly d = gcd(f * g, f * h);
            // d divides both products and contains f.
            CHECK((f * g % d).is_zero());
            CHECK((f * h % d).is_zero());
            if (f.degree() > 0) CHECK((d % f.monic()).is_zero());
            CHECK(d.lead() == 1);
            // Coprimality of the cofactors.
            CHECK(gcd(exact_div(f * g, d), exact_div(f * h, d)).degree() == 0);
        }
    }

    TEST_CASE("gcd with large coefficients and high degree") {
        std::mt19937_64 gen(7);
        const Poly common = from_roots({Rational(3, 7), Rational(-11, 5), Rational(1000003)});
        const Poly a = common * random_poly(gen, 40, 1000000);
        const Poly b = common * random_poly(gen, 45, 1000000);
        const Poly g = gcd(a, b);
        CHECK((g % common.monic()).is_zero());
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        CHECK(g.degree() >= 3);
    }

    TEST_CASE("gcd edge cases") {
        const Poly p = from_roots({Rational(2)}, Rational(5));
        CHECK(gcd(p, Poly()) == Poly::linear(Rational(2)));
        CHECK(gcd(Poly(), p) == Poly::linear(Rational(2)));
        CHECK(gcd(p, Poly(7)) == Poly(1));
        CHECK(gcd(Poly(), Poly()).is_zero());
    }

    TEST_CASE("squarefree part, xgcd and root stripping") {
        const Poly p = from_roots({Rational(1), Rational(1), Rational(2), Rational(1, 3), Rational(1, 3), Rational(1, 3)});
        CHECK(squarefree_part(p) == from_roots({Rational(1), Rational(2), Rational(1, 3)}));
        Poly q = p;
        CHECK(strip_root(q, Rational(1, 3)) == 3);
        CHECK(q == from_roots({Rational(1), Rational(1), Rational(2)}));
        const Poly a = from_roots({Rational(1), Rational(2)});
        const Poly b = from_roots({Rational(3), Rational(-1)});
        const XGcd x = xgcd(a, b);
        CHECK(x.g == Poly(1));
        CHECK(x.s * a + x.t * b == x.g);
    }

    TEST_CASE("univariate resultant against the Sylvester determinant and root products") {
        std::mt19937_64 gen(11);
        for (int trial = 0; trial < 30; ++trial) {
            const long da = 1 + static_cast<long>(gen() % 5), db = 1 + static_cast<long>(gen() % 5);
            const Poly a = random_poly(gen, da, 6), b = random_poly(gen, db, 6);
            CHECK(resultant(a, da, b, db) == sylvester_resultant(a, da, b, db));
        }
        // Res(prod (x - r_i), g) = prod g(r_i) for monic first argument.
        const std::vector<Rational> roots{Rational(1), Rational(-3), Rational(2, 5)};
        const Poly g = random_poly(gen, 3, 5);
        Rational expected = 1;
        for (const auto& r : roots) expected *= g(r);
        CHECK(resultant(from_roots(roots), 3, g, 3) == expected);
        CHECK(resultant(from_roots({Rational(1)}), 1, from_roots({Rational(1)}), 1) == 0);
    }

    TEST_CASE("bivariate basics") {
        // u - s
        const BiPoly d(std::vector<Poly>{-Poly::x(), Poly(1)});
        CHECK(d.diagonal().is_zero());
        const BiPoly sq = d * d;
        CHECK(sq.div_u_minus_s() == d);
        CHECK_THROWS(d.div_u_minus_s().div_u_minus_s());
        CHECK(sq(Rational(2), Rational(5)) == 9);
        CHECK(d.swapped() == d * Rational(-1));
        const auto [q, r] = sq.divmod_u_minus(Rational(3));
        CHECK(r == (Poly::x() - Poly(3)) * (Poly::x() - Poly(3)));
        CHECK(q.degree_u() == 1);
        CHECK(BiPoly::in_u(Poly::x()).at_u(Rational(4)) == Poly(4));
    }

    TEST_CASE("bivariate gcd recovers a planted common factor") {
        std::mt19937_64 gen(3);
        for (int trial = 0; trial < 12; ++trial) {
            const BiPoly f = random_bipoly(gen, 1 + static_cast<long>(gen() % 2), 1 + static_cast<long>(gen() % 2), 5);
            const BiPoly g = random_bipoly(gen, 2, 2, 5);
            const BiPoly h = random_bipoly(gen, 2, 3, 5);
            const BiPoly d = gcd(f * g, f * h);
            CHECK(d.degree_u() >= f.degree_u());
            // f divides d: check at many rational points via univariate gcds.
            for (long s = -3; s <= 3; ++s) {
                const Poly fs = f.at_s(Rational(s));
                const Poly ds = d.at_s(Rational(s));
                if (fs.degree() > 0 && !ds.is_zero()) CHECK((ds % fs).is_zero());
            }
        }
        // Coprime inputs.
        const BiPoly a(std::vector<Poly>{-Poly::x(), Poly(1)});  // u - s
        const BiPoly b(std::vector<Poly>{Poly::x(), Poly(1)});   // u + s
        CHECK(gcd(a, b).is_constant());
    }

    TEST_CASE("resultant in u matches pointwise resultants") {
        std::mt19937_64 gen(8);
        for (int trial = 0; trial < 10; ++trial) {
            const BiPoly a = random_bipoly(gen, 2 + static_cast<long>(gen() % 2), 2, 4);
            const BiPoly b = random_bipoly(gen, 2, 1 + static_cast<long>(gen() % 3), 4);
            const Poly r = resultant_u(a, b);
            CHECK(r.degree() <= resultant_degree_bound(a, b));
            for (long s = -4; s <= 4; ++s) {
                const Rational s0(s);
                CHECK(r(s0) == sylvester_resultant(a.at_s(s0), a.degree_u(), b.at_s(s0), b.degree_u()));
            }
        }
    }
}
