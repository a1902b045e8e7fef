#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torembed/linalg.hpp"

namespace torembed {

/// Dense univariate polynomial over Q, coefficients lowest degree first,
/// always trimmed so the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(long c) : Poly(std::vector<Rational>{Rational(c)}) {}  // NOLINT(google-explicit-constructor)
    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
    static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    /// x - root
    static Poly linear(const Rational& root) { return Poly(std::vector<Rational>{Rational(-root), Rational(1)}); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;
    Poly pow(unsigned e) const;
    /// x^d p(1/x) for d = degree(), i.e. coefficients reversed.
    Poly reversed(std::size_t d) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& k);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& k) { return a *= k; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact quotient; throws std::logic_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& a);
/// Extended gcd: returns (g, s, t) with s a + t b = g, g monic.
struct XGcd {
    Poly g, s, t;
};
XGcd xgcd(const Poly& a, const Poly& b);
/// Removes every factor (x - root); returns the multiplicity removed.
unsigned strip_root(Poly& p, const Rational& root);
/// Integer-coefficient primitive multiple with positive leading coefficient.
std::vector<Integer> primitive_integer(const Poly& p);

/// Bivariate polynomial in (s, u) stored as a polynomial in u whose
/// coefficients are polynomials in s.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<Poly> coeffs_in_u);
    /// p(s) viewed as constant in u.
    static BiPoly in_s(const Poly& p) { return BiPoly(std::vector<Poly>{p}); }
    /// p(u) with constant coefficients.
    static BiPoly in_u(const Poly& p);

    long degree_u() const { return static_cast<long>(c_.size()) - 1; }
    long degree_s() const;
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].is_constant()); }
    const std::vector<Poly>& coeffs() const { return c_; }
    const Poly& lead() const { return c_.back(); }

    /// Substitute s = value: a polynomial in u.
    Poly at_s(const Rational& value) const;
    /// Substitute u = value: a polynomial in s.
    Poly at_u(const Rational& value) const;
    /// Substitute u = s.
    Poly diagonal() const;
    Rational operator()(const Rational& s, const Rational& u) const;
    BiPoly swapped() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& k);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    friend BiPoly operator*(BiPoly a, const Rational& k) { return a *= k; }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    /// Monic gcd of the u-coefficients.
    Poly content() const;
    BiPoly primitive_part() const;
    /// Divide every coefficient exactly by p(s).
    BiPoly div_s(const Poly& p) const;
    /// Quotient by (u - s); throws std::logic_error if not exact.
    BiPoly div_u_minus_s() const;
    /// Quotient and remainder (a polynomial in s) by (u - value).
    std::pair<BiPoly, Poly> divmod_u_minus(const Rational& value) const;

private:
    void trim();
    std::vector<Poly> c_;
};

/// gcd in Q[s][u], normalised so its leading u-coefficient is monic in s.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

/// Upper bound on deg_s Res_u(a, b).
long resultant_degree_bound(const BiPoly& a, const BiPoly& b);

/// Res_u(a, b) as a polynomial in s (by evaluation at integer points and
/// interpolation; the Sylvester matrix uses the formal u-degrees).
Poly resultant_u(const BiPoly& a, const BiPoly& b);

/// Resultant of two univariate polynomials with the given formal degrees.
Rational resultant(const Poly& a, long deg_a, const Poly& b, long deg_b);

}  // namespace torembed
