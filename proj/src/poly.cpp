#include "torembed/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace torembed {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly p = *this;
    Rational inv = 1 / lead();
    return p *= inv;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::reversed(std::size_t d) const {
    if (static_cast<long>(d) < degree()) throw std::invalid_argument("reversed: degree too small");
    std::vector<Rational> r(d + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) r[d - k] = c_[k];
    return Poly(std::move(r));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k].get_str();
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Rational> q(rem.size() - db);
    const Rational inv = 1 / b.lead();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] * inv;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: remainder is nonzero");
    return q;
}

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& x : p) g = gcd(g, x);
    return g;
}

void make_primitive(IntPoly& p) {
    trim(p);
    if (p.empty()) return;
    Integer g = content(p);
    if (p.back() < 0) g = -g;
    for (auto& x : p) x /= g;
}

Poly from_integer(const IntPoly& p) {
    std::vector<Rational> c(p.begin(), p.end());
    return Poly(std::move(c));
}

}  // namespace

std::vector<Integer> primitive_integer(const Poly& p) {
    Integer l = 1;
    for (const auto& x : p.coeffs()) l = lcm(l, x.get_den());
    IntPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        Rational v = x * l;
        out.push_back(v.get_num());
    }
    make_primitive(out);
    return out;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1U) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1U;
    }
    return r;
}

using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce_mod(const IntPoly& a, u64 p) {
    ModPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    trim(out);
    return out;
}

// Monic gcd over F_p.
ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        const u64 inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            const u64 c = mulmod(a.back(), inv, p);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv = powmod(a.back(), p - 2, p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

}  // namespace

// Multi-prime modular gcd of integer polynomials: images gcd_p * gamma are
// combined by CRT until the lifted candidate divides both inputs.
Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0) return Poly(1);
    const IntPoly x = primitive_integer(a);
    const IntPoly y = primitive_integer(b);
    const Integer gamma = gcd(x.back(), y.back());
    const Poly xa = from_integer(x);
    const Poly ya = from_integer(y);

    Integer modulus = 1;
    IntPoly lifted;
    long best = std::min(x.size(), y.size());
    Integer prime = Integer(1) << 61;
    for (;;) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const u64 p = prime.get_ui();
        if (mpz_fdiv_ui(x.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(y.back().get_mpz_t(), p) == 0) continue;
        ModPoly g = gcd_mod(reduce_mod(x, p), reduce_mod(y, p), p);
        const long deg = static_cast<long>(g.size()) - 1;
        if (deg == 0) return Poly(1);
        if (deg > best) continue;
        const u64 gp = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& c : g) c = mulmod(c, gp, p);
        if (deg < best) {
            best = deg;
            modulus = 1;
            lifted.assign(g.size(), Integer(0));
        }
        // CRT step: lifted + modulus * t with t = (g - lifted) / modulus mod p.
        const u64 inv = powmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p - 2, p);
        bool changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const u64 cur = mpz_fdiv_ui(lifted[i].get_mpz_t(), p);
            const u64 t = mulmod((g[i] + p - cur) % p, inv, p);
            if (t != 0) {
                lifted[i] += modulus * Integer(static_cast<unsigned long>(t));
                changed = true;
            }
        }
        modulus *= Integer(static_cast<unsigned long>(p));
        const Integer half = modulus / 2;
        for (auto& c : lifted) {
            if (c > half) c -= modulus;
            if (c < -half) c += modulus;
        }
        if (changed && modulus != Integer(static_cast<unsigned long>(p))) continue;
        IntPoly candidate = lifted;
        make_primitive(candidate);
        const Poly cp = from_integer(candidate);
        if (divmod(xa, cp).second.is_zero() && divmod(ya, cp).second.is_zero()) return cp.monic();
    }
}

Poly squarefree_part(const Poly& a) {
    if (a.degree() <= 0) return a.monic();
    return exact_div(a, gcd(a, a.derivative())).monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b, s0 = 1, s1, t0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {};
    const Rational inv = 1 / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

unsigned strip_root(Poly& p, const Rational& root) {
    if (p.is_zero()) return 0;
    unsigned mult = 0;
    const Poly lin = Poly::linear(root);
    while (p.degree() >= 1 && p(root) == 0) {
        p = exact_div(p, lin);
        ++mult;
    }
    return mult;
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::vector<Poly> coeffs_in_u) : c_(std::move(coeffs_in_u)) { trim(); }

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::in_u(const Poly& p) {
    std::vector<Poly> c;
    for (const auto& x : p.coeffs()) c.push_back(Poly::constant(x));
    return BiPoly(std::move(c));
}

long BiPoly::degree_s() const {
    long d = -1;
    for (const auto& p : c_) d = std::max(d, p.degree());
    return d;
}

Poly BiPoly::at_s(const Rational& value) const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& p : c_) c.push_back(p(value));
    return Poly(std::move(c));
}

Poly BiPoly::at_u(const Rational& value) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

Poly BiPoly::diagonal() const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * Poly::x() + *it;
    return acc;
}

Rational BiPoly::operator()(const Rational& s, const Rational& u) const { return at_s(s)(u); }

BiPoly BiPoly::swapped() const {
    const long ds = degree_s();
    if (ds < 0) return {};
    std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(ds) + 1,
                                            std::vector<Rational>(c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k)
        for (std::size_t j = 0; j < c_[k].coeffs().size(); ++j) grid[j][k] = c_[k].coeffs()[j];
    std::vector<Poly> out;
    out.reserve(grid.size());
    for (auto& row : grid) out.emplace_back(std::move(row));
    return BiPoly(std::move(out));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Poly> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& k) {
    for (auto& p : c_) p *= k;
    trim();
    return *this;
}

Poly BiPoly::content() const {
    Poly g;
    for (const auto& p : c_) {
        g = gcd(g, p);
        if (g.degree() == 0) break;
    }
    return g;
}

BiPoly BiPoly::primitive_part() const {
    if (is_zero()) return {};
    return div_s(content());
}

BiPoly BiPoly::div_s(const Poly& p) const {
    std::vector<Poly> out;
    out.reserve(c_.size());
    for (const auto& q : c_) out.push_back(exact_div(q, p));
    return BiPoly(std::move(out));
}

BiPoly BiPoly::div_u_minus_s() const {
    // Synthetic division by (u - s) over Q[s].
    if (is_zero()) return {};
    std::vector<Poly> q(c_.size() - 1);
    Poly carry;
    for (std::size_t k = c_.size(); k-- > 1;) {
        carry = c_[k] + carry * Poly::x();
        q[k - 1] = carry;
    }
    Poly rem = c_[0] + carry * Poly::x();
    if (!rem.is_zero()) throw std::logic_error("div_u_minus_s: not divisible");
    return BiPoly(std::move(q));
}

std::pair<BiPoly, Poly> BiPoly::divmod_u_minus(const Rational& value) const {
    if (is_zero()) return {};
    std::vector<Poly> q(c_.size() - 1);
    Poly carry;
    for (std::size_t k = c_.size(); k-- > 1;) {
        carry = c_[k] + carry * value;
        q[k - 1] = carry;
    }
    Poly rem = c_[0] + carry * value;
    return {BiPoly(std::move(q)), std::move(rem)};
}

namespace {

// Pseudo-remainder in u over Q[s]: lc(b)^e * a mod b.
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
    const BiPoly lb = BiPoly::in_s(b.lead());
    while (!a.is_zero() && a.degree_u() >= b.degree_u()) {
        const long shift = a.degree_u() - b.degree_u();
        std::vector<Poly> mono(static_cast<std::size_t>(shift) + 1);
        mono.back() = a.lead();
        a = a * lb - BiPoly(std::move(mono)) * b;
    }
    return a;
}

BiPoly normalise(const BiPoly& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.lead().lead();
    return p * inv;
}

}  // namespace

namespace {

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    // Newton divided differences.
    std::vector<Rational> d = ys;
    const std::size_t n = xs.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - k]);
    Poly out = Poly::constant(d[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) out = out * Poly::linear(xs[i]) + Poly::constant(d[i]);
    return out;
}

bool divides(const BiPoly& g, const BiPoly& a) { return pseudo_remainder(a, g).is_zero(); }

// gcd of two polynomials primitive over Q[s], by evaluation at s = 0, 1, -1,
// 2, ... and interpolation of gamma(s) * monic gcd, where gamma is the gcd of
// the leading coefficients. Points where the u-degree of the image gcd is too
// large are discarded; the result is confirmed by pseudo-division.
BiPoly primitive_gcd(const BiPoly& a, const BiPoly& b) {
    const Poly gamma = gcd(a.lead(), b.lead());
    const long bound = std::min(a.degree_s(), b.degree_s()) + gamma.degree();
    std::vector<Rational> xs;
    std::vector<Poly> images;
    long best = std::min(a.degree_u(), b.degree_u()) + 1;
    for (long k = 0;; ++k) {
        const Rational s0 = (k % 2 == 0) ? Rational(k / 2) : Rational(-(k + 1) / 2);
        if (a.lead()(s0) == 0 || b.lead()(s0) == 0) continue;
        Poly g = gcd(a.at_s(s0), b.at_s(s0));
        if (g.degree() == 0) return BiPoly::in_s(Poly(1));
        if (g.degree() > best) continue;
        if (g.degree() < best) {
            best = g.degree();
            xs.clear();
            images.clear();
        }
        xs.push_back(s0);
        images.push_back(g * gamma(s0));
        if (static_cast<long>(xs.size()) < bound + 1) continue;
        std::vector<Poly> coeffs(static_cast<std::size_t>(best) + 1);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            std::vector<Rational> ys;
            ys.reserve(images.size());
            for (const auto& im : images) ys.push_back(im.coeff(j));
            coeffs[j] = interpolate(xs, ys);
        }
        BiPoly candidate = BiPoly(std::move(coeffs)).primitive_part();
        if (divides(candidate, a) && divides(candidate, b)) return candidate;
    }
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return normalise(b.is_zero() ? b : b.primitive_part() * BiPoly::in_s(b.content()));
    if (b.is_zero()) return normalise(a.primitive_part() * BiPoly::in_s(a.content()));
    const Poly cont = gcd(a.content(), b.content());
    const BiPoly x = a.primitive_part();
    const BiPoly y = b.primitive_part();
    // A primitive polynomial of u-degree zero is a constant.
    if (x.degree_u() == 0 || y.degree_u() == 0) return normalise(BiPoly::in_s(cont));
    return normalise(primitive_gcd(x, y) * BiPoly::in_s(cont));
}

long resultant_degree_bound(const BiPoly& a, const BiPoly& b) {
    return std::max(0L, a.degree_u()) * std::max(0L, b.degree_s()) +
           std::max(0L, b.degree_u()) * std::max(0L, a.degree_s());
}

namespace {

// Fraction-free Bareiss determinant over Z.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer integer_resultant(const std::vector<Integer>& a, std::size_t da, const std::vector<Integer>& b,
                          std::size_t db) {
    if (da == 0 && db == 0) return 1;
    const std::size_t n = da + db;
    std::vector<std::vector<Integer>> syl(n, std::vector<Integer>(n));
    auto at = [](const std::vector<Integer>& p, std::size_t k) { return k < p.size() ? p[k] : Integer(0); };
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t k = 0; k <= da; ++k) syl[r][r + k] = at(a, da - k);
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t k = 0; k <= db; ++k) syl[db + r][r + k] = at(b, db - k);
    return bareiss_determinant(std::move(syl));
}

struct ScaledInteger {
    std::vector<Integer> coeffs;
    Integer scale;  // coeffs = scale * original
};

ScaledInteger clear_denominators(const Poly& p) {
    Integer l = 1;
    for (const auto& x : p.coeffs()) l = lcm(l, x.get_den());
    ScaledInteger out{{}, l};
    for (const auto& x : p.coeffs()) {
        Rational v = x * l;
        out.coeffs.push_back(v.get_num());
    }
    return out;
}

// Multiply a bivariate polynomial by a common denominator so every
// coefficient is an integer.
std::vector<std::vector<Integer>> integer_grid(const BiPoly& p, Integer& l) {
    l = 1;
    for (const auto& q : p.coeffs())
        for (const auto& x : q.coeffs()) l = lcm(l, x.get_den());
    std::vector<std::vector<Integer>> grid;
    for (const auto& q : p.coeffs()) {
        std::vector<Integer> row;
        for (const auto& x : q.coeffs()) {
            Rational v = x * l;
            row.push_back(v.get_num());
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

std::vector<Integer> eval_grid(const std::vector<std::vector<Integer>>& grid, const Integer& s) {
    std::vector<Integer> out;
    out.reserve(grid.size());
    for (const auto& row : grid) {
        Integer acc = 0;
        for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * s + *it;
        out.push_back(acc);
    }
    return out;
}

Poly newton_interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    Poly result = Poly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) result = result * Poly::linear(Rational(xs[i])) + Poly::constant(dd[i]);
    return result;
}

}  // namespace

Rational resultant(const Poly& a, long deg_a, const Poly& b, long deg_b) {
    if (deg_a < a.degree() || deg_b < b.degree()) throw std::invalid_argument("resultant: formal degree too small");
    if (deg_a < 0 || deg_b < 0) return 0;
    ScaledInteger x = clear_denominators(a);
    ScaledInteger y = clear_denominators(b);
    Integer r = integer_resultant(x.coeffs, static_cast<std::size_t>(deg_a), y.coeffs,
                                  static_cast<std::size_t>(deg_b));
    Integer sx, sy;
    mpz_pow_ui(sx.get_mpz_t(), x.scale.get_mpz_t(), static_cast<unsigned long>(deg_b));
    mpz_pow_ui(sy.get_mpz_t(), y.scale.get_mpz_t(), static_cast<unsigned long>(deg_a));
    return Rational(r) / Rational(sx * sy);
}

Poly resultant_u(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Integer la, lb;
    const auto ga = integer_grid(a, la);
    const auto gb = integer_grid(b, lb);
    const std::size_t da = static_cast<std::size_t>(a.degree_u());
    const std::size_t db = static_cast<std::size_t>(b.degree_u());
    const long bound = resultant_degree_bound(a, b);
    std::vector<Integer> xs, ys;
    for (long k = 0; k <= bound; ++k) {
        // Points alternate around 0 to keep evaluations small.
        Integer s = (k % 2 == 0) ? Integer(k / 2) : Integer(-(k + 1) / 2);
        xs.push_back(s);
        ys.push_back(integer_resultant(eval_grid(ga, s), da, eval_grid(gb, s), db));
    }
    // Res(la a, lb b) = la^db lb^da Res(a, b).
    Integer sa, sb;
    mpz_pow_ui(sa.get_mpz_t(), la.get_mpz_t(), db);
    mpz_pow_ui(sb.get_mpz_t(), lb.get_mpz_t(), da);
    return newton_interpolate(xs, ys) * (Rational(1) / Rational(sa * sb));
}

}  // namespace torembed
