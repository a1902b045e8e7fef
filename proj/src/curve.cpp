#include "torembed/curve.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "torembed/errors.hpp"

namespace torembed {

std::string CurvePoint::str() const { return is_infinity() ? "inf" : value_->get_str(); }

CurvePoint CurvePoint::parse(const std::string& s) {
    if (s == "inf") return infinity();
    Rational q;
    if (q.set_str(s, 10) != 0) throw FormatError("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw FormatError("zero denominator: '" + s + "'");
    q.canonicalize();
    return {q};
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return a.value() < b.value();
}

// ---------------------------------------------------------------- CDivisor

CDivisor::CDivisor(const std::vector<Term>& terms) {
    for (const auto& [p, m] : terms) add(p, m);
}

void CDivisor::add(const CurvePoint& p, long multiplicity) {
    if (multiplicity == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, const CurvePoint& q) { return t.first < q; });
    if (it != terms_.end() && it->first == p) {
        it->second += multiplicity;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {p, multiplicity});
    }
}

long CDivisor::degree() const {
    long d = 0;
    for (const auto& t : terms_) d += t.second;
    return d;
}

bool CDivisor::is_reduced() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
}

bool CDivisor::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second > 0; });
}

long CDivisor::multiplicity(const CurvePoint& p) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, const CurvePoint& q) { return t.first < q; });
    return (it != terms_.end() && it->first == p) ? it->second : 0;
}

std::vector<CurvePoint> CDivisor::support() const {
    std::vector<CurvePoint> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.first);
    return out;
}

CDivisor& CDivisor::operator+=(const CDivisor& o) {
    for (const auto& [p, m] : o.terms_) add(p, m);
    return *this;
}

CDivisor operator*(long k, const CDivisor& d) {
    CDivisor out;
    for (const auto& [p, m] : d.terms_) out.add(p, k * m);
    return out;
}

std::string CDivisor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << terms_[i].second << "*(" << terms_[i].first.str() << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Rational c, const std::vector<Factor>& factors) : constant_(std::move(c)) {
    if (constant_ == 0) throw std::invalid_argument("RationalFunction: zero constant");
    for (const auto& [a, e] : factors) {
        if (e == 0) continue;
        auto it = std::lower_bound(factors_.begin(), factors_.end(), a,
                                   [](const Factor& f, const Rational& r) { return f.first < r; });
        if (it != factors_.end() && it->first == a) {
            it->second += e;
            if (it->second == 0) factors_.erase(it);
        } else {
            factors_.insert(it, {a, e});
        }
    }
}

CDivisor RationalFunction::divisor() const {
    CDivisor d;
    long total = 0;
    for (const auto& [a, e] : factors_) {
        d.add(CurvePoint(a), e);
        total += e;
    }
    d.add(CurvePoint::infinity(), -total);
    return d;
}

long RationalFunction::order_at(const CurvePoint& p) const { return divisor().multiplicity(p); }

Poly RationalFunction::numerator() const {
    Poly p = Poly::constant(constant_);
    for (const auto& [a, e] : factors_)
        if (e > 0) p *= Poly::linear(a).pow(static_cast<unsigned>(e));
    return p;
}

Poly RationalFunction::denominator() const {
    Poly q(1);
    for (const auto& [a, e] : factors_)
        if (e < 0) q *= Poly::linear(a).pow(static_cast<unsigned>(-e));
    return q;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    std::vector<Factor> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    *this = RationalFunction(constant_ * o.constant_, all);
    return *this;
}

RationalFunction RationalFunction::inverse() const { return pow(-1); }

RationalFunction RationalFunction::pow(long e) const {
    Rational c = 1;
    const Rational base = e >= 0 ? constant_ : Rational(1 / constant_);
    for (long k = 0; k < (e >= 0 ? e : -e); ++k) c *= base;
    std::vector<Factor> f;
    for (const auto& [a, x] : factors_) f.emplace_back(a, x * e);
    return {c, f};
}

RationalFunction RationalFunction::scaled(const Rational& k) const { return {constant_ * k, factors_}; }

std::string RationalFunction::str() const {
    std::ostringstream os;
    os << constant_.get_str();
    for (const auto& [a, e] : factors_) os << " * (t - " << a.get_str() << ")^" << e;
    return os.str();
}

PointValue evaluate_with_derivative(const RationalFunction& f, const CurvePoint& p) {
    const Poly num = f.numerator();
    const Poly den = f.denominator();
    if (!p.is_infinity()) {
        const Rational& t = p.value();
        const Rational q = den(t);
        if (q == 0) return {true, 0, 0};
        const Rational value = num(t) / q;
        const Rational deriv = (num.derivative()(t) * q - num(t) * den.derivative()(t)) / (q * q);
        return {false, value, deriv};
    }
    // f(1/s) = s^(dq - dp) * rev(num)(s) / rev(den)(s)
    const long dp = num.degree();
    const long dq = den.degree();
    if (dp > dq) return {true, 0, 0};
    const Poly top = num.reversed(static_cast<std::size_t>(dp)) * Poly::x().pow(static_cast<unsigned>(dq - dp));
    const Poly bottom = den.reversed(static_cast<std::size_t>(dq));
    const Rational q = bottom(0);
    const Rational value = top(0) / q;
    const Rational deriv = (top.derivative()(0) * q - top(0) * bottom.derivative()(0)) / (q * q);
    return {false, value, deriv};
}

CDivisor sample_divisor(long degree, std::uint64_t seed, const std::vector<CurvePoint>& avoid) {
    if (degree < 0) throw std::invalid_argument("sample_divisor: negative degree");
    std::mt19937_64 gen(seed);
    CDivisor out;
    long attempts = 0;
    while (out.degree() < degree) {
        // Numerator range widens slowly so the pool never runs dry.
        const long range = 40 + attempts / 8;
        const auto raw_num = static_cast<long>(gen() % static_cast<std::uint64_t>(2 * range + 1)) - range;
        const auto raw_den = static_cast<long>(gen() % 5) + 1;
        ++attempts;
        const CurvePoint p{Rational(Integer(raw_num), Integer(raw_den))};
        if (out.contains(p)) continue;
        if (std::find(avoid.begin(), avoid.end(), p) != avoid.end()) continue;
        out.add(p, 1);
    }
    return out;
}

RationalFunction principal_function(const CDivisor& d) {
    if (d.degree() != 0) throw NotDegreeZero("divisor has degree " + std::to_string(d.degree()));
    std::vector<RationalFunction::Factor> factors;
    for (const auto& [p, m] : d.terms())
        if (!p.is_infinity()) factors.emplace_back(p.value(), m);
    return {Rational(1), factors};
}

}  // namespace torembed
