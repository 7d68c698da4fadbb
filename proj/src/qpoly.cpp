#include "ggm/qpoly.hpp"

#include <sstream>

namespace ggm {

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::constant(Rational c) {
    QPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

QPoly QPoly::monomial(Rational c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

Rational QPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rational QPoly::leading_coeff() const {
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.back();
}

QPoly QPoly::operator+(const QPoly& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& rhs) const { return *this + (-rhs); }

QPoly QPoly::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return QPoly(std::move(out));
}

QPoly QPoly::operator*(const QPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return QPoly();
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return QPoly(std::move(out));
}

QPoly QPoly::operator*(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& a : out) a *= c;
    return QPoly(std::move(out));
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return QPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(out));
}

QPoly QPoly::monic() const {
    if (is_zero()) return QPoly();
    Rational inv = Rational(1) / leading_coeff();
    return *this * inv;
}

QPoly QPoly::reflected() const {
    std::vector<Rational> out = coeffs_;
    for (size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return QPoly(std::move(out));
}

Rational QPoly::eval_exact(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

QPolyDivMod poly_divmod(const QPoly& p, const QPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    std::vector<Rational> rem = p.coeffs();
    int dq = q.degree();
    Rational lead = q.leading_coeff();
    std::vector<Rational> quot;
    if (p.degree() >= dq) quot.assign(static_cast<size_t>(p.degree() - dq) + 1, Rational(0));
    for (int k = p.degree() - dq; k >= 0; --k) {
        Rational c = rem[static_cast<size_t>(k + dq)] / lead;
        if (c == 0) continue;
        quot[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= dq; ++i) rem[static_cast<size_t>(k + i)] -= c * q.coeff(i);
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly poly_divexact(const QPoly& p, const QPoly& q) {
    auto dm = poly_divmod(p, q);
    if (!dm.rem.is_zero()) throw std::logic_error("poly_divexact: division is not exact");
    return dm.quot;
}

QPoly poly_gcd(const QPoly& p, const QPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
    QPoly a = p, b = q;
    while (!b.is_zero()) {
        QPoly r = poly_divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace ggm
