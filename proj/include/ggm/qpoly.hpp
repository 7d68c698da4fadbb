#ifndef GGM_QPOLY_HPP
#define GGM_QPOLY_HPP

#include "ggm/rational.hpp"

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ggm {

// Univariate polynomial with exact rational coefficients, coeffs[k] = coefficient
// of x^k. The zero polynomial has an empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    QPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly constant(Rational c);
    // c * x^k
    static QPoly monomial(Rational c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading_coeff() const;

    QPoly operator+(const QPoly& rhs) const;
    QPoly operator-(const QPoly& rhs) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& rhs) const;
    QPoly operator*(const Rational& c) const;
    bool operator==(const QPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const QPoly& rhs) const { return !(*this == rhs); }

    QPoly derivative() const;
    QPoly monic() const;
    // p(-x)
    QPoly reflected() const;

    template <typename Scalar>
    Scalar eval(const Scalar& x) const {
        Scalar acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + Scalar(to_double(*it));
        return acc;
    }
    Rational eval_exact(const Rational& x) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Quotient and remainder of polynomial long division; divisor must be nonzero.
struct QPolyDivMod {
    QPoly quot;
    QPoly rem;
};
QPolyDivMod poly_divmod(const QPoly& p, const QPoly& q);

// Division known to be exact; throws std::logic_error on a nonzero remainder.
QPoly poly_divexact(const QPoly& p, const QPoly& q);

// Monic gcd; errors when both inputs are zero.
QPoly poly_gcd(const QPoly& p, const QPoly& q);

}  // namespace ggm

#endif
