#ifndef GGM_RATIONAL_HPP
#define GGM_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <complex>
#include <string>

namespace ggm {

// Exact arbitrary-precision rational scalar. Always canonicalized
// (lowest terms, positive denominator) by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = DenseMatrix<Rational>;

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

}  // namespace ggm

namespace Eigen {

template <>
struct NumTraits<ggm::Rational> : GenericNumTraits<ggm::Rational> {
    typedef ggm::Rational Real;
    typedef ggm::Rational NonInteger;
    typedef ggm::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 100,
        MulCost = 100
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
