#ifndef GGM_MPOLY_HPP
#define GGM_MPOLY_HPP

#include <Eigen/Core>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace ggm {

// Sparse multivariate polynomial with complex coefficients, indexed by
// exponent vectors of fixed length.
class MPoly {
public:
    using Complex = std::complex<double>;
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Complex>;

    MPoly() = default;
    explicit MPoly(int num_vars) : num_vars_(num_vars) {}

    static MPoly constant(Complex c, int num_vars);
    static MPoly variable(int index, int num_vars);

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;

    MPoly operator+(const MPoly& rhs) const;
    MPoly operator-(const MPoly& rhs) const;
    MPoly operator*(const MPoly& rhs) const;
    MPoly operator*(Complex c) const;

    MPoly derivative(int var) const;
    Complex eval(const Eigen::VectorXcd& z) const;

private:
    void add_term(const Exponents& e, Complex c);
    int num_vars_ = 0;
    TermMap terms_;
};

// Square polynomial system F(z) = 0.
struct PolySystem {
    int num_vars = 0;
    std::vector<MPoly> polys;
    std::vector<std::string> var_names;

    std::vector<int> degrees() const;
    Eigen::VectorXcd eval(const Eigen::VectorXcd& z) const;
    Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& z) const;
};

// Determinant of a square grid of polynomials, by minor expansion with subset
// memoization.
MPoly mpoly_determinant(const std::vector<std::vector<MPoly>>& grid);

}  // namespace ggm

#endif
