#include "ggm/mpoly.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ggm {

void MPoly::add_term(const Exponents& e, Complex c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != Complex(0.0)) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == Complex(0.0)) terms_.erase(it);
}

MPoly MPoly::constant(Complex c, int num_vars) {
    MPoly p(num_vars);
    p.add_term(Exponents(static_cast<size_t>(num_vars), 0), c);
    return p;
}

MPoly MPoly::variable(int index, int num_vars) {
    if (index < 0 || index >= num_vars) throw std::out_of_range("MPoly::variable index");
    MPoly p(num_vars);
    Exponents e(static_cast<size_t>(num_vars), 0);
    e[static_cast<size_t>(index)] = 1;
    p.add_term(e, Complex(1.0));
    return p;
}

int MPoly::total_degree() const {
    int deg = 0;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

MPoly MPoly::operator+(const MPoly& rhs) const {
    MPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& rhs) const {
    MPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

MPoly MPoly::operator*(const MPoly& rhs) const {
    MPoly out(num_vars_);
    Exponents sum(static_cast<size_t>(num_vars_), 0);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            for (size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
            out.add_term(sum, ca * cb);
        }
    return out;
}

MPoly MPoly::operator*(Complex c) const {
    MPoly out(num_vars_);
    if (c == Complex(0.0)) return out;
    out.terms_ = terms_;
    for (auto& [e, coeff] : out.terms_) coeff *= c;
    return out;
}

MPoly MPoly::derivative(int var) const {
    MPoly out(num_vars_);
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(var)];
        if (k == 0) continue;
        Exponents d = e;
        --d[static_cast<size_t>(var)];
        out.add_term(d, c * static_cast<double>(k));
    }
    return out;
}

MPoly::Complex MPoly::eval(const Eigen::VectorXcd& z) const {
    if (z.size() != num_vars_) throw std::invalid_argument("MPoly::eval: size mismatch");
    Complex acc = 0.0;
    for (const auto& [e, c] : terms_) {
        Complex term = c;
        for (int v = 0; v < num_vars_; ++v) {
            int k = e[static_cast<size_t>(v)];
            for (int p = 0; p < k; ++p) term *= z(v);
        }
        acc += term;
    }
    return acc;
}

std::vector<int> PolySystem::degrees() const {
    std::vector<int> d;
    d.reserve(polys.size());
    for (const auto& p : polys) d.push_back(std::max(1, p.total_degree()));
    return d;
}

Eigen::VectorXcd PolySystem::eval(const Eigen::VectorXcd& z) const {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(polys.size()));
    for (size_t i = 0; i < polys.size(); ++i) out(static_cast<Eigen::Index>(i)) = polys[i].eval(z);
    return out;
}

Eigen::MatrixXcd PolySystem::jacobian(const Eigen::VectorXcd& z) const {
    Eigen::MatrixXcd out(static_cast<Eigen::Index>(polys.size()), num_vars);
    for (size_t i = 0; i < polys.size(); ++i)
        for (int v = 0; v < num_vars; ++v)
            out(static_cast<Eigen::Index>(i), v) = polys[i].derivative(v).eval(z);
    return out;
}

MPoly mpoly_determinant(const std::vector<std::vector<MPoly>>& grid) {
    size_t n = grid.size();
    if (n == 0) throw std::invalid_argument("mpoly_determinant: empty grid");
    int num_vars = grid[0][0].num_vars();

    // det over (rows processed in order, column subset) with memoization on the
    // column bitmask.
    std::unordered_map<unsigned, MPoly> memo;
    std::function<MPoly(size_t, unsigned)> rec = [&](size_t row, unsigned colmask) -> MPoly {
        if (row == n) return MPoly::constant(1.0, num_vars);
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        MPoly acc(num_vars);
        int parity = 0;
        for (size_t j = 0; j < n; ++j) {
            if (colmask & (1u << j)) continue;
            const MPoly& entry = grid[row][j];
            if (!entry.is_zero()) {
                MPoly sub = rec(row + 1, colmask | (1u << j));
                MPoly term = entry * sub;
                acc = (parity % 2 == 0) ? acc + term : acc - term;
            }
            ++parity;
        }
        memo.emplace(colmask, acc);
        return acc;
    };
    return rec(0, 0u);
}

}  // namespace ggm
