#include "ggm/pn_family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ggm {

PnTable::PnTable(int max_index) : max_index_(max_index) {
    if (max_index < 0) throw std::invalid_argument("PnTable: max_index must be >= 0");
    polys_.reserve(static_cast<size_t>(max_index) + 2);
    polys_.push_back(QPoly::zero());           // index -1
    polys_.push_back(QPoly::constant(1));      // index 0
    if (max_index >= 1) polys_.push_back(QPoly::constant(1));
    QPoly x2 = QPoly::monomial(1, 2);
    for (int n = 2; n <= max_index; ++n)
        polys_.push_back(polys_[static_cast<size_t>(n)] - x2 * polys_[static_cast<size_t>(n - 1)]);
}

const QPoly& PnTable::poly(int n) const {
    if (n < -1) throw std::out_of_range("PnTable::poly: index < -1");
    if (n > max_index_) throw std::out_of_range("PnTable::poly: index exceeds max_index");
    return polys_[static_cast<size_t>(n + 1)];
}

void PnTable::corrupt(int n, QPoly p) {
    if (n < -1 || n > max_index_) throw std::out_of_range("PnTable::corrupt: bad index");
    polys_[static_cast<size_t>(n + 1)] = std::move(p);
}

QPoly pn_det_oracle(int n) {
    if (n < 0) throw std::invalid_argument("pn_det_oracle: n must be >= 0");
    if (n > 12) throw std::invalid_argument("pn_det_oracle: n > 12 exceeds cost guard");
    if (n == 0) return QPoly::constant(1);

    // Bareiss elimination over Q[x]; every division is exact.
    std::vector<std::vector<QPoly>> a(static_cast<size_t>(n),
                                      std::vector<QPoly>(static_cast<size_t>(n)));
    QPoly one = QPoly::constant(1);
    QPoly x = QPoly::monomial(1, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) a[i][j] = one;
            else if (std::abs(i - j) == 1) a[i][j] = x;
        }

    QPoly prev = one;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) throw std::logic_error("pn_det_oracle: zero pivot");
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = poly_divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

const std::vector<Identity>& all_identities() {
    static const std::vector<Identity> ids = {
        Identity::Split,       Identity::EvenSplit,    Identity::OddSplit,
        Identity::PowerGap,    Identity::OddPowerGap,  Identity::EvenPowerSum,
        Identity::EvenPowerDiff, Identity::Coprime,
    };
    return ids;
}

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::Split: return "split";
        case Identity::EvenSplit: return "even-split";
        case Identity::OddSplit: return "odd-split";
        case Identity::PowerGap: return "power-gap";
        case Identity::OddPowerGap: return "odd-power-gap";
        case Identity::EvenPowerSum: return "even-power-sum";
        case Identity::EvenPowerDiff: return "even-power-diff";
        case Identity::Coprime: return "coprime";
    }
    throw std::logic_error("identity_name: unreachable");
}

Identity identity_from_name(const std::string& name) {
    for (Identity id : all_identities())
        if (identity_name(id) == name) return id;
    throw std::invalid_argument("unknown identity name: " + name);
}

namespace {

IdentityReport fail(Identity id, int n, int m, const std::string& what) {
    std::ostringstream os;
    os << identity_name(id) << " fails at n=" << n;
    if (m >= 0) os << ", m=" << m;
    os << ": " << what;
    return {false, os.str()};
}

IdentityReport check_equal(Identity id, int n, int m, const QPoly& lhs, const QPoly& rhs) {
    if (lhs == rhs) return {true, ""};
    return fail(id, n, m, "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
}

}  // namespace

IdentityReport verify_identity(const PnTable& table, Identity id, int n, int m) {
    auto P = [&](int k) -> const QPoly& { return table.poly(k); };
    QPoly x = QPoly::monomial(1, 1);
    QPoly x2 = QPoly::monomial(1, 2);

    switch (id) {
        case Identity::Split: {
            if (m < 1 || n < 1) throw std::invalid_argument("split identity needs m, n >= 1");
            QPoly lhs = P(m + n);
            QPoly rhs = P(m) * P(n) - x2 * P(m - 1) * P(n - 1);
            return check_equal(id, n, m, lhs, rhs);
        }
        case Identity::EvenSplit: {
            if (n <= 1) throw std::invalid_argument("identity needs n > 1");
            QPoly rhs = (P(n) - x * P(n - 1)) * (P(n) + x * P(n - 1));
            return check_equal(id, n, -1, P(2 * n), rhs);
        }
        case Identity::OddSplit: {
            if (n <= 1) throw std::invalid_argument("identity needs n > 1");
            QPoly rhs = P(n - 1) * (P(n) - x2 * P(n - 2));
            return check_equal(id, n, -1, P(2 * n - 1), rhs);
        }
        case Identity::PowerGap: {
            if (n <= 1) throw std::invalid_argument("identity needs n > 1");
            QPoly lhs = QPoly::monomial(1, 2 * n - 2);
            QPoly rhs = P(n - 1) * P(n - 1) - P(n) * P(n - 2);
            return check_equal(id, n, -1, lhs, rhs);
        }
        case Identity::OddPowerGap: {
            if (n <= 1) throw std::invalid_argument("identity needs n > 1");
            QPoly lhs = P(2 * n - 1) - QPoly::monomial(1, 2 * n - 1);
            QPoly rhs = (P(n) - x * P(n - 1)) * (P(n - 1) + x * P(n - 2));
            return check_equal(id, n, -1, lhs, rhs);
        }
        case Identity::EvenPowerSum: {
            if (n <= 1) throw std::invalid_argument("identity needs n > 1");
            QPoly lhs = P(2 * n) + QPoly::monomial(1, 2 * n);
            QPoly rhs = P(n) * (P(n) - x2 * P(n - 2));
            return check_equal(id, n, -1, lhs, rhs);
        }
        case Identity::EvenPowerDiff: {
            if (n <= 1) throw std::invalid_argument("identity needs n > 1");
            QPoly lhs = P(2 * n) - QPoly::monomial(1, 2 * n);
            QPoly rhs = P(n - 1) * (P(n + 1) - x2 * P(n - 1));
            return check_equal(id, n, -1, lhs, rhs);
        }
        case Identity::Coprime: {
            if (n <= 1) throw std::invalid_argument("identity needs n > 1");
            const int idx[3] = {n, n - 1, n - 2};
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    QPoly g = poly_gcd(P(idx[a]), P(idx[b]));
                    if (g.degree() != 0)
                        return fail(id, n, -1,
                                    "gcd(P_" + std::to_string(idx[a]) + ", P_" +
                                        std::to_string(idx[b]) + ") = " + g.to_string());
                }
            return {true, ""};
        }
    }
    throw std::logic_error("verify_identity: unreachable");
}

IdentityReport verify_all_identities(const PnTable& table, int max_n) {
    if (max_n < 2) throw std::invalid_argument("verify_all_identities: max_n must be >= 2");
    for (int n = 2; n <= max_n; ++n) {
        for (Identity id : all_identities()) {
            if (id == Identity::Split) {
                for (int m = 1; m <= n; ++m) {
                    auto r = verify_identity(table, id, n, m);
                    if (!r.holds) return r;
                }
            } else {
                auto r = verify_identity(table, id, n);
                if (!r.holds) return r;
            }
        }
        // evenness of P_n, used by the root formula
        if (table.poly(n) != table.poly(n).reflected())
            return {false, "P_" + std::to_string(n) + " is not an even function"};
    }
    return {true, ""};
}

std::vector<double> cosine_roots(int n) {
    if (n < 2) throw std::invalid_argument("cosine_roots: n must be >= 2");
    std::vector<double> roots;
    roots.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        if (2 * k == n + 1) continue;  // cos = 0, no root there
        roots.push_back(1.0 / (2.0 * std::cos(k * std::numbers::pi / (n + 1))));
    }
    return roots;
}

}  // namespace ggm
