#ifndef GGM_PN_FAMILY_HPP
#define GGM_PN_FAMILY_HPP

#include "ggm/qpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ggm {

// Determinants of the tridiagonal matrices with unit diagonal and x on the
// off-diagonals, cached for indices -1..max_index. They satisfy
//   P_n = P_{n-1} - x^2 P_{n-2},   P_0 = P_1 = 1,
// and P_{-1} := 0 is the unique value consistent with the recurrence at n = 1.
class PnTable {
public:
    explicit PnTable(int max_index);

    int max_index() const { return max_index_; }
    // n ranges over -1..max_index.
    const QPoly& poly(int n) const;

    // Test hook: replace the cached polynomial at index n.
    void corrupt(int n, QPoly p);

private:
    int max_index_;
    std::vector<QPoly> polys_;  // polys_[k] holds index k-1
};

// Determinant of the n x n unit-diagonal tridiagonal matrix over Q[x], computed
// by fraction-free (Bareiss) elimination. Deliberately a different algorithm
// from the recurrence in PnTable; n <= 12.
QPoly pn_det_oracle(int n);

enum class Identity {
    Split,           // P_{m+n} = P_m P_n - x^2 P_{m-1} P_{n-1}
    EvenSplit,       // P_{2n} = (P_n - x P_{n-1})(P_n + x P_{n-1})
    OddSplit,        // P_{2n-1} = P_{n-1} (P_n - x^2 P_{n-2})
    PowerGap,        // x^{2n-2} = P_{n-1}^2 - P_n P_{n-2}
    OddPowerGap,     // P_{2n-1} - x^{2n-1} = (P_n - x P_{n-1})(P_{n-1} + x P_{n-2})
    EvenPowerSum,    // P_{2n} + x^{2n} = P_n (P_n - x^2 P_{n-2})
    EvenPowerDiff,   // P_{2n} - x^{2n} = P_{n-1} (P_{n+1} - x^2 P_{n-1})
    Coprime,         // P_n, P_{n-1}, P_{n-2} pairwise coprime
};

const std::vector<Identity>& all_identities();
std::string identity_name(Identity id);
// Inverse of identity_name; throws std::invalid_argument on unknown names.
Identity identity_from_name(const std::string& name);

struct IdentityReport {
    bool holds = false;
    std::string detail;  // counterexample description when !holds
};

// Exact check of one identity at index n (n > 1); Split additionally takes m >= 1.
IdentityReport verify_identity(const PnTable& table, Identity id, int n, int m = -1);

// All identities for all 2 <= n <= max_n (Split over 1 <= m <= n).
IdentityReport verify_all_identities(const PnTable& table, int max_n);

// The closed-form root set { 1/(2 cos(k pi / (n+1))) : 1 <= k <= n, k != (n+1)/2 }.
// Cardinality is n for even n and n-1 for odd n.
std::vector<double> cosine_roots(int n);

}  // namespace ggm

#endif
