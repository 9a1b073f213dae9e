#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pfaffian/matrix.hpp"
#include "pfaffian/poly.hpp"

namespace pfaffian {

/// Strictly increasing list of 0-based variable indices; the basis wedge
/// d_{i_1} ^ ... ^ d_{i_k} of a degree-k multi-derivation slot.
using IndexSet = std::vector<int>;

/// Homogeneous degree-k multi-derivation on F_p[x_1..x_n], stored as a finitely
/// supported map from index sets to polynomial coefficients. Degree 0 is a
/// plain polynomial (single empty index set).
class PolyVector {
public:
    PolyVector(std::int64_t p, int nvars, int degree) : p_(p), nvars_(nvars), degree_(degree) {}

    std::int64_t prime() const { return p_; }
    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IndexSet, Poly>& terms() const { return terms_; }

    void add_term(const IndexSet& idx, const Poly& f);
    Poly coefficient(const IndexSet& idx) const;

    friend PolyVector operator+(const PolyVector& a, const PolyVector& b);
    friend PolyVector operator-(const PolyVector& a, const PolyVector& b);
    PolyVector operator-() const;
    PolyVector scalar_mul(const Fp& c) const;
    bool operator==(const PolyVector& b) const {
        return p_ == b.p_ && nvars_ == b.nvars_ && degree_ == b.degree_ && terms_ == b.terms_;
    }
    bool operator!=(const PolyVector& b) const { return !(*this == b); }

private:
    void check_compat(const PolyVector& b) const;

    std::int64_t p_;
    int nvars_;
    int degree_;
    std::map<IndexSet, Poly> terms_;
};

/// Sign of merging two disjoint increasing index sets, or 0 if they intersect.
int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& merged);

PolyVector wedge(const PolyVector& a, const PolyVector& b);

/// Schouten bracket in coordinates. Normalized so that [X, f] = X(f) for a
/// vector field X and a function f; the shuffle-sum definition is kept as a
/// test oracle.
PolyVector schouten(const PolyVector& a, const PolyVector& b);

/// Applies a degree-k multi-derivation to k polynomial arguments.
Poly evaluate_multi(const PolyVector& a, const std::vector<Poly>& args);

/// Divided power pi^[r] of a bivector. The coefficient on a 2r-index set is the
/// sub-Pfaffian of the skew coefficient matrix, which stays exact for every r
/// regardless of the characteristic.
PolyVector divided_power(const PolyVector& pi, int r);

/// 2 * max{r : pi^[r] != 0}; 0 for the zero bivector.
int rank(const PolyVector& pi);

/// Rank of the skew matrix (pi(x_i, x_j)) evaluated at a point.
int rank_at_point(const PolyVector& pi, const std::vector<Fp>& point);

/// Hamiltonian derivation X_a = pi(a, -).
PolyVector hamiltonian(const Poly& a, const PolyVector& pi);

/// Torus weights of the chart variables, one integer vector per variable.
struct TorusWeightData {
    int m = 0;
    std::vector<std::vector<std::int64_t>> weights;
};

/// Diagonal derivation sum_i lambda_i(h) x_i d_i generated by h.
PolyVector generating_field(const std::vector<std::int64_t>& h, const TorusWeightData& wd,
                            std::int64_t p);
PolyVector generating_field(const std::vector<Fp>& coeffs, std::int64_t p);

/// If every term of pi is c_ij * x_i x_j * d_i^d_j, returns the full skew
/// matrix (c_ij); otherwise nullopt.
std::optional<FpMatrix> log_canonical_matrix(const PolyVector& pi);

/// Weight of f under the torus data if f is weight-homogeneous.
std::optional<std::vector<std::int64_t>> weight_of(const Poly& f, const TorusWeightData& wd);

std::string str(const PolyVector& a, const PolyRing& ring);

Poly det(std::vector<std::vector<Poly>> m, const Poly& one);

}  // namespace pfaffian
