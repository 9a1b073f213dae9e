#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfaffian/matrix.hpp"
#include "pfaffian/polyvec.hpp"
#include "pfaffian/rootsystem.hpp"

namespace pfaffian {

/// Torus-pairing data of an iterated-Ore Poisson polynomial ring: one weight
/// vector and one torus element per variable, plus an optional delta part.
/// The bracket is {x_i, x_j} = P(j,i) x_i x_j + delta_i(x_j) for i < j, where
/// P(i,j) = lambda_i(h_j) is the cached pairing matrix.
struct CGLData {
    int n = 0;  // number of variables
    int m = 0;  // torus rank
    std::vector<std::vector<std::int64_t>> weights;   // n x m, lambda_i
    std::vector<std::vector<Rational>> h;             // n x m
    std::map<std::pair<int, int>, std::string> delta; // (i,j) 0-based, i<j -> polynomial text
    std::int64_t prime = 0;                           // optional default prime (0 = unset)
    std::vector<std::string> var_names;               // size n

    Rational pairing(int i, int j) const;  // lambda_i(h_j)
    PolyRing ring(std::int64_t p) const;
};

TorusWeightData torus_weights(const CGLData& d);

/// The pairing matrix P(i,j) = lambda_i(h_j) reduced mod p.
FpMatrix pairing_matrix_mod_p(const CGLData& d, std::int64_t p);

/// The skew matrix of log-canonical bracket coefficients; entry (i,j), i<j, is
/// the coefficient of x_i x_j in {x_i, x_j}.
FpMatrix skew_coefficient_matrix(const CGLData& d, std::int64_t p);

/// Full bivector including the delta part. Validates the Jacobi identity when
/// a delta part is present and that every diagonal eigenvalue is a unit.
PolyVector assemble_bivector(const CGLData& d, std::int64_t p);

/// The bivector with the delta part dropped.
PolyVector log_canonical_part(const CGLData& d, std::int64_t p);

/// Chart data of the Bott-Samelson variety of the word u at the subexpression
/// gamma. Bracket coefficients are +/- the pairings of the prefix-translated
/// simple roots; variable weights are minus those roots; the delta part is not
/// reproduced here and defaults to zero.
CGLData bott_samelson_chart(const RootSystem& rs, const WeylWord& u, const Subexpression& gamma);

/// Top multi-derivation built from the half-rank divided power of the bivector
/// and a completing set of torus directions.
struct PfaffianCandidate {
    PolyVector sigma;
    int half_rank = 0;
    std::vector<int> h_indices;               // chosen pairing-matrix columns, if any
    std::vector<std::vector<Fp>> field_coeffs;  // diagonal coefficients of each wedged field
};

/// Builds sigma = pi^[r] ^ d_{h_{i_1}} ^ ... ^ d_{h_{i_{n-2r}}} with the columns
/// chosen greedily smallest-first, falling back to exhaustive search. Requires
/// rank(pi) = rank(pi_0).
PfaffianCandidate pfaffian_certificate(const CGLData& d, std::int64_t p);

/// Exterior-algebra route of the full-rank test: computes pi_0^[r] ^ v_1 ^ ...
/// directly over scalars and tests nonvanishing. Independent of the matrix
/// elimination used by the certificate.
bool wedge_nonvanishing(const FpMatrix& skew, const std::vector<std::vector<Fp>>& columns);

/// Product-space bivector on (t_1..t_m, z_1..z_n): the given bivector on the
/// z-part plus the torus mixing term  sum_{j,i} (A0 w_i)_j  t_j z_i d_{t_j}^d_{z_i}.
PolyVector mixed_product_bivector(const PolyVector& pi_q, const FpMatrix& a0,
                                  const std::vector<std::vector<std::int64_t>>& z_weights);

/// Inverse Gram matrix of the pairing on the simple coroot basis, over Q.
RationalMatrix coroot_gram_inverse(const RootSystem& rs);

struct GuChart {
    int n = 0;  // big-cell dimension = length of w0
    int m = 0;  // torus rank
    std::int64_t prime = 0;
    CGLData cell;        // big-cell chart data on the z variables
    FpMatrix a0;         // reduced inverse coroot Gram matrix
    PolyVector pi;       // mixed bivector on (t_1..t_m, z_1..z_n)
    PfaffianCandidate candidate;  // on n+m variables
    PolyRing ring;       // t1..tm, z1..zn
};

/// Full pipeline on T x (big cell): mixed bivector, the z-side certificate
/// lifted to the product, and the m coordinate torus fields t_j d_{t_j}.
GuChart gu_chart_pfaffian(const RootSystem& rs, std::int64_t p);

CGLData cgl_from_json(const std::string& text);
std::string cgl_to_json(const CGLData& d);

}  // namespace pfaffian
