#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pfaffian/poly.hpp"
#include "pfaffian/polyvec.hpp"

namespace pfaffian {

/// Term guard on the f^(p-1) expansion; past it only the top-coefficient
/// shortcut runs and reports flag themselves as shortcut-derived.
inline constexpr std::size_t kExpansionTermGuard = 10'000'000;

/// Monomial trace map dual to Frobenius: x^b maps to x^((b-(p-1)*1)/p) when
/// every b_i is congruent to p-1 mod p, and to zero otherwise.
Poly frobenius_trace(const Poly& g);

/// phi(g) = trace(f^(p-1) * g), the near-splitting attached to f.
Poly near_splitting_apply(const Poly& f, const Poly& g);

struct SplittingReport {
    bool split = false;
    std::int64_t prime = 0;
    std::int64_t criterion_value = 0;   // coefficient of (x_1...x_n)^(p-1) in f^(p-1)
    std::int64_t top_coefficient = 0;   // coefficient of x_1...x_n in f
    std::int64_t normalizer = 0;        // scalar making phi(1) = 1; 0 when not split
    bool shortcut_only = false;         // criterion derived as top_coefficient^(p-1)
    std::vector<std::vector<int>> compatible_ideals;  // 1-based variable subsets
};

/// Splitting verdict: split iff trace(f^(p-1)) is a nonzero constant. When the
/// expansion guard trips, falls back to the top-coefficient shortcut, which is
/// exact for candidates whose support has the unit-box shape below.
SplittingReport is_splitting(const Poly& f);

/// All nonempty S with phi(I_S) inside I_S for I_S = (x_i : i in S), decided
/// from the residue pattern of the support of f^(p-1). Throws NotASplitting.
std::vector<std::vector<int>> compatibly_split_coordinate_ideals(const Poly& f);

/// True when every monomial x^t of f has t = (1,...,1) or t_s = 0 for some s
/// with t_j <= 1 for all j > s. Candidates built from chart data always do.
bool has_unit_support_shape(const Poly& f);

/// pi(x_i, -) lands in the coordinate ideal of S for every i in S.
bool coordinate_ideal_is_poisson(const PolyVector& pi, const std::vector<int>& S);

/// Chart-level check that every reported compatibly split coordinate ideal is
/// a weight-spanned Poisson ideal. S entries are 1-based.
bool verify_split_ideals(const PolyVector& pi, const TorusWeightData& wd,
                         const std::vector<std::vector<int>>& splits);

std::string splitting_report_json(const SplittingReport& r);

}  // namespace pfaffian
