#include "pfaffian/frobenius.hpp"

#include <nlohmann/json.hpp>

#include "pfaffian/errors.hpp"

namespace pfaffian {

Poly frobenius_trace(const Poly& g) {
    const std::int64_t p = g.prime();
    const int n = g.nvars();
    Poly out(p, n);
    ExpVec reduced(n);
    for (const auto& [e, c] : g.terms()) {
        bool hit = true;
        for (int i = 0; i < n; ++i) {
            if (e[i] % p != p - 1) {
                hit = false;
                break;
            }
            reduced[i] = (e[i] - static_cast<int>(p - 1)) / static_cast<int>(p);
        }
        if (hit) out.add_term(reduced, c);
    }
    return out;
}

Poly near_splitting_apply(const Poly& f, const Poly& g) {
    if (f.prime() != g.prime()) throw ModulusMismatch();
    if (f.nvars() != g.nvars()) throw ArityMismatch();
    const int e = static_cast<int>(f.prime()) - 1;
    return frobenius_trace(f.power_guarded(e, kExpansionTermGuard) * g);
}

bool has_unit_support_shape(const Poly& f) {
    const int n = f.nvars();
    for (const auto& [e, c] : f.terms()) {
        bool all_ones = true;
        for (int i = 0; i < n; ++i)
            if (e[i] != 1) {
                all_ones = false;
                break;
            }
        if (all_ones) continue;
        bool ok = false;
        for (int s = 0; s < n && !ok; ++s) {
            if (e[s] != 0) continue;
            ok = true;
            for (int j = s + 1; j < n; ++j)
                if (e[j] > 1) {
                    ok = false;
                    break;
                }
        }
        if (!ok) return false;
    }
    return true;
}

namespace {

// S is compatible iff every support monomial c of f^(p-1) has either some
// c_j >= p with j in S, or c_j = p-1 for every j in S. Otherwise the monomial
// x^b with b_j = p-1-c_j on S (which lies in I_S since some b_i >= 1) traces to
// an exponent vector vanishing on all of S.
bool subset_compatible(const Poly& fp1, const std::vector<int>& S) {
    const std::int64_t p = fp1.prime();
    for (const auto& [c, coeff] : fp1.terms()) {
        bool escapes = false;   // some c_j >= p on S
        bool all_top = true;    // c_j == p-1 on all of S
        for (int j : S) {
            if (c[j] >= p) {
                escapes = true;
                break;
            }
            if (c[j] != p - 1) all_top = false;
        }
        if (!escapes && !all_top) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_compatible(const Poly& fp1) {
    const int n = fp1.nvars();
    std::vector<std::vector<int>> out;
    if (n > 20) return out;  // subset enumeration guard
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<int> S;
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i)) S.push_back(i);
        if (subset_compatible(fp1, S)) {
            for (int& i : S) ++i;  // report 1-based
            out.push_back(std::move(S));
        }
    }
    return out;
}

}  // namespace

SplittingReport is_splitting(const Poly& f) {
    const std::int64_t p = f.prime();
    const int n = f.nvars();
    SplittingReport rep;
    rep.prime = p;
    const Fp top = f.coefficient_of(ExpVec(n, 1));
    rep.top_coefficient = top.value();

    bool expanded = false;
    Poly fp1(p, n);
    try {
        fp1 = f.power_guarded(static_cast<int>(p) - 1, kExpansionTermGuard);
        expanded = true;
    } catch (const ExpansionTooLarge&) {
        if (!has_unit_support_shape(f)) throw;
    }

    if (expanded) {
        Poly phi1 = frobenius_trace(fp1);
        Fp criterion = fp1.coefficient_of(ExpVec(n, p - 1));
        rep.criterion_value = criterion.value();
        rep.split = !phi1.is_zero() && phi1.is_constant();
        if (has_unit_support_shape(f) && criterion != top.pow(p - 1))
            throw Error("shortcut value disagrees with the expanded criterion");
        if (rep.split) {
            rep.normalizer = criterion.inv().value();
            rep.compatible_ideals = enumerate_compatible(fp1);
        }
    } else {
        rep.shortcut_only = true;
        Fp criterion = top.pow(p - 1);
        rep.criterion_value = criterion.value();
        rep.split = !criterion.is_zero();
        if (rep.split) rep.normalizer = criterion.inv().value();
    }
    return rep;
}

std::vector<std::vector<int>> compatibly_split_coordinate_ideals(const Poly& f) {
    SplittingReport rep = is_splitting(f);
    if (!rep.split) throw NotASplitting();
    if (!rep.shortcut_only) return rep.compatible_ideals;
    Poly fp1 = f.power_guarded(static_cast<int>(f.prime()) - 1, 0);
    return enumerate_compatible(fp1);
}

bool coordinate_ideal_is_poisson(const PolyVector& pi, const std::vector<int>& S) {
    if (pi.degree() != 2) throw DimensionMismatch("need a bivector");
    std::vector<bool> in_s(pi.nvars(), false);
    for (int i : S) {
        if (i < 0 || i >= pi.nvars()) throw IndexOutOfRange();
        in_s[i] = true;
    }
    // every bracket {x_i, x_j} with i in S must lie in (x_k : k in S)
    for (const auto& [idx, f] : pi.terms()) {
        if (!in_s[idx[0]] && !in_s[idx[1]]) continue;
        for (const auto& [e, c] : f.terms()) {
            bool inside = false;
            for (int k = 0; k < pi.nvars() && !inside; ++k) inside = in_s[k] && e[k] > 0;
            if (!inside) return false;
        }
    }
    return true;
}

bool verify_split_ideals(const PolyVector& pi, const TorusWeightData& wd,
                         const std::vector<std::vector<int>>& splits) {
    if (static_cast<int>(wd.weights.size()) != pi.nvars())
        throw DimensionMismatch("one weight per variable");
    for (const auto& S1 : splits) {
        std::vector<int> S;
        S.reserve(S1.size());
        for (int i : S1) S.push_back(i - 1);
        if (!coordinate_ideal_is_poisson(pi, S)) return false;
        // coordinate ideals are spanned by the weight vectors x_i by definition;
        // the weight data just has to cover them
        for (int i : S)
            if (i < 0 || i >= static_cast<int>(wd.weights.size())) throw IndexOutOfRange();
    }
    return true;
}

std::string splitting_report_json(const SplittingReport& r) {
    nlohmann::ordered_json j;
    j["verdict"] = r.split ? "split" : "not-split";
    j["prime"] = r.prime;
    j["criterion_value"] = r.criterion_value;
    j["top_coefficient"] = r.top_coefficient;
    j["normalizer"] = r.normalizer;
    j["shortcut_only"] = r.shortcut_only;
    j["compatible_ideals"] = r.compatible_ideals;
    return j.dump(2);
}

}  // namespace pfaffian
