// Reference implementations used only by the test suites. Everything here
// follows the defining formulas directly (shuffle sums over permutations,
// order closure, naive expansion) and stays independent of the library's
// computational paths.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pfaffian/polyvec.hpp"
#include "pfaffian/rootsystem.hpp"

namespace oracles {

using namespace pfaffian;

// all (m,n)-shuffles of {0..m+n-1}: permutations increasing on the first m and
// the last n positions; returned as (perm, sign)
inline std::vector<std::pair<std::vector<int>, int>> shuffles(int m, int n) {
    std::vector<std::pair<std::vector<int>, int>> out;
    if (m < 0 || n < 0) return out;
    std::vector<int> idx(m + n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> pick(m + n, 0);
    std::fill(pick.begin(), pick.begin() + m, 1);
    std::sort(pick.begin(), pick.end());
    // iterate over all ways to choose which positions land in the first block
    std::vector<int> choose(m);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == m) {
            std::vector<int> perm;
            perm.reserve(m + n);
            std::vector<bool> used(m + n, false);
            for (int c : choose) {
                perm.push_back(c);
                used[c] = true;
            }
            for (int i = 0; i < m + n; ++i)
                if (!used[i]) perm.push_back(i);
            int inv = 0;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b)
                    if (perm[a] > perm[b]) ++inv;
            out.emplace_back(std::move(perm), inv % 2 == 0 ? 1 : -1);
            return;
        }
        for (int i = start; i <= m + n - (m - depth); ++i) {
            choose[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

// (alpha ^ beta)(a_1..a_{m+n}) by the shuffle-sum definition
inline Poly wedge_value(const PolyVector& alpha, const PolyVector& beta,
                        const std::vector<Poly>& args) {
    const int m = alpha.degree(), n = beta.degree();
    Poly acc(alpha.prime(), alpha.nvars());
    for (const auto& [perm, sign] : shuffles(m, n)) {
        std::vector<Poly> first, second;
        for (int i = 0; i < m; ++i) first.push_back(args[perm[i]]);
        for (int i = m; i < m + n; ++i) second.push_back(args[perm[i]]);
        Poly v = evaluate_multi(alpha, first) * evaluate_multi(beta, second);
        acc = sign > 0 ? acc + v : acc - v;
    }
    return acc;
}

// [alpha, beta](a_1..a_{m+n-1}) by the shuffle-sum definition
inline Poly schouten_value(const PolyVector& alpha, const PolyVector& beta,
                           const std::vector<Poly>& args) {
    const int m = alpha.degree(), n = beta.degree();
    Poly acc(alpha.prime(), alpha.nvars());
    for (const auto& [perm, sign] : shuffles(n, m - 1)) {
        std::vector<Poly> inner, outer;
        for (int i = 0; i < n; ++i) inner.push_back(args[perm[i]]);
        std::vector<Poly> alpha_args{evaluate_multi(beta, inner)};
        for (int i = n; i < n + m - 1; ++i) alpha_args.push_back(args[perm[i]]);
        Poly v = evaluate_multi(alpha, alpha_args);
        acc = sign > 0 ? acc + v : acc - v;
    }
    const int swap = ((m - 1) * (n - 1)) % 2 == 0 ? 1 : -1;
    for (const auto& [perm, sign] : shuffles(m, n - 1)) {
        std::vector<Poly> inner;
        for (int i = 0; i < m; ++i) inner.push_back(args[perm[i]]);
        std::vector<Poly> beta_args{evaluate_multi(alpha, inner)};
        for (int i = m; i < m + n - 1; ++i) beta_args.push_back(args[perm[i]]);
        Poly v = evaluate_multi(beta, beta_args);
        int s = -swap * sign;
        acc = s > 0 ? acc + v : acc - v;
    }
    return acc;
}

// reconstructs the bracket as a polyvector by evaluating on coordinates
inline PolyVector schouten_oracle(const PolyVector& alpha, const PolyVector& beta,
                                  const PolyRing& ring) {
    const int m = alpha.degree(), n = beta.degree();
    const int k = std::max(m + n - 1, 0);
    PolyVector out(alpha.prime(), alpha.nvars(), k);
    if (m == 0 && n == 0) return out;
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            std::vector<Poly> args;
            for (int i : idx) args.push_back(ring.var(i));
            Poly v = schouten_value(alpha, beta, args);
            if (!v.is_zero()) out.add_term(idx, v);
            return;
        }
        for (int i = start; i <= alpha.nvars() - (k - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

// pi^[r] straight from the matching-sum definition
inline PolyVector divided_power_oracle(const PolyVector& pi, int r, const PolyRing& ring) {
    const int k = 2 * r;
    PolyVector out(pi.prime(), pi.nvars(), k);
    std::vector<int> idx(k);
    // S_[2r]: sigma(1)<sigma(3)<...<sigma(2r-1), sigma(2i-1)<sigma(2i)
    std::vector<int> perm(k);
    std::function<Poly(const std::vector<int>&)> value = [&](const std::vector<int>& I) {
        Poly acc(pi.prime(), pi.nvars());
        std::vector<int> pos(k);
        std::iota(pos.begin(), pos.end(), 0);
        std::sort(pos.begin(), pos.end());
        do {
            bool ok = true;
            for (int i = 0; i + 2 < k && ok; i += 2) ok = pos[i] < pos[i + 2];
            for (int i = 0; i < k && ok; i += 2) ok = pos[i] < pos[i + 1];
            if (!ok) continue;
            int inv = 0;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (pos[a] > pos[b]) ++inv;
            Poly prod = ring.one();
            for (int i = 0; i < k; i += 2) {
                std::vector<Poly> pair{ring.var(I[pos[i]]), ring.var(I[pos[i + 1]])};
                prod = prod * evaluate_multi(pi, pair);
            }
            acc = (inv % 2 == 0) ? acc + prod : acc - prod;
        } while (std::next_permutation(pos.begin(), pos.end()));
        return acc;
    };
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            Poly v = value(idx);
            if (!v.is_zero()) out.add_term(idx, v);
            return;
        }
        for (int i = start; i <= pi.nvars() - (k - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

// Bruhat order by closure: w covers u when w = u * (reflection) with length
// going up by one; the order is the transitive closure of the covers.
struct BruhatClosure {
    std::vector<WeylElement> elems;
    std::vector<int> len;
    std::vector<std::vector<bool>> leq;

    explicit BruhatClosure(const RootSystem& rs) {
        elems = all_elements(rs);
        const std::size_t N = elems.size();
        len.resize(N);
        for (std::size_t i = 0; i < N; ++i) len[i] = length(rs, elems[i]);

        // all reflections = w s_i w^{-1} over elements and simple indices
        std::set<WeylElement> refl;
        for (const auto& w : elems)
            for (int i = 0; i < rs.rank(); ++i) {
                WeylElement s = WeylElement::simple(rs, i);
                // conjugate: need w * s * w^{-1}; build w^{-1} via search
                for (const auto& winv : elems)
                    if ((w * winv).is_identity()) {
                        refl.insert(w * s * winv);
                        break;
                    }
            }

        leq.assign(N, std::vector<bool>(N, false));
        for (std::size_t i = 0; i < N; ++i) leq[i][i] = true;
        bool changed = true;
        std::vector<std::vector<bool>> cover(N, std::vector<bool>(N, false));
        for (std::size_t i = 0; i < N; ++i)
            for (const auto& t : refl) {
                WeylElement w = elems[i] * t;
                auto it = std::find(elems.begin(), elems.end(), w);
                std::size_t j = it - elems.begin();
                if (len[j] == len[i] + 1) cover[i][j] = true;
            }
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j)
                    if (cover[i][j] || (i != j && !leq[i][j] && [&] {
                            for (std::size_t k = 0; k < N; ++k)
                                if (leq[i][k] && cover[k][j]) return true;
                            return false;
                        }())) {
                        if (!leq[i][j]) {
                            leq[i][j] = true;
                            changed = true;
                        }
                    }
        }
    }

    std::size_t index_of(const WeylElement& w) const {
        return std::find(elems.begin(), elems.end(), w) - elems.begin();
    }
    bool less_eq(const WeylElement& u, const WeylElement& w) const {
        return leq[index_of(u)][index_of(w)];
    }
};

// random data helpers -------------------------------------------------------

inline Poly random_poly(const PolyRing& ring, int max_degree, int terms, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> expd(0, max_degree);
    std::uniform_int_distribution<std::int64_t> coeff(0, ring.prime() - 1);
    Poly f = ring.zero();
    for (int t = 0; t < terms; ++t) {
        ExpVec e(ring.nvars(), 0);
        int budget = expd(rng);
        for (int i = 0; i < ring.nvars() && budget > 0; ++i) {
            std::uniform_int_distribution<int> part(0, budget);
            e[i] = part(rng);
            budget -= e[i];
        }
        f.add_term(e, Fp(coeff(rng), ring.prime()));
    }
    return f;
}

inline PolyVector random_polyvector(const PolyRing& ring, int degree, int max_poly_degree,
                                    std::mt19937_64& rng) {
    PolyVector out(ring.prime(), ring.nvars(), degree);
    std::vector<int> idx(degree);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == degree) {
            out.add_term(idx, random_poly(ring, max_poly_degree, 2, rng));
            return;
        }
        for (int i = start; i <= ring.nvars() - (degree - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

inline PolyVector random_bivector(const PolyRing& ring, int max_poly_degree, std::mt19937_64& rng) {
    return random_polyvector(ring, 2, max_poly_degree, rng);
}

}  // namespace oracles
