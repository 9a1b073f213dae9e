#include "pfaffian/polyvec.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "pfaffian/errors.hpp"

namespace pfaffian {

void PolyVector::check_compat(const PolyVector& b) const {
    if (p_ != b.p_) throw ModulusMismatch();
    if (nvars_ != b.nvars_) throw ArityMismatch();
}

void PolyVector::add_term(const IndexSet& idx, const Poly& f) {
    if (static_cast<int>(idx.size()) != degree_) throw DimensionMismatch("index set size != degree");
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] >= idx[i + 1]) throw DimensionMismatch("index set not strictly increasing");
    if (!idx.empty() && (idx.front() < 0 || idx.back() >= nvars_)) throw IndexOutOfRange();
    if (f.prime() != p_) throw ModulusMismatch();
    if (f.nvars() != nvars_) throw ArityMismatch();
    if (f.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, f);
    } else {
        it->second = it->second + f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly PolyVector::coefficient(const IndexSet& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Poly(p_, nvars_) : it->second;
}

PolyVector operator+(const PolyVector& a, const PolyVector& b) {
    a.check_compat(b);
    if (a.degree_ != b.degree_) throw DimensionMismatch("degree mismatch in sum");
    PolyVector r = a;
    for (const auto& [idx, f] : b.terms_) r.add_term(idx, f);
    return r;
}

PolyVector operator-(const PolyVector& a, const PolyVector& b) { return a + (-b); }

PolyVector PolyVector::operator-() const {
    PolyVector r(p_, nvars_, degree_);
    for (const auto& [idx, f] : terms_) r.terms_.emplace(idx, -f);
    return r;
}

PolyVector PolyVector::scalar_mul(const Fp& c) const {
    PolyVector r(p_, nvars_, degree_);
    for (const auto& [idx, f] : terms_) {
        Poly g = f.scalar_mul(c);
        if (!g.is_zero()) r.terms_.emplace(idx, g);
    }
    return r;
}

int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<int>(a.size() - i);
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

PolyVector wedge(const PolyVector& a, const PolyVector& b) {
    if (a.prime() != b.prime()) throw ModulusMismatch();
    if (a.nvars() != b.nvars()) throw ArityMismatch();
    PolyVector r(a.prime(), a.nvars(), a.degree() + b.degree());
    IndexSet merged;
    for (const auto& [ia, fa] : a.terms()) {
        for (const auto& [ib, fb] : b.terms()) {
            int sign = merge_sign(ia, ib, merged);
            if (sign == 0) continue;
            Poly f = fa * fb;
            if (sign < 0) f = -f;
            r.add_term(merged, f);
        }
    }
    return r;
}

namespace {

// Left derivative with respect to the odd coordinate i: removes i from the
// index set and records the sign of moving it to the front.
bool odd_derivative(const IndexSet& idx, int i, IndexSet& out, int& sign) {
    auto it = std::find(idx.begin(), idx.end(), i);
    if (it == idx.end()) return false;
    int pos = static_cast<int>(it - idx.begin());
    out.clear();
    out.reserve(idx.size() - 1);
    out.insert(out.end(), idx.begin(), it);
    out.insert(out.end(), it + 1, idx.end());
    sign = (pos % 2 == 0) ? 1 : -1;
    return true;
}

// One half of the bracket: sum_i  dL(a)/dxi_i ^ d(b)/dx_i, accumulated into r
// with the given overall sign.
void schouten_half(const PolyVector& a, const PolyVector& b, int overall, PolyVector& r) {
    IndexSet reduced, merged;
    int sign;
    for (const auto& [ia, fa] : a.terms()) {
        for (int i : ia) {
            if (!odd_derivative(ia, i, reduced, sign)) continue;
            for (const auto& [ib, fb] : b.terms()) {
                Poly db = fb.partial_derivative(i);
                if (db.is_zero()) continue;
                int msign = merge_sign(reduced, ib, merged);
                if (msign == 0) continue;
                Poly f = fa * db;
                int total = sign * msign * overall;
                if (total < 0) f = -f;
                r.add_term(merged, f);
            }
        }
    }
}

}  // namespace

PolyVector schouten(const PolyVector& a, const PolyVector& b) {
    if (a.prime() != b.prime()) throw ModulusMismatch();
    if (a.nvars() != b.nvars()) throw ArityMismatch();
    const int m = a.degree(), n = b.degree();
    PolyVector r(a.prime(), a.nvars(), std::max(m + n - 1, 0));
    if (m == 0 && n == 0) return r;  // bracket of two functions
    schouten_half(a, b, 1, r);
    int swap_sign = ((m - 1) * (n - 1)) % 2 == 0 ? -1 : 1;
    schouten_half(b, a, swap_sign, r);
    return r;
}

Poly det(std::vector<std::vector<Poly>> m, const Poly& one) {
    const std::size_t k = m.size();
    if (k == 0) return one;
    // Laplace expansion along the first row; fine at the sizes we meet.
    if (k == 1) return m[0][0];
    Poly acc = one - one;
    for (std::size_t j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        minor.reserve(k - 1);
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Poly> row;
            row.reserve(k - 1);
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly contrib = m[0][j] * det(std::move(minor), one);
        acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

Poly evaluate_multi(const PolyVector& a, const std::vector<Poly>& args) {
    if (static_cast<int>(args.size()) != a.degree())
        throw ArityMismatch("argument count != degree");
    Poly one(a.prime(), a.nvars());
    one.add_term(ExpVec(a.nvars(), 0), Fp(1, a.prime()));
    Poly acc = one - one;
    for (const auto& arg : args) {
        if (arg.prime() != a.prime()) throw ModulusMismatch();
        if (arg.nvars() != a.nvars()) throw ArityMismatch();
    }
    for (const auto& [idx, f] : a.terms()) {
        const std::size_t k = idx.size();
        std::vector<std::vector<Poly>> jac;
        jac.reserve(k);
        for (std::size_t u = 0; u < k; ++u) {
            std::vector<Poly> row;
            row.reserve(k);
            for (std::size_t v = 0; v < k; ++v) row.push_back(args[v].partial_derivative(idx[u]));
            jac.push_back(std::move(row));
        }
        acc = acc + f * det(std::move(jac), one);
    }
    return acc;
}

namespace {

// Pfaffian of the skew matrix of bracket polynomials restricted to idx.
Poly sub_pfaffian(const PolyVector& pi, const IndexSet& idx, const Poly& one) {
    if (idx.empty()) return one;
    Poly acc = one - one;
    const int a = idx[0];
    IndexSet rest(idx.begin() + 1, idx.end());
    for (std::size_t t = 0; t < rest.size(); ++t) {
        const int b = rest[t];
        Poly c = pi.coefficient({a, b});
        if (!c.is_zero()) {
            IndexSet sub;
            sub.reserve(rest.size() - 1);
            for (std::size_t s = 0; s < rest.size(); ++s)
                if (s != t) sub.push_back(rest[s]);
            Poly contrib = c * sub_pfaffian(pi, sub, one);
            acc = (t % 2 == 0) ? acc + contrib : acc - contrib;
        }
    }
    return acc;
}

void combinations(int n, int k, const std::function<void(const IndexSet&)>& fn) {
    IndexSet cur(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(cur);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            cur[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

PolyVector divided_power(const PolyVector& pi, int r) {
    if (pi.degree() != 2) throw DimensionMismatch("divided power needs a bivector");
    if (r < 0) throw Error("negative divided power");
    PolyVector out(pi.prime(), pi.nvars(), 2 * r);
    Poly one(pi.prime(), pi.nvars());
    one.add_term(ExpVec(pi.nvars(), 0), Fp(1, pi.prime()));
    if (r == 0) {
        out.add_term({}, one);
        return out;
    }
    if (2 * r > pi.nvars()) return out;
    combinations(pi.nvars(), 2 * r, [&](const IndexSet& idx) {
        Poly pf = sub_pfaffian(pi, idx, one);
        if (!pf.is_zero()) out.add_term(idx, pf);
    });
    return out;
}

int rank(const PolyVector& pi) {
    if (pi.degree() != 2) throw DimensionMismatch("rank needs a bivector");
    int r = 0;
    while (2 * (r + 1) <= pi.nvars() && !divided_power(pi, r + 1).is_zero()) ++r;
    return 2 * r;
}

int rank_at_point(const PolyVector& pi, const std::vector<Fp>& point) {
    if (pi.degree() != 2) throw DimensionMismatch("rank needs a bivector");
    if (static_cast<int>(point.size()) != pi.nvars()) throw ArityMismatch();
    const int n = pi.nvars();
    FpMatrix m(n, std::vector<Fp>(n, Fp(0, pi.prime())));
    for (const auto& [idx, f] : pi.terms()) {
        Fp v = f.evaluate(point);
        m[idx[0]][idx[1]] = v;
        m[idx[1]][idx[0]] = -v;
    }
    return rank_mod_p(std::move(m));
}

PolyVector hamiltonian(const Poly& a, const PolyVector& pi) {
    if (pi.degree() != 2) throw DimensionMismatch("hamiltonian needs a bivector");
    if (a.prime() != pi.prime()) throw ModulusMismatch();
    if (a.nvars() != pi.nvars()) throw ArityMismatch();
    PolyVector out(pi.prime(), pi.nvars(), 1);
    // X_a(x_j) = pi(a, x_j) = sum_i (da/dx_i) pi(x_i, x_j)
    for (int j = 0; j < pi.nvars(); ++j) {
        Poly acc(pi.prime(), pi.nvars());
        for (const auto& [idx, f] : pi.terms()) {
            if (idx[0] == j) {
                Poly da = a.partial_derivative(idx[1]);
                if (!da.is_zero()) acc = acc - da * f;
            } else if (idx[1] == j) {
                Poly da = a.partial_derivative(idx[0]);
                if (!da.is_zero()) acc = acc + da * f;
            }
        }
        if (!acc.is_zero()) out.add_term({j}, acc);
    }
    return out;
}

PolyVector generating_field(const std::vector<std::int64_t>& h, const TorusWeightData& wd,
                            std::int64_t p) {
    if (static_cast<int>(h.size()) != wd.m) throw DimensionMismatch("h has wrong torus rank");
    std::vector<Fp> coeffs;
    coeffs.reserve(wd.weights.size());
    for (const auto& w : wd.weights) {
        if (static_cast<int>(w.size()) != wd.m) throw DimensionMismatch("weight has wrong rank");
        std::int64_t acc = 0;
        for (int a = 0; a < wd.m; ++a) acc += w[a] * h[a];
        coeffs.emplace_back(acc, p);
    }
    return generating_field(coeffs, p);
}

PolyVector generating_field(const std::vector<Fp>& coeffs, std::int64_t p) {
    const int n = static_cast<int>(coeffs.size());
    PolyVector out(p, n, 1);
    for (int i = 0; i < n; ++i) {
        if (coeffs[i].is_zero()) continue;
        ExpVec e(n, 0);
        e[i] = 1;
        Poly f(p, n);
        f.add_term(e, coeffs[i]);
        out.add_term({i}, f);
    }
    return out;
}

std::optional<FpMatrix> log_canonical_matrix(const PolyVector& pi) {
    if (pi.degree() != 2) return std::nullopt;
    const int n = pi.nvars();
    FpMatrix m(n, std::vector<Fp>(n, Fp(0, pi.prime())));
    for (const auto& [idx, f] : pi.terms()) {
        if (f.term_count() != 1) return std::nullopt;
        const auto& [e, c] = *f.terms().begin();
        ExpVec want(n, 0);
        want[idx[0]] = 1;
        want[idx[1]] = 1;
        if (e != want) return std::nullopt;
        m[idx[0]][idx[1]] = c;
        m[idx[1]][idx[0]] = -c;
    }
    return m;
}

std::optional<std::vector<std::int64_t>> weight_of(const Poly& f, const TorusWeightData& wd) {
    if (f.is_zero()) return std::vector<std::int64_t>(wd.m, 0);
    std::optional<std::vector<std::int64_t>> found;
    for (const auto& [e, c] : f.terms()) {
        std::vector<std::int64_t> w(wd.m, 0);
        for (int i = 0; i < f.nvars(); ++i)
            for (int a = 0; a < wd.m; ++a) w[a] += static_cast<std::int64_t>(e[i]) * wd.weights[i][a];
        if (!found) {
            found = w;
        } else if (*found != w) {
            return std::nullopt;
        }
    }
    return found;
}

std::string str(const PolyVector& a, const PolyRing& ring) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, f] : a.terms()) {
        if (!first) out << " + ";
        first = false;
        out << "(" << ring.str(f) << ")";
        for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "^" : " * ") << "d" << (idx[i] + 1);
    }
    return out.str();
}

}  // namespace pfaffian
