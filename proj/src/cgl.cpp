#include "pfaffian/cgl.hpp"

#include <algorithm>
#include <functional>

#include <nlohmann/json.hpp>

#include "pfaffian/errors.hpp"

namespace pfaffian {

Rational CGLData::pairing(int i, int j) const {
    if (i < 0 || i >= n || j < 0 || j >= n) throw IndexOutOfRange();
    Rational acc(0);
    for (int a = 0; a < m; ++a) acc = acc + Rational(weights[i][a]) * h[j][a];
    return acc;
}

PolyRing CGLData::ring(std::int64_t p) const {
    if (!var_names.empty()) return PolyRing(p, var_names);
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    return PolyRing(p, names);
}

TorusWeightData torus_weights(const CGLData& d) { return TorusWeightData{d.m, d.weights}; }

FpMatrix pairing_matrix_mod_p(const CGLData& d, std::int64_t p) {
    FpMatrix out(d.n, std::vector<Fp>(d.n, Fp(0, p)));
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) out[i][j] = reduce_mod_p(d.pairing(i, j), p);
    return out;
}

FpMatrix skew_coefficient_matrix(const CGLData& d, std::int64_t p) {
    FpMatrix P = pairing_matrix_mod_p(d, p);
    FpMatrix out(d.n, std::vector<Fp>(d.n, Fp(0, p)));
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j) {
            out[i][j] = P[j][i];  // coefficient of x_i x_j in {x_i, x_j}
            out[j][i] = -P[j][i];
        }
    return out;
}

namespace {

void check_eigenvalues(const CGLData& d, std::int64_t p) {
    for (int i = 0; i < d.n; ++i)
        if (reduce_mod_p(d.pairing(i, i), p).is_zero()) throw EigenvalueZero();
}

Poly parse_delta(const CGLData& d, const PolyRing& ring, int i, int j, const std::string& text) {
    Poly f = ring.parse(text);
    for (const auto& [e, c] : f.terms())
        for (int k = 0; k < d.n; ++k)
            if (e[k] > 0 && (k <= i || k >= j))
                throw Error("delta_" + std::to_string(i + 1) + "(x_" + std::to_string(j + 1) +
                            ") may only involve variables strictly between the pair");
    return f;
}

}  // namespace

PolyVector log_canonical_part(const CGLData& d, std::int64_t p) {
    check_eigenvalues(d, p);
    FpMatrix skew = skew_coefficient_matrix(d, p);
    PolyVector pi(p, d.n, 2);
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j) {
            if (skew[i][j].is_zero()) continue;
            ExpVec e(d.n, 0);
            e[i] = 1;
            e[j] = 1;
            Poly f(p, d.n);
            f.add_term(e, skew[i][j]);
            pi.add_term({i, j}, f);
        }
    return pi;
}

PolyVector assemble_bivector(const CGLData& d, std::int64_t p) {
    PolyVector pi = log_canonical_part(d, p);
    if (d.delta.empty()) return pi;
    PolyRing ring = d.ring(p);
    for (const auto& [key, text] : d.delta) {
        const auto [i, j] = key;
        if (i < 0 || j >= d.n || i >= j) throw IndexOutOfRange();
        Poly f = parse_delta(d, ring, i, j, text);
        pi.add_term({i, j}, f);
    }
    if (!schouten(pi, pi).is_zero()) throw JacobiFailure();
    return pi;
}

CGLData bott_samelson_chart(const RootSystem& rs, const WeylWord& u, const Subexpression& gamma) {
    if (gamma.size() != u.size()) throw LengthMismatch("word and subexpression differ in length");
    for (int i : u)
        if (i < 0 || i >= rs.rank()) throw IndexOutOfRange();
    const int n = static_cast<int>(u.size());
    const int m = rs.rank();

    CGLData d;
    d.n = n;
    d.m = m;
    d.weights.resize(n);
    d.h.resize(n);
    d.var_names.reserve(n);
    for (int i = 1; i <= n; ++i) d.var_names.push_back("z" + std::to_string(i));

    auto prefixes = prefix_products(rs, u, gamma);
    for (int i = 0; i < n; ++i) {
        LatticeVec beta = prefixes[i].apply(rs.simple_root(u[i]));
        // z_i scales by t^{-gamma^i(alpha_i)} under the torus action
        std::vector<std::int64_t> w(m);
        for (int a = 0; a < m; ++a) w[a] = -beta[a];
        d.weights[i] = std::move(w);
        // h_i pairs every character mu to -/+ <gamma^i(alpha_i), mu>, which
        // reproduces the bracket coefficients and the +/- <alpha_i, alpha_i>
        // eigenvalue of z_i.
        const std::int64_t sign = gamma.take[i] ? 1 : -1;
        std::vector<Rational> hi(m);
        for (int a = 0; a < m; ++a) hi[a] = Rational(sign * rs.pairing(beta, rs.simple_root(a)));
        d.h[i] = std::move(hi);
    }
    return d;
}

namespace {

FpMatrix with_columns(const FpMatrix& base, const std::vector<std::vector<Fp>>& cols) {
    FpMatrix m = base;
    for (std::size_t r = 0; r < m.size(); ++r)
        for (const auto& col : cols) m[r].push_back(col[r]);
    return m;
}

std::vector<Fp> matrix_column(const FpMatrix& m, int j) {
    std::vector<Fp> col;
    col.reserve(m.size());
    for (const auto& row : m) col.push_back(row[j]);
    return col;
}

}  // namespace

PfaffianCandidate pfaffian_certificate(const CGLData& d, std::int64_t p) {
    PolyVector pi = assemble_bivector(d, p);
    FpMatrix skew = skew_coefficient_matrix(d, p);
    const int n = d.n;

    const int rank_log = rank_mod_p(skew);
    if (rank(pi) != rank_log) throw HypothesisFailed();
    const int r = rank_log / 2;
    const int need = n - rank_log;

    FpMatrix P = pairing_matrix_mod_p(d, p);
    std::vector<int> chosen;
    std::vector<std::vector<Fp>> cols;
    int cur = rank_log;
    for (int j = 0; j < n && static_cast<int>(chosen.size()) < need; ++j) {
        auto col = matrix_column(P, j);
        int next = rank_mod_p(with_columns(skew, [&] {
            auto c = cols;
            c.push_back(col);
            return c;
        }()));
        if (next > cur) {
            cur = next;
            chosen.push_back(j);
            cols.push_back(std::move(col));
        }
    }
    if (static_cast<int>(chosen.size()) < need) {
        // exhaustive fallback over index subsets, lexicographically first
        std::vector<int> subset(need);
        std::function<bool(int, int)> search = [&](int start, int depth) {
            if (depth == need) {
                std::vector<std::vector<Fp>> cs;
                for (int j : subset) cs.push_back(matrix_column(P, j));
                if (rank_mod_p(with_columns(skew, cs)) == n) {
                    chosen = subset;
                    cols = cs;
                    return true;
                }
                return false;
            }
            for (int j = start; j < n; ++j) {
                subset[depth] = j;
                if (search(j + 1, depth + 1)) return true;
            }
            return false;
        };
        if (!search(0, 0)) throw CertificateNotFound();
    }

    PfaffianCandidate cand{divided_power(pi, r), r, chosen, {}};
    for (const auto& col : cols) {
        cand.sigma = wedge(cand.sigma, generating_field(col, p));
        cand.field_coeffs.push_back(col);
    }

    IndexSet top(n);
    for (int i = 0; i < n; ++i) top[i] = i;
    Poly coeff = cand.sigma.coefficient(top);
    if (coeff.coefficient_of(ExpVec(n, 1)).is_zero()) throw CertificateNotFound();
    return cand;
}

bool wedge_nonvanishing(const FpMatrix& skew, const std::vector<std::vector<Fp>>& columns) {
    const int n = static_cast<int>(skew.size());
    if (n == 0) return false;
    const std::int64_t p = skew[0][0].modulus();
    const int spare = n - static_cast<int>(columns.size());
    if (spare < 0 || spare % 2 != 0) throw DimensionMismatch("need exactly n - 2r columns");
    const int r = spare / 2;

    // scalar exterior algebra: constant-coefficient multi-derivations
    PolyVector omega(p, n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (skew[i][j].is_zero()) continue;
            Poly f(p, n);
            f.add_term(ExpVec(n, 0), skew[i][j]);
            omega.add_term({i, j}, f);
        }
    PolyVector acc = divided_power(omega, r);
    for (const auto& col : columns) {
        if (static_cast<int>(col.size()) != n) throw DimensionMismatch("column has wrong size");
        PolyVector v(p, n, 1);
        for (int i = 0; i < n; ++i) {
            if (col[i].is_zero()) continue;
            Poly f(p, n);
            f.add_term(ExpVec(n, 0), col[i]);
            v.add_term({i}, f);
        }
        acc = wedge(acc, v);
    }
    return !acc.is_zero();
}

PolyVector mixed_product_bivector(const PolyVector& pi_q, const FpMatrix& a0,
                                  const std::vector<std::vector<std::int64_t>>& z_weights) {
    const int m = static_cast<int>(a0.size());
    const int n = pi_q.nvars();
    if (static_cast<int>(z_weights.size()) != n) throw DimensionMismatch("one weight per z variable");
    const std::int64_t p = pi_q.prime();
    for (int j = 0; j < m; ++j) {
        if (static_cast<int>(a0[j].size()) != m) throw DimensionMismatch("A0 must be square");
        for (int k = 0; k < m; ++k)
            if (a0[j][k] != a0[k][j]) throw DimensionMismatch("A0 must be symmetric");
    }

    PolyVector out(p, m + n, 2);
    for (const auto& [idx, f] : pi_q.terms()) {
        Poly g(p, m + n);
        for (const auto& [e, c] : f.terms()) {
            ExpVec shifted(m + n, 0);
            std::copy(e.begin(), e.end(), shifted.begin() + m);
            g.add_term(shifted, c);
        }
        out.add_term({idx[0] + m, idx[1] + m}, g);
    }
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) {
            Fp c(0, p);
            for (int a = 0; a < m; ++a) c = c + a0[j][a] * Fp(z_weights[i][a], p);
            if (c.is_zero()) continue;
            ExpVec e(m + n, 0);
            e[j] = 1;
            e[m + i] = 1;
            Poly f(p, m + n);
            f.add_term(e, c);
            out.add_term({j, m + i}, f);
        }
    return out;
}

RationalMatrix coroot_gram_inverse(const RootSystem& rs) {
    const int m = rs.rank();
    RationalMatrix gram(m, std::vector<Rational>(m, Rational(0)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            gram[a][b] = Rational(rs.pairing(rs.simple_root(a), rs.simple_root(b)),
                                  static_cast<std::int64_t>(rs.half_lengths()[a]) *
                                      rs.half_lengths()[b]);
    return invert(std::move(gram));
}

GuChart gu_chart_pfaffian(const RootSystem& rs, std::int64_t p) {
    require_prime(p);
    WeylWord w0 = longest_element(rs);
    Subexpression gamma;
    gamma.take.assign(w0.size(), false);
    CGLData cell = bott_samelson_chart(rs, w0, gamma);
    const int n = cell.n;
    const int m = rs.rank();

    PfaffianCandidate zcert = pfaffian_certificate(cell, p);

    RationalMatrix a0q = coroot_gram_inverse(rs);
    FpMatrix a0(m, std::vector<Fp>(m, Fp(0, p)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            try {
                a0[a][b] = reduce_mod_p(a0q[a][b], p);
            } catch (const DenominatorDivisibleByP&) {
                throw BadPrime("prime divides a denominator of the inverse coroot Gram matrix");
            }
        }

    PolyVector pi = mixed_product_bivector(assemble_bivector(cell, p), a0, cell.weights);
    const int N = m + n;

    PfaffianCandidate cand{divided_power(pi, zcert.half_rank), zcert.half_rank, zcert.h_indices, {}};
    for (const auto& col : zcert.field_coeffs) {
        std::vector<Fp> lifted(N, Fp(0, p));
        for (int i = 0; i < n; ++i) lifted[m + i] = col[i];
        cand.sigma = wedge(cand.sigma, generating_field(lifted, p));
        cand.field_coeffs.push_back(std::move(lifted));
    }
    for (int j = 0; j < m; ++j) {
        std::vector<Fp> tj(N, Fp(0, p));
        tj[j] = Fp(1, p);
        cand.sigma = wedge(cand.sigma, generating_field(tj, p));
        cand.field_coeffs.push_back(std::move(tj));
    }

    IndexSet top(N);
    for (int i = 0; i < N; ++i) top[i] = i;
    Poly coeff = cand.sigma.coefficient(top);
    if (coeff.term_count() != 1 || coeff.coefficient_of(ExpVec(N, 1)).is_zero())
        throw CertificateNotFound();

    std::vector<std::string> names;
    names.reserve(N);
    for (int j = 1; j <= m; ++j) names.push_back("t" + std::to_string(j));
    for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));

    return GuChart{n, m, p, std::move(cell), std::move(a0), std::move(pi), std::move(cand),
                   PolyRing(p, std::move(names))};
}

namespace {

Rational rational_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const Error&) {
            throw;
        } catch (...) {
            throw ParseError("bad rational '" + s + "'");
        }
    }
    throw ParseError("rational entries must be integers or strings like \"2/3\"");
}

}  // namespace

CGLData cgl_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    CGLData d;
    try {
        d.n = j.at("n").get<int>();
        d.m = j.at("m").get<int>();
        if (d.n < 0 || d.m < 0) throw ParseError("n and m must be non-negative");
        if (j.contains("prime")) d.prime = j["prime"].get<std::int64_t>();
        const auto& w = j.at("weights");
        if (static_cast<int>(w.size()) != d.n) throw ParseError("weights must have n rows");
        for (const auto& row : w) {
            if (static_cast<int>(row.size()) != d.m) throw ParseError("weight rows must have m entries");
            d.weights.push_back(row.get<std::vector<std::int64_t>>());
        }
        const auto& h = j.at("h");
        if (static_cast<int>(h.size()) != d.n) throw ParseError("h must have n rows");
        for (const auto& row : h) {
            if (static_cast<int>(row.size()) != d.m) throw ParseError("h rows must have m entries");
            std::vector<Rational> hr;
            for (const auto& v : row) hr.push_back(rational_from_json(v));
            d.h.push_back(std::move(hr));
        }
        if (j.contains("delta")) {
            for (const auto& [key, val] : j["delta"].items()) {
                auto comma = key.find(',');
                if (comma == std::string::npos) throw ParseError("delta keys look like \"1,3\"");
                int a = std::stoi(key.substr(0, comma)) - 1;
                int b = std::stoi(key.substr(comma + 1)) - 1;
                d.delta[{a, b}] = val.get<std::string>();
            }
        }
        if (j.contains("names")) d.var_names = j["names"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    if (!d.var_names.empty() && static_cast<int>(d.var_names.size()) != d.n)
        throw ParseError("names must list one label per variable");
    return d;
}

std::string cgl_to_json(const CGLData& d) {
    nlohmann::ordered_json j;
    j["n"] = d.n;
    j["m"] = d.m;
    if (d.prime) j["prime"] = d.prime;
    j["weights"] = d.weights;
    nlohmann::ordered_json h = nlohmann::ordered_json::array();
    for (const auto& row : d.h) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : row) {
            if (v.den() == 1)
                r.push_back(v.num());
            else
                r.push_back(v.str());
        }
        h.push_back(std::move(r));
    }
    j["h"] = std::move(h);
    if (!d.delta.empty()) {
        nlohmann::ordered_json del;
        for (const auto& [key, text] : d.delta)
            del[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = text;
        j["delta"] = std::move(del);
    }
    if (!d.var_names.empty()) j["names"] = d.var_names;
    return j.dump(2);
}

}  // namespace pfaffian
