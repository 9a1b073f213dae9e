#include "pfaffian/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "pfaffian/errors.hpp"

namespace pfaffian {

namespace {

bool all_nonneg(const LatticeVec& v) {
    for (auto x : v)
        if (x < 0) return false;
    return true;
}

bool all_nonpos(const LatticeVec& v) {
    for (auto x : v)
        if (x > 0) return false;
    return true;
}

}  // namespace

RootSystem RootSystem::from_label(const std::string& label) {
    if (label.size() < 2) throw UnsupportedType(label);
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    int n = 0;
    try {
        n = std::stoi(label.substr(1));
    } catch (...) {
        throw UnsupportedType(label);
    }
    if (n < 1) throw UnsupportedType(label);

    RootSystem rs;
    rs.label_ = std::string(1, family) + std::to_string(n);
    rs.rank_ = n;
    auto& C = rs.cartan_;
    auto& d = rs.d_;
    C.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) C[i][i + 1] = C[i + 1][i] = -1;
    };

    switch (family) {
        case 'A':
            chain(n);
            d.assign(n, 1);
            break;
        case 'B':
            if (n < 2) throw UnsupportedType(label);
            chain(n);
            C[n - 1][n - 2] = -2;  // last root short
            d.assign(n, 2);
            d[n - 1] = 1;
            break;
        case 'C':
            if (n < 2) throw UnsupportedType(label);
            chain(n);
            C[n - 2][n - 1] = -2;  // last root long
            d.assign(n, 1);
            d[n - 1] = 2;
            break;
        case 'D':
            if (n < 3) throw UnsupportedType(label);
            chain(n - 1);
            C[n - 3][n - 1] = C[n - 1][n - 3] = -1;
            d.assign(n, 1);
            break;
        case 'E':
            if (n < 6 || n > 8) throw UnsupportedType(label);
            // nodes 1..n-1 form a chain, node 0 attaches to node 3
            for (int i = 1; i + 1 < n; ++i) C[i][i + 1] = C[i + 1][i] = -1;
            C[0][3] = C[3][0] = -1;
            d.assign(n, 1);
            break;
        case 'F':
            if (n != 4) throw UnsupportedType(label);
            chain(n);
            C[1][2] = -1;
            C[2][1] = -2;  // roots 3,4 short
            d = {2, 2, 1, 1};
            break;
        case 'G':
            if (n != 2) throw UnsupportedType(label);
            C[0][1] = -3;
            C[1][0] = -1;  // first root short
            d = {1, 3};
            break;
        default:
            throw UnsupportedType(label);
    }

    // d_i C_ij must be symmetric: the pairing matrix on the root lattice.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i] * C[i][j] != d[j] * C[j][i]) throw UnsupportedType(label);

    std::set<LatticeVec> roots;
    std::vector<LatticeVec> frontier;
    for (int i = 0; i < n; ++i) {
        roots.insert(rs.simple_root(i));
        frontier.push_back(rs.simple_root(i));
    }
    while (!frontier.empty()) {
        std::vector<LatticeVec> next;
        for (const auto& r : frontier)
            for (int i = 0; i < n; ++i) {
                LatticeVec s = rs.reflect(i, r);
                if (all_nonneg(s) && roots.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    rs.pos_.assign(roots.begin(), roots.end());
    return rs;
}

LatticeVec RootSystem::simple_root(int i) const {
    if (i < 0 || i >= rank_) throw IndexOutOfRange();
    LatticeVec v(rank_, 0);
    v[i] = 1;
    return v;
}

std::int64_t RootSystem::pairing(const LatticeVec& u, const LatticeVec& v) const {
    if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
        throw DimensionMismatch("lattice vector has wrong rank");
    std::int64_t acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) acc += u[i] * static_cast<std::int64_t>(d_[i]) * cartan_[i][j] * v[j];
    }
    return acc;
}

LatticeVec RootSystem::reflect(int i, const LatticeVec& v) const {
    if (i < 0 || i >= rank_) throw IndexOutOfRange();
    if (static_cast<int>(v.size()) != rank_) throw DimensionMismatch("lattice vector has wrong rank");
    std::int64_t c = 0;
    for (int j = 0; j < rank_; ++j) c += cartan_[i][j] * v[j];
    LatticeVec out = v;
    out[i] -= c;
    return out;
}

WeylElement WeylElement::identity(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return WeylElement(std::move(m));
}

WeylElement WeylElement::simple(const RootSystem& rs, int i) {
    const int n = rs.rank();
    if (i < 0 || i >= n) throw IndexOutOfRange();
    auto m = identity(rs).mat_;
    for (int j = 0; j < n; ++j) m[i][j] -= rs.cartan()[i][j];
    return WeylElement(std::move(m));
}

WeylElement WeylElement::operator*(const WeylElement& b) const {
    const std::size_t n = mat_.size();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (mat_[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) m[i][j] += mat_[i][k] * b.mat_[k][j];
        }
    return WeylElement(std::move(m));
}

LatticeVec WeylElement::apply(const LatticeVec& v) const {
    const std::size_t n = mat_.size();
    if (v.size() != n) throw DimensionMismatch("lattice vector has wrong rank");
    LatticeVec out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += mat_[i][j] * v[j];
    return out;
}

bool WeylElement::is_identity() const {
    for (std::size_t i = 0; i < mat_.size(); ++i)
        for (std::size_t j = 0; j < mat_.size(); ++j)
            if (mat_[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

WeylElement element_of(const RootSystem& rs, const WeylWord& w) {
    WeylElement e = WeylElement::identity(rs);
    for (int i : w) e = e * WeylElement::simple(rs, i);
    return e;
}

LatticeVec act(const RootSystem& rs, const WeylWord& w, const LatticeVec& v) {
    return element_of(rs, w).apply(v);
}

int length(const RootSystem& rs, const WeylElement& w) {
    int count = 0;
    for (const auto& r : rs.positive_roots())
        if (all_nonpos(w.apply(r))) ++count;
    return count;
}

int length(const RootSystem& rs, const WeylWord& w) { return length(rs, element_of(rs, w)); }

WeylWord canonical_word(const RootSystem& rs, WeylElement w) {
    // Peel letters off the right: if w(a_i) < 0 then l(w s_i) = l(w) - 1.
    WeylWord out;
    while (!w.is_identity()) {
        int found = -1;
        for (int i = 0; i < rs.rank(); ++i) {
            if (all_nonpos(w.apply(rs.simple_root(i)))) {
                found = i;
                break;
            }
        }
        if (found < 0) throw Error("descent search failed");
        out.push_back(found);
        w = w * WeylElement::simple(rs, found);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

WeylWord longest_element(const RootSystem& rs) {
    WeylElement w = WeylElement::identity(rs);
    for (;;) {
        int found = -1;
        for (int i = 0; i < rs.rank(); ++i) {
            if (all_nonneg(w.apply(rs.simple_root(i)))) {
                found = i;
                break;
            }
        }
        if (found < 0) break;  // every simple root goes negative: done
        w = w * WeylElement::simple(rs, found);
    }
    return canonical_word(rs, w);
}

std::vector<WeylWord> all_reduced_words(const RootSystem& rs, const WeylElement& w) {
    if (w.is_identity()) return {WeylWord{}};
    std::vector<WeylWord> out;
    for (int i = 0; i < rs.rank(); ++i) {
        WeylElement s = WeylElement::simple(rs, i);
        WeylElement rest = s * w;
        if (length(rs, rest) < length(rs, w)) {
            for (auto tail : all_reduced_words(rs, rest)) {
                tail.insert(tail.begin(), i);
                out.push_back(std::move(tail));
            }
        }
    }
    return out;
}

std::vector<WeylElement> all_elements(const RootSystem& rs) {
    std::set<WeylElement> seen;
    std::vector<WeylElement> frontier{WeylElement::identity(rs)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier)
            for (int i = 0; i < rs.rank(); ++i) {
                WeylElement v = w * WeylElement::simple(rs, i);
                if (seen.insert(v).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

bool bruhat_leq(const RootSystem& rs, const WeylWord& u, const WeylWord& w) {
    WeylElement target = element_of(rs, u);
    WeylWord word = canonical_word(rs, element_of(rs, w));
    const int lu = length(rs, target);
    const int lw = static_cast<int>(word.size());
    if (lu > lw) return false;
    // Any subword of a reduced word represents a smaller element, so it is
    // enough to look for one multiplying to u.
    const std::uint64_t total = std::uint64_t(1) << word.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (__builtin_popcountll(mask) != lu) continue;
        WeylElement e = WeylElement::identity(rs);
        for (std::size_t i = 0; i < word.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) e = e * WeylElement::simple(rs, word[i]);
        if (e == target) return true;
    }
    return false;
}

std::vector<Subexpression> subexpressions(const WeylWord& u) {
    const std::size_t n = u.size();
    std::vector<Subexpression> out;
    out.reserve(std::size_t(1) << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        Subexpression g;
        g.take.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.take[i] = (mask >> i) & 1;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<WeylElement> prefix_products(const RootSystem& rs, const WeylWord& u,
                                         const Subexpression& gamma) {
    if (gamma.size() != u.size()) throw LengthMismatch("subexpression length != word length");
    std::vector<WeylElement> out;
    out.reserve(u.size());
    WeylElement acc = WeylElement::identity(rs);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (gamma.take[i]) acc = acc * WeylElement::simple(rs, u[i]);
        out.push_back(acc);
    }
    return out;
}

WeylWord parse_word(const std::string& text) {
    WeylWord out;
    if (text.empty() || text == "e") return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty entry in word '" + text + "'");
        int v = 0;
        try {
            v = std::stoi(item);
        } catch (...) {
            throw ParseError("bad index '" + item + "' in word");
        }
        if (v < 1) throw ParseError("word indices are 1-based");
        out.push_back(v - 1);
    }
    return out;
}

Subexpression parse_subexpression(const std::string& text) {
    Subexpression g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string t;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        if (t == "e")
            g.take.push_back(false);
        else if (t == "s")
            g.take.push_back(true);
        else
            throw ParseError("subexpression entries must be 'e' or 's', got '" + item + "'");
    }
    return g;
}

std::string word_str(const WeylWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w[i] + 1);
    }
    return out.empty() ? "e" : out;
}

std::string subexpression_str(const Subexpression& g) {
    std::string out;
    for (std::size_t i = 0; i < g.take.size(); ++i) {
        if (i) out += ",";
        out += g.take[i] ? "s" : "e";
    }
    return out;
}

}  // namespace pfaffian
