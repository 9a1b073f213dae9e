#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pfaffian {

/// Element of the root lattice in simple-root coordinates.
using LatticeVec = std::vector<std::int64_t>;

/// A word in the simple reflections, 0-based generator indices.
using WeylWord = std::vector<int>;

/// Finite root system with the pairing normalized so that <a,a>/2 lies in
/// {1,2,3} for every root a.
class RootSystem {
public:
    static RootSystem from_label(const std::string& label);  // "A2", "G2", ...

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    /// Cartan integer 2<a_i,a_j>/<a_i,a_i>.
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    /// Half squared length <a_i,a_i>/2 of each simple root.
    const std::vector<int>& half_lengths() const { return d_; }

    LatticeVec simple_root(int i) const;
    std::int64_t pairing(const LatticeVec& u, const LatticeVec& v) const;
    LatticeVec reflect(int i, const LatticeVec& v) const;

    const std::vector<LatticeVec>& positive_roots() const { return pos_; }

private:
    std::string label_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<LatticeVec> pos_;
};

/// Weyl group element represented faithfully by its action on the root lattice.
class WeylElement {
public:
    static WeylElement identity(const RootSystem& rs);
    static WeylElement simple(const RootSystem& rs, int i);

    WeylElement operator*(const WeylElement& b) const;
    LatticeVec apply(const LatticeVec& v) const;
    bool is_identity() const;

    bool operator==(const WeylElement& b) const { return mat_ == b.mat_; }
    bool operator!=(const WeylElement& b) const { return !(*this == b); }
    bool operator<(const WeylElement& b) const { return mat_ < b.mat_; }

private:
    explicit WeylElement(std::vector<std::vector<std::int64_t>> m) : mat_(std::move(m)) {}
    std::vector<std::vector<std::int64_t>> mat_;
};

WeylElement element_of(const RootSystem& rs, const WeylWord& w);
LatticeVec act(const RootSystem& rs, const WeylWord& w, const LatticeVec& v);

/// Coxeter length: the number of positive roots sent negative.
int length(const RootSystem& rs, const WeylElement& w);
int length(const RootSystem& rs, const WeylWord& w);

/// Canonical reduced word recovered by greedy smallest-index descent.
WeylWord canonical_word(const RootSystem& rs, WeylElement w);
WeylWord longest_element(const RootSystem& rs);

std::vector<WeylWord> all_reduced_words(const RootSystem& rs, const WeylElement& w);
std::vector<WeylElement> all_elements(const RootSystem& rs);

/// Subword test on the canonical reduced word of w.
bool bruhat_leq(const RootSystem& rs, const WeylWord& u, const WeylWord& w);

/// Choice of e or s_i at each letter of a word.
struct Subexpression {
    std::vector<bool> take;
    std::size_t size() const { return take.size(); }
};

/// All 2^|u| subexpressions, in lexicographic order (e before s at each slot).
std::vector<Subexpression> subexpressions(const WeylWord& u);

/// Prefix products gamma^i = gamma_1 ... gamma_i for i = 1..|u|.
std::vector<WeylElement> prefix_products(const RootSystem& rs, const WeylWord& u,
                                         const Subexpression& gamma);

WeylWord parse_word(const std::string& text);          // "1,2,1" (1-based indices)
Subexpression parse_subexpression(const std::string&); // "e,s,e"
std::string word_str(const WeylWord& w);
std::string subexpression_str(const Subexpression& g);

}  // namespace pfaffian
