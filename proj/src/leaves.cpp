#include "pfaffian/leaves.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace pfaffian {

std::vector<LeafIndex> enumerate_leaves(const RootSystem& rs, Space space) {
    std::vector<WeylWord> words;
    for (const auto& w : all_elements(rs)) words.push_back(canonical_word(rs, w));
    std::sort(words.begin(), words.end(), [](const WeylWord& a, const WeylWord& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    std::vector<LeafIndex> out;
    for (const auto& u : words)
        for (const auto& v : words)
            if (bruhat_leq(rs, v, u)) out.push_back(LeafIndex{u, v, space});
    return out;
}

int leaf_dimension(const RootSystem& rs, const LeafIndex& l) {
    int dim = length(rs, l.u) - length(rs, l.v);
    if (l.space == Space::GU) dim += rs.rank();
    return dim;
}

std::string leaves_json(const RootSystem& rs, const std::vector<LeafIndex>& leaves) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& l : leaves) {
        nlohmann::ordered_json j;
        j["u"] = word_str(l.u);
        j["v"] = word_str(l.v);
        j["dim"] = leaf_dimension(rs, l);
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace pfaffian
