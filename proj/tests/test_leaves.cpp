#include <doctest.h>

#include "oracles.hpp"
#include "pfaffian/cgl.hpp"
#include "pfaffian/leaves.hpp"

using namespace pfaffian;

TEST_CASE("leaf counts at small rank") {
    RootSystem a1 = RootSystem::from_label("A1");
    auto l1 = enumerate_leaves(a1, Space::GU);
    CHECK(l1.size() == 3);

    RootSystem a2 = RootSystem::from_label("A2");
    CHECK(enumerate_leaves(a2, Space::GU).size() == 19);
    CHECK(enumerate_leaves(a2, Space::GB).size() == 19);  // same index set
}

TEST_CASE("leaf counts match the exhaustive closure oracle") {
    for (const char* label : {"A1", "A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::from_label(label);
        oracles::BruhatClosure closure(rs);
        std::size_t expect = 0;
        for (const auto& u : closure.elems)
            for (const auto& v : closure.elems)
                if (closure.less_eq(v, u)) ++expect;
        CHECK(enumerate_leaves(rs, Space::GU).size() == expect);
    }
}

TEST_CASE("every leaf index is a comparable pair") {
    RootSystem rs = RootSystem::from_label("B2");
    for (const auto& l : enumerate_leaves(rs, Space::GU)) CHECK(bruhat_leq(rs, l.v, l.u));
}

TEST_CASE("leaf dimensions") {
    RootSystem a2 = RootSystem::from_label("A2");
    WeylWord w0 = longest_element(a2);
    CHECK(leaf_dimension(a2, LeafIndex{w0, {}, Space::GB}) == 3);
    CHECK(leaf_dimension(a2, LeafIndex{w0, w0, Space::GB}) == 0);
    CHECK(leaf_dimension(a2, LeafIndex{w0, {}, Space::GU}) == 5);
    CHECK(leaf_dimension(a2, LeafIndex{{0}, {0}, Space::GU}) == 2);
}

TEST_CASE("the big open leaf is the unique one of maximal dimension") {
    for (const char* label : {"A1", "A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::from_label(label);
        auto leaves = enumerate_leaves(rs, Space::GU);
        WeylWord w0 = longest_element(rs);
        int best = -1, count = 0;
        for (const auto& l : leaves) best = std::max(best, leaf_dimension(rs, l));
        for (const auto& l : leaves)
            if (leaf_dimension(rs, l) == best) {
                ++count;
                CHECK(l.u == w0);
                CHECK(l.v.empty());
            }
        CHECK(count == 1);
    }
}

TEST_CASE("open-leaf dimension matches the pointwise rank of the mixed chart") {
    // dimension of the (w0, e) leaf = generic rank of the chart bivector plus
    // the leftover torus directions
    RootSystem a2 = RootSystem::from_label("A2");
    const std::int64_t p = 7;
    GuChart chart = gu_chart_pfaffian(a2, p);
    const int N = chart.n + chart.m;
    std::vector<Fp> pt;
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::int64_t> cd(1, p - 1);
    int generic_rank = 0;
    for (int tries = 0; tries < 500; ++tries) {
        pt.clear();
        for (int i = 0; i < N; ++i) pt.emplace_back(cd(rng), p);
        generic_rank = std::max(generic_rank, rank_at_point(chart.pi, pt));
    }
    int dim = leaf_dimension(a2, LeafIndex{longest_element(a2), {}, Space::GU});
    CHECK(dim == generic_rank + (N - generic_rank));  // bookkeeping split
    CHECK(generic_rank == 2 * 2);                     // rank 4 at generic points
    CHECK(dim == 5);
}

TEST_CASE("leaves serialize to JSON") {
    RootSystem a1 = RootSystem::from_label("A1");
    std::string text = leaves_json(a1, enumerate_leaves(a1, Space::GU));
    CHECK(text.find("\"u\"") != std::string::npos);
    CHECK(text.find("\"dim\"") != std::string::npos);
}
