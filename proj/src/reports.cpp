#include "pfaffian/reports.hpp"

namespace pfaffian {

namespace {

Json rational_json(const Rational& v) {
    if (v.den() == 1) return Json(v.num());
    return Json(v.str());
}

Json candidate_json(const PfaffianCandidate& cand, const PolyRing& ring) {
    Json j;
    j["half_rank"] = cand.half_rank;
    std::vector<int> cols;
    for (int i : cand.h_indices) cols.push_back(i + 1);
    j["h_columns"] = cols;
    j["sigma"] = str(cand.sigma, ring);
    return j;
}

Json report_json(const SplittingReport& r) {
    Json j;
    j["verdict"] = r.split ? "split" : "not-split";
    j["criterion_value"] = r.criterion_value;
    j["top_coefficient"] = r.top_coefficient;
    j["normalizer"] = r.normalizer;
    j["shortcut_only"] = r.shortcut_only;
    j["compatible_ideals"] = r.compatible_ideals;
    return j;
}

}  // namespace

Json chart_report(const RootSystem& rs, const WeylWord& u, const Subexpression& gamma) {
    CGLData d = bott_samelson_chart(rs, u, gamma);
    Json j;
    j["type"] = rs.label();
    j["word"] = word_str(u);
    j["gamma"] = subexpression_str(gamma);
    j["n"] = d.n;
    j["m"] = d.m;
    Json coeffs = Json::array();
    for (int i = 0; i < d.n; ++i) {
        Json row = Json::array();
        for (int k = 0; k < d.n; ++k) {
            if (i < k)
                row.push_back(rational_json(d.pairing(k, i)));
            else if (i > k)
                row.push_back(rational_json(-d.pairing(i, k)));
            else
                row.push_back(0);
        }
        coeffs.push_back(std::move(row));
    }
    j["coefficients"] = std::move(coeffs);
    j["weights"] = d.weights;
    Json eig = Json::array();
    for (int i = 0; i < d.n; ++i) eig.push_back(rational_json(d.pairing(i, i)));
    j["eigenvalues"] = std::move(eig);
    return j;
}

Json split_report(const CGLData& d, std::int64_t p) {
    require_prime(p);
    PolyVector pi = assemble_bivector(d, p);
    PfaffianCandidate cand = pfaffian_certificate(d, p);
    PolyRing ring = d.ring(p);

    IndexSet top(d.n);
    for (int i = 0; i < d.n; ++i) top[i] = i;
    Poly f = cand.sigma.coefficient(top);
    SplittingReport rep = is_splitting(f);

    Json j;
    j["n"] = d.n;
    j["m"] = d.m;
    j["prime"] = p;
    j["certificate"] = candidate_json(cand, ring);
    j["coefficient"] = ring.str(f);
    j["report"] = report_json(rep);
    if (rep.split)
        j["ideals_poisson"] = verify_split_ideals(pi, torus_weights(d), rep.compatible_ideals);
    return j;
}

Json split_report(const RootSystem& rs, const WeylWord& u, const Subexpression& gamma,
                  std::int64_t p) {
    CGLData d = bott_samelson_chart(rs, u, gamma);
    Json j = split_report(d, p);
    Json out;
    out["type"] = rs.label();
    out["word"] = word_str(u);
    out["gamma"] = subexpression_str(gamma);
    out.update(j);
    return out;
}

Json gu_split_report(const RootSystem& rs, std::int64_t p) {
    GuChart chart = gu_chart_pfaffian(rs, p);
    const int N = chart.n + chart.m;
    IndexSet top(N);
    for (int i = 0; i < N; ++i) top[i] = i;
    Poly f = chart.candidate.sigma.coefficient(top);
    SplittingReport rep = is_splitting(f);

    Json j;
    j["type"] = rs.label();
    j["prime"] = p;
    j["n"] = chart.n;
    j["m"] = chart.m;
    Json a0 = Json::array();
    for (const auto& row : chart.a0) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.value());
        a0.push_back(std::move(r));
    }
    j["a0_mod_p"] = std::move(a0);
    j["certificate"] = candidate_json(chart.candidate, chart.ring);
    j["coefficient"] = chart.ring.str(f);
    j["report"] = report_json(rep);
    return j;
}

Json leaves_report(const RootSystem& rs, Space space) {
    auto leaves = enumerate_leaves(rs, space);
    Json j;
    j["type"] = rs.label();
    j["space"] = space == Space::GU ? "gu" : "gb";
    j["count"] = leaves.size();
    Json arr = Json::array();
    for (const auto& l : leaves) {
        Json e;
        e["u"] = word_str(l.u);
        e["v"] = word_str(l.v);
        e["dim"] = leaf_dimension(rs, l);
        arr.push_back(std::move(e));
    }
    j["leaves"] = std::move(arr);
    return j;
}

}  // namespace pfaffian
