#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pfaffian/reports.hpp"

using namespace pfaffian;

namespace {

struct Options {
    std::string type;
    std::string word;
    std::string gamma;
    std::int64_t prime = 0;
    bool json = false;
    int jobs = 1;
    std::string out;
    std::string cgl_path;
    std::string space = "gu";
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw Error("cannot write to " + opt.out);
    f << text << "\n";
}

std::string human_chart(const Json& j) {
    std::ostringstream out;
    out << "chart " << j["type"].get<std::string>() << "  word " << j["word"].get<std::string>()
        << "  gamma " << j["gamma"].get<std::string>() << "\n";
    const auto& c = j["coefficients"];
    const int n = j["n"].get<int>();
    out << "bracket coefficients  {z_i, z_k} = c(i,k) z_i z_k:\n";
    if (n < 2) out << "  (none)\n";
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            out << "  c(" << (i + 1) << "," << (k + 1) << ") = " << c[i][k].dump() << "\n";
    out << "torus weights (simple-root basis):\n";
    const auto& w = j["weights"];
    for (int i = 0; i < n; ++i) out << "  z" << (i + 1) << ": " << w[i].dump() << "\n";
    out << "eigenvalues lambda_i(h_i): " << j["eigenvalues"].dump();
    return out.str();
}

std::string human_split(const Json& j) {
    std::ostringstream out;
    if (j.contains("type"))
        out << "split " << j["type"].get<std::string>() << "  word " << j["word"].get<std::string>()
            << "  gamma " << j["gamma"].get<std::string>() << "  p=" << j["prime"].get<std::int64_t>()
            << "\n";
    else
        out << "split  (custom chart data)  p=" << j["prime"].get<std::int64_t>() << "\n";
    const auto& cert = j["certificate"];
    out << "half rank r = " << cert["half_rank"].get<int>() << ", torus columns "
        << cert["h_columns"].dump() << "\n";
    out << "sigma = (" << j["coefficient"].get<std::string>() << ") * d1^...^dn\n";
    const auto& rep = j["report"];
    out << "verdict: " << rep["verdict"].get<std::string>() << "\n";
    out << "criterion value: " << rep["criterion_value"].get<std::int64_t>()
        << (rep["shortcut_only"].get<bool>() ? "  (shortcut-derived)" : "") << "\n";
    out << "normalizer: " << rep["normalizer"].get<std::int64_t>() << "\n";
    out << "compatibly split coordinate ideals: " << rep["compatible_ideals"].dump();
    if (j.contains("ideals_poisson"))
        out << "\nall split ideals Poisson and weight-spanned: "
            << (j["ideals_poisson"].get<bool>() ? "yes" : "NO");
    return out.str();
}

std::string human_gu(const Json& j) {
    std::ostringstream out;
    out << "gu-split " << j["type"].get<std::string>() << "  p=" << j["prime"].get<std::int64_t>()
        << "  (n=" << j["n"].get<int>() << ", m=" << j["m"].get<int>() << ")\n";
    const auto& cert = j["certificate"];
    out << "half rank r = " << cert["half_rank"].get<int>() << ", torus columns "
        << cert["h_columns"].dump() << "\n";
    out << "coefficient = " << j["coefficient"].get<std::string>() << "\n";
    const auto& rep = j["report"];
    out << "verdict: " << rep["verdict"].get<std::string>() << "\n";
    out << "criterion value: " << rep["criterion_value"].get<std::int64_t>();
    return out.str();
}

std::string human_leaves(const Json& j) {
    std::ostringstream out;
    out << "leaves of " << j["type"].get<std::string>() << " on "
        << (j["space"].get<std::string>() == "gu" ? "G/U" : "G/B") << ": "
        << j["count"].get<std::size_t>() << " pairs\n";
    for (const auto& l : j["leaves"])
        out << "  u=" << l["u"].get<std::string>() << "  v=" << l["v"].get<std::string>()
            << "  dim=" << l["dim"].get<int>() << "\n";
    std::string s = out.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

// Runs fn over every subexpression of the word, in deterministic order, with
// an optional thread fan-out.
std::vector<Json> batch_over_subexpressions(const RootSystem& rs, const WeylWord& u, int jobs,
                                            const std::function<Json(const Subexpression&)>& fn) {
    auto gammas = subexpressions(u);
    std::vector<Json> results(gammas.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < gammas.size(); ++i) results[i] = fn(gammas[i]);
        return results;
    }
    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= gammas.size()) return;
                i = next++;
            }
            results[i] = fn(gammas[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

int run(int argc, char** argv) {
    CLI::App app{"Poisson structures, Pfaffians and Frobenius splittings on flag-variety charts"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool need_word) {
        cmd->add_option("--type", opt.type, "root system label, e.g. A2");
        if (need_word) {
            cmd->add_option("--word", opt.word, "comma list of 1-based reflection indices");
            cmd->add_option("--gamma", opt.gamma, "comma list over {e,s}; omit to run all");
        }
        cmd->add_flag("--json", opt.json, "emit JSON instead of a table");
        cmd->add_option("--jobs", opt.jobs, "threads for batch runs")->check(CLI::PositiveNumber);
        cmd->add_option("--out", opt.out, "write output to a file");
    };

    auto* chart = app.add_subcommand("chart", "bracket coefficients and weights of a chart");
    add_common(chart, true);
    chart->add_option("--prime", opt.prime, "unused by chart; accepted for symmetry");

    auto* split = app.add_subcommand("split", "certificate and splitting verdict for a chart");
    add_common(split, true);
    split->add_option("--prime", opt.prime, "characteristic, a prime > 3");
    split->add_option("--cgl", opt.cgl_path, "JSON file with custom chart data");

    auto* gu = app.add_subcommand("gu-split", "splitting of the basic affine space chart");
    add_common(gu, false);
    gu->add_option("--prime", opt.prime, "characteristic, a prime > 3");

    auto* leaves = app.add_subcommand("leaves", "torus leaf enumeration");
    add_common(leaves, false);
    leaves->add_option("--space", opt.space, "gb or gu")
        ->check(CLI::IsMember({"gb", "gu"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chart->parsed() || (split->parsed() && opt.cgl_path.empty())) {
            RootSystem rs = RootSystem::from_label(opt.type);
            WeylWord u = parse_word(opt.word);
            const bool splitting = split->parsed();
            if (splitting && opt.prime == 0) throw ParseError("--prime is required for split");
            auto one = [&](const Subexpression& g) {
                return splitting ? split_report(rs, u, g, opt.prime) : chart_report(rs, u, g);
            };
            auto render = [&](const Json& j) { return splitting ? human_split(j) : human_chart(j); };
            if (!opt.gamma.empty()) {
                Subexpression g = parse_subexpression(opt.gamma);
                if (g.size() != u.size())
                    throw LengthMismatch("gamma length does not match the word");
                Json j = one(g);
                emit(opt, opt.json ? j.dump(2) : render(j));
            } else {
                auto results = batch_over_subexpressions(rs, u, opt.jobs, one);
                if (opt.json) {
                    Json arr = Json::array();
                    for (auto& r : results) arr.push_back(std::move(r));
                    emit(opt, arr.dump(2));
                } else {
                    std::ostringstream out;
                    for (std::size_t i = 0; i < results.size(); ++i)
                        out << (i ? "\n\n" : "") << render(results[i]);
                    emit(opt, out.str());
                }
            }
        } else if (split->parsed()) {
            std::ifstream f(opt.cgl_path);
            if (!f) throw ParseError("cannot read " + opt.cgl_path);
            std::stringstream buf;
            buf << f.rdbuf();
            CGLData d = cgl_from_json(buf.str());
            std::int64_t p = opt.prime ? opt.prime : d.prime;
            if (p == 0) throw ParseError("no prime given on the command line or in the file");
            Json j = split_report(d, p);
            emit(opt, opt.json ? j.dump(2) : human_split(j));
        } else if (gu->parsed()) {
            if (opt.prime == 0) throw ParseError("--prime is required for gu-split");
            RootSystem rs = RootSystem::from_label(opt.type);
            Json j = gu_split_report(rs, opt.prime);
            emit(opt, opt.json ? j.dump(2) : human_gu(j));
        } else if (leaves->parsed()) {
            RootSystem rs = RootSystem::from_label(opt.type);
            Json j = leaves_report(rs, opt.space == "gu" ? Space::GU : Space::GB);
            emit(opt, opt.json ? j.dump(2) : human_leaves(j));
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LengthMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BadPrime& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const JacobiFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const EigenvalueZero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
