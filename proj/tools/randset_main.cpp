// randset: random subsets with density, intersection experiments, and
// random group presentations on the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "randset/experiments.hpp"
#include "randset/moments.hpp"
#include "randset/multidim.hpp"
#include "randset/smallcancel.hpp"
#include "randset/words.hpp"

using json = nlohmann::json;
using namespace randset;

namespace {

json row_to_json(const SweepRow& row) {
    json j;
    j["kind"] = row.kind;
    if (row.m != 0) j["m"] = row.m;
    j["n_or_ell"] = row.n_or_ell;
    if (!std::isnan(row.alpha)) j["alpha"] = row.alpha;
    if (!std::isnan(row.beta_or_d)) j["beta_or_d"] = row.beta_or_d;
    if (!std::isnan(row.lambda)) j["lambda"] = row.lambda;
    if (row.k != 0) j["k"] = row.k;
    j["trials"] = row.trials;
    j["successes"] = row.successes;
    j["p_hat"] = row.p_hat;
    j["wilson_lo"] = row.wilson_lo;
    j["wilson_hi"] = row.wilson_hi;
    j["verdict"] = row.verdict;
    return j;
}

// --out PREFIX writes PREFIX.csv and PREFIX.json; otherwise the summary
// goes to stdout.
void emit(const std::vector<SweepRow>& rows, const json& summary, const std::string& out) {
    if (out.empty()) {
        std::cout << summary.dump(2) << "\n";
        return;
    }
    std::ofstream csv(out + ".csv", std::ios::binary);
    if (!csv) throw std::domain_error("cannot open " + out + ".csv for writing");
    csv << rows_to_csv(rows);
    std::ofstream js(out + ".json", std::ios::binary);
    if (!js) throw std::domain_error("cannot open " + out + ".json for writing");
    js << summary.dump(2) << "\n";
    std::cout << "wrote " << out << ".csv and " << out << ".json\n";
}

json summarize_rows(const std::vector<SweepRow>& rows) {
    json cells = json::array();
    for (const SweepRow& row : rows) cells.push_back(row_to_json(row));
    return json{{"cells", cells}};
}

RelatorSet read_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open presentation file: " + path);
    unsigned rank = 0;
    std::string line;
    if (!std::getline(in, line)) throw std::domain_error("empty presentation file");
    std::istringstream header(line);
    std::string tag;
    header >> tag >> rank;
    if (tag != "rank" || rank < 2)
        throw std::domain_error("presentation file must start with 'rank m' (m >= 2)");
    std::vector<Word> relators;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        relators.push_back(Word::parse(line, rank));
    }
    return RelatorSet::create(rank, std::move(relators));
}

json occurrence_json(const Occurrence& occ) {
    return json{{"relator", occ.relator}, {"offset", occ.offset}, {"inverted", occ.inverted}};
}

int run(int argc, char** argv) {
    CLI::App app{"random subsets with density: samplers, exact moments, and "
                 "random group experiments"};
    app.require_subcommand(1);

    // ---- moments ----------------------------------------------------
    auto* cmd_moments = app.add_subcommand("moments", "print closed-form moment values as JSON");
    std::uint64_t mo_n = 0;
    std::uint64_t mo_ka = 0;
    std::uint64_t mo_kb = 0;
    double mo_d = std::numeric_limits<double>::quiet_NaN();
    unsigned mo_r = 0;
    cmd_moments->add_option("--n", mo_n, "universe size")->required();
    cmd_moments->add_option("--ka", mo_ka, "cardinality of A");
    cmd_moments->add_option("--kb", mo_kb, "cardinality of B");
    cmd_moments->add_option("--d", mo_d, "Bernoulli density");
    cmd_moments->add_option("--r", mo_r, "tuple size for the inclusion probability");
    cmd_moments->callback([&] {
        json out;
        out["n"] = mo_n;
        const UniverseSize n(mo_n);
        if (mo_ka > 0 && mo_kb > 0) {
            const MomentPair m = intersection_moments_uniform(n, mo_ka, mo_kb);
            out["intersection_uniform"] = {{"ka", mo_ka}, {"kb", mo_kb},
                                           {"mean", m.mean},  {"variance", m.variance}};
        }
        if (!std::isnan(mo_d)) {
            const MomentPair m = bernoulli_moments(n, mo_d);
            out["bernoulli"] = {{"d", mo_d}, {"mean", m.mean}, {"variance", m.variance}};
        }
        if (mo_ka > 0 && mo_r > 0) {
            out["inclusion_probability"] = {
                {"k", mo_ka},
                {"r", mo_r},
                {"value", uniform_inclusion_prob(n, mo_ka, mo_r)},
                {"log_value", uniform_inclusion_log_prob(n, mo_ka, mo_r)}};
        }
        std::cout << out.dump(2) << "\n";
    });

    // ---- thresholds -------------------------------------------------
    auto* cmd_thresholds =
        app.add_subcommand("thresholds", "explicit density thresholds for the free-subgroup bound");
    unsigned th_m = 2;
    double th_eps = 0.0;
    cmd_thresholds->add_option("--m", th_m, "number of generators");
    cmd_thresholds->add_option("--eps", th_eps, "slack subtracted from mu");
    cmd_thresholds->callback([&] {
        const Thresholds th = compute_thresholds(th_m, th_eps);
        json out{{"m", th.rank},         {"eps", th.eps},
                 {"mu", th.mu},          {"lambda", th.lambda},
                 {"d_ao", th.d_ao},      {"dens_m", th.dens_m},
                 {"lambda_floor", th.lambda_floor}};
        std::cout << out.dump(2) << "\n";
    });

    // ---- bernoulli-empty --------------------------------------------
    auto* cmd_empty =
        app.add_subcommand("bernoulli-empty", "fraction of empty Bernoulli samples per density");
    BernoulliEmptyConfig be;
    std::string be_out;
    cmd_empty->add_option("--n", be.n, "universe size")->required();
    cmd_empty->add_option("--d", be.ds, "density grid")->required();
    cmd_empty->add_option("--trials", be.trials, "trials per cell")->default_val(1000);
    cmd_empty->add_option("--seed", be.master_seed, "master seed")->default_val(0);
    cmd_empty->add_option("--out", be_out, "output file prefix");
    cmd_empty->callback([&] {
        const auto rows = run_bernoulli_empty_experiment(be);
        emit(rows, summarize_rows(rows), be_out);
    });

    // ---- intersect-sim ----------------------------------------------
    auto* cmd_isim = app.add_subcommand("intersect-sim", "Monte Carlo intersection windows");
    IntersectionConfig ic;
    std::string ic_out;
    std::string ic_model = "uniform";
    cmd_isim->add_option("--n", ic.ns, "universe size grid")->required();
    cmd_isim->add_option("--alpha", ic.alphas, "density grid for A")->required();
    cmd_isim->add_option("--beta", ic.betas, "density grid for B")->required();
    cmd_isim->add_option("--eps", ic.eps, "window half-width in the exponent")->default_val(0.05);
    cmd_isim->add_option("--trials", ic.trials, "trials per cell")->default_val(100);
    cmd_isim->add_option("--seed", ic.master_seed, "master seed")->default_val(0);
    cmd_isim->add_option("--model", ic_model, "uniform | bernoulli | mixture")
        ->check(CLI::IsMember({"uniform", "bernoulli", "mixture"}));
    cmd_isim->add_option("--out", ic_out, "output file prefix");
    cmd_isim->callback([&] {
        ic.model = ic_model == "bernoulli"  ? SubsetModel::Bernoulli
                   : ic_model == "mixture" ? SubsetModel::Mixture
                                           : SubsetModel::Uniform;
        const auto rows = run_intersection_experiment(ic);
        emit(rows, summarize_rows(rows), ic_out);
    });

    // ---- multidim-sim -----------------------------------------------
    auto* cmd_msim =
        app.add_subcommand("multidim-sim", "tuple-set intersection experiment from a JSON config");
    std::string msim_config;
    std::string msim_out;
    cmd_msim->add_option("--config", msim_config, "JSON config file")->required();
    cmd_msim->add_option("--out", msim_out, "output file prefix");
    cmd_msim->callback([&] {
        std::ifstream in(msim_config);
        if (!in) throw std::domain_error("cannot open config: " + msim_config);
        json cfg_json = json::parse(in);

        MultidimConfig cfg;
        cfg.n = cfg_json.at("n").get<std::uint64_t>();
        cfg.k = cfg_json.value("k", 2u);
        cfg.ds = cfg_json.at("d").get<std::vector<double>>();
        cfg.eps = cfg_json.value("eps", 0.05);
        cfg.trials = cfg_json.value("trials", std::uint64_t{100});
        cfg.master_seed = cfg_json.value("seed", std::uint64_t{0});
        const std::string family = cfg_json.value("family", "full");
        if (family == "full") {
            cfg.family.kind = MultidimFamily::Kind::Full;
        } else if (family == "star") {
            cfg.family.kind = MultidimFamily::Kind::Star;
        } else if (family == "random") {
            cfg.family.kind = MultidimFamily::Kind::RandomFixed;
            cfg.family.alpha = cfg_json.at("alpha").get<double>();
            cfg.family.family_seed = cfg_json.value("family_seed", std::uint64_t{0});
        } else if (family == "explicit") {
            cfg.family.kind = MultidimFamily::Kind::Explicit;
            std::vector<Element> flat;
            for (const auto& tuple : cfg_json.at("tuples")) {
                if (tuple.size() != cfg.k)
                    throw std::domain_error("multidim-sim: tuple arity mismatch in config");
                for (const auto& v : tuple) flat.push_back(v.get<Element>());
            }
            cfg.family.explicit_x = TupleSet(UniverseSize(cfg.n), cfg.k, std::move(flat));
        } else {
            throw std::domain_error("multidim-sim: unknown family " + family);
        }

        const MultidimResult result = run_multidim_experiment(cfg);
        json cells = json::array();
        std::vector<SweepRow> rows;
        for (const MultidimCell& cell : result.cells) {
            json jc = row_to_json(cell.row);
            jc["empty_fraction"] = cell.empty_fraction;
            if (!std::isnan(cell.median_nonzero_exponent))
                jc["median_nonzero_exponent"] = cell.median_nonzero_exponent;
            jc["condition"] = {{"d", cell.condition.d},
                               {"alpha", cell.condition.alpha},
                               {"per_i_margin", cell.condition.per_i_margin},
                               {"epsilon0", cell.condition.epsilon0},
                               {"holds", cell.condition.holds}};
            cells.push_back(std::move(jc));
            rows.push_back(cell.row);
        }
        json summary{{"family", family},
                     {"size_x", result.size_x},
                     {"alpha", result.alpha},
                     {"cells", cells}};
        emit(rows, summary, msim_out);
    });

    // ---- words ------------------------------------------------------
    auto* cmd_words = app.add_subcommand("words", "cyclically reduced word utilities");
    cmd_words->require_subcommand(1);

    auto* wc = cmd_words->add_subcommand("count", "exact counts per length");
    unsigned wc_m = 2;
    unsigned wc_ell = 10;
    wc->add_option("--m", wc_m, "number of generators")->required();
    wc->add_option("--ell", wc_ell, "maximum length")->required();
    wc->callback([&] {
        const WordCountTable table = count_cyclically_reduced(wc_m, wc_ell);
        json rows = json::array();
        for (unsigned t = 1; t <= wc_ell; ++t)
            rows.push_back({{"length", t},
                            {"exact", table.exact(t).to_string()},
                            {"cumulative", table.ball(t).to_string()}});
        std::cout << json{{"m", wc_m}, {"counts", rows}}.dump(2) << "\n";
    });

    auto* we = cmd_words->add_subcommand("enumerate", "list words of one length");
    unsigned we_m = 2;
    unsigned we_ell = 3;
    we->add_option("--m", we_m, "number of generators")->required();
    we->add_option("--ell", we_ell, "exact length")->required();
    we->callback([&] {
        for (const Word& w : enumerate_cyclically_reduced(we_m, we_ell))
            std::cout << w.str() << "\n";
    });

    auto* ws = cmd_words->add_subcommand("sample", "uniform words of length at most ell");
    unsigned ws_m = 2;
    unsigned ws_ell = 10;
    std::uint64_t ws_count = 1;
    std::uint64_t ws_seed = 0;
    ws->add_option("--m", ws_m, "number of generators")->required();
    ws->add_option("--ell", ws_ell, "maximum length")->required();
    ws->add_option("--count", ws_count, "number of samples")->default_val(1);
    ws->add_option("--seed", ws_seed, "master seed")->default_val(0);
    ws->callback([&] {
        const WordCountTable table = count_cyclically_reduced(ws_m, ws_ell);
        Rng rng({ws_seed, 0});
        for (std::uint64_t i = 0; i < ws_count; ++i)
            std::cout << sample_cyclically_reduced(table, ws_ell, rng).str() << "\n";
    });

    // ---- group ------------------------------------------------------
    auto* cmd_group = app.add_subcommand("group", "random group presentations");
    cmd_group->require_subcommand(1);

    auto* gc = cmd_group->add_subcommand("check", "C'(lambda) report for a presentation file");
    std::string gc_file;
    double gc_lambda = 1.0 / 6.0;
    gc->add_option("--presentation", gc_file, "file: 'rank m' then one relator per line")
        ->required();
    gc->add_option("--lambda", gc_lambda, "small-cancellation parameter")->default_val(1.0 / 6.0);
    gc->callback([&] {
        const RelatorSet rels = read_presentation(gc_file);
        const PieceReport report = max_piece_ratio(rels);
        const CPrimeResult verdict = satisfies_c_prime(rels, gc_lambda);
        json per_relator = json::array();
        for (std::size_t i = 0; i < rels.relators.size(); ++i)
            per_relator.push_back({{"relator", rels.relators[i].str()},
                                   {"length", rels.relators[i].length()},
                                   {"max_piece_length", report.max_piece_length[i]},
                                   {"max_ratio", report.max_ratio[i]}});
        json out{{"rank", rels.rank},
                 {"lambda", gc_lambda},
                 {"satisfies_c_prime", verdict.satisfies},
                 {"global_max_ratio", report.global_max_ratio},
                 {"relators", per_relator}};
        if (report.witness) {
            out["max_piece"] = {{"letters", letters_to_string(report.witness->piece)},
                                {"first", occurrence_json(report.witness->first)},
                                {"second", occurrence_json(report.witness->second)}};
        }
        if (verdict.witness) {
            out["violation"] = {{"letters", letters_to_string(verdict.witness->piece)},
                                {"first", occurrence_json(verdict.witness->first)},
                                {"second", occurrence_json(verdict.witness->second)}};
        }
        std::cout << out.dump(2) << "\n";
    });

    auto* gs = cmd_group->add_subcommand("sweep", "C'(lambda) probability over a density grid");
    GroupSweepConfig gcfg;
    std::string gs_out;
    gs->add_option("--m", gcfg.m, "number of generators")->default_val(2);
    gs->add_option("--ell", gcfg.ell, "maximum relator length")->required();
    gs->add_option("--lambda", gcfg.lambda, "small-cancellation parameter")->required();
    gs->add_option("--d", gcfg.ds, "density grid")->required();
    gs->add_option("--trials", gcfg.trials, "trials per cell")->default_val(20);
    gs->add_option("--seed", gcfg.master_seed, "master seed")->default_val(0);
    gs->add_option("--max-relators", gcfg.max_relators, "guard on |B_ell|^d")
        ->default_val(5000000);
    gs->add_option("--out", gs_out, "output file prefix");
    gs->callback([&] {
        const GroupSweepResult result = run_group_sweep(gcfg);
        json summary = summarize_rows(result.rows);
        summary["warnings"] = result.warnings;
        for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
        emit(result.rows, summary, gs_out);
    });

    auto* gt = cmd_group->add_subcommand("trivialize",
                                         "per-generator trivializing pairs over a density grid");
    TrivializationConfig tcfg;
    std::string gt_out;
    gt->add_option("--m", tcfg.m, "number of generators")->default_val(2);
    gt->add_option("--ell", tcfg.ell, "maximum relator length")->required();
    gt->add_option("--d", tcfg.ds, "density grid")->required();
    gt->add_option("--trials", tcfg.trials, "trials per cell")->default_val(20);
    gt->add_option("--seed", tcfg.master_seed, "master seed")->default_val(0);
    gt->add_option("--max-relators", tcfg.max_relators, "guard on |B_ell|^d")
        ->default_val(5000000);
    gt->add_option("--out", gt_out, "output file prefix");
    gt->callback([&] {
        const GroupSweepResult result = run_trivialization_sweep(tcfg);
        json summary = summarize_rows(result.rows);
        summary["warnings"] = result.warnings;
        for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
        emit(result.rows, summary, gt_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
