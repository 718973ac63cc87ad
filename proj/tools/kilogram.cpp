// kilogram: command-line front end for the corpus, metric, sampling,
// reference-game, statistics, geometry and service modules.

#include <CLI11.hpp>

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "kilogram/corpus/io.hpp"
#include "kilogram/corpus/sets.hpp"
#include "kilogram/corpus/stats.hpp"
#include "kilogram/geometry/composition.hpp"
#include "kilogram/geometry/svg.hpp"
#include "kilogram/geometry/tangram.hpp"
#include "kilogram/metrics/divergence.hpp"
#include "kilogram/metrics/errors.hpp"
#include "kilogram/metrics/perplexity.hpp"
#include "kilogram/metrics/psa.hpp"
#include "kilogram/refgames/contrastive.hpp"
#include "kilogram/refgames/io.hpp"
#include "kilogram/refgames/scoring.hpp"
#include "kilogram/sampling/dense.hpp"
#include "kilogram/service/http.hpp"
#include "kilogram/stats/correlation.hpp"
#include "kilogram/stats/gmm.hpp"
#include "kilogram/text/normalize.hpp"

namespace kg = kilogram;
namespace fs = std::filesystem;

namespace {

struct CorpusArgs {
    std::string corpus;
    std::string denseIds;
    std::string set = "full";
    std::uint64_t seed = 0;
};

void add_corpus_options(CLI::App* cmd, CorpusArgs& a, bool withSet = true) {
    cmd->add_option("--corpus", a.corpus, "annotation corpus (JSON lines)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--dense-ids", a.denseIds, "ids of densely annotated tangrams, one per line")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", a.seed, "seed for sampled analysis sets");
    if (withSet) cmd->add_option("--set", a.set, "full, dense, dense10, or a corpus file used as one set");
}

std::vector<std::string> dense_ids(const CorpusArgs& a) {
    return a.denseIds.empty() ? std::vector<std::string>{} : kg::corpus::read_id_list_file(a.denseIds);
}

kg::corpus::AnalysisSet set_from_annotations(const std::string& name, std::vector<kg::corpus::Annotation> anns) {
    kg::corpus::AnalysisSet set(name);
    for (auto& a : anns) set.add(std::move(a));
    return set;
}

kg::corpus::AnalysisSet load_set(const CorpusArgs& a, const std::string& which) {
    if (which != "full" && which != "dense" && which != "dense10") {
        if (!fs::exists(which)) throw std::invalid_argument("unknown set " + which);
        return set_from_annotations(which, kg::corpus::read_corpus_file(which));
    }
    auto sets = kg::corpus::build_analysis_sets(kg::corpus::read_corpus_file(a.corpus), dense_ids(a), a.seed);
    if (which == "dense") return sets.dense;
    if (which == "dense10") return sets.dense10;
    return sets.full;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

void print_mean_sd(std::ostream& out, const std::string& label, const kg::corpus::MeanSd& m) {
    out << label << '\t' << m.mean << '\t' << m.sd << '\t' << m.n << '\n';
}

// ---- corpus ---------------------------------------------------------------

int corpus_stats(const CorpusArgs& a) {
    const auto set = load_set(a, a.set);
    const auto s = kg::corpus::dataset_stats(set);
    std::cout << "# set=" << a.set << " pipeline=\"" << kg::text::pipeline_description() << "\"\n";
    std::cout << "statistic\tmean\tsd\tn\n";
    std::cout << std::fixed << std::setprecision(4);
    std::cout << "tangrams\t" << s.tangrams << "\t\t\n";
    std::cout << "annotations\t" << s.annotations << "\t\t\n";
    print_mean_sd(std::cout, "wholeLength", s.wholeLength);
    print_mean_sd(std::cout, "partLength", s.partLength);
    print_mean_sd(std::cout, "partsPerShape", s.partsPerShape);
    print_mean_sd(std::cout, "piecesPerPart", s.piecesPerPart);
    std::cout << "wholeVocabulary\t" << s.wholeVocabulary << "\t\t\n";
    std::cout << "partVocabulary\t" << s.partVocabulary << "\t\t\n";
    std::cout << "overallVocabulary\t" << s.overallVocabulary << "\t\t\n";
    return 0;
}

int corpus_split(const CorpusArgs& a, const std::string& idsFile) {
    std::vector<std::string> ids;
    if (!idsFile.empty()) {
        ids = kg::corpus::read_id_list_file(idsFile);
    } else {
        std::set<std::string> seen;
        for (const auto& ann : kg::corpus::read_corpus_file(a.corpus)) seen.insert(ann.tangramId);
        ids.assign(seen.begin(), seen.end());
    }
    const auto split = kg::corpus::build_splits(ids, dense_ids(a), a.seed);
    std::cout << "# seed=" << a.seed << " train=" << split.train.size() << " dev=" << split.dev.size()
              << " test=" << split.test.size() << " test-dense=" << split.testDense.size() << "\n";
    std::cout << "tangramId\tsplit\n";
    std::set<std::string> all(ids.begin(), ids.end());
    for (const auto& id : all) std::cout << id << '\t' << split.split_of(id) << '\n';
    return 0;
}

int corpus_sets(const CorpusArgs& a, const std::string& outDir) {
    auto sets = kg::corpus::build_analysis_sets(kg::corpus::read_corpus_file(a.corpus), dense_ids(a), a.seed);
    fs::create_directories(outDir);
    for (const auto* set : {&sets.full, &sets.dense, &sets.dense10}) {
        std::vector<kg::corpus::Annotation> anns;
        for (const auto& [id, list] : set->members()) anns.insert(anns.end(), list.begin(), list.end());
        const fs::path path = fs::path(outDir) / (set->name() + ".jsonl");
        std::ofstream out(path);
        kg::corpus::write_corpus(out, anns);
        std::cout << set->name() << '\t' << set->tangram_count() << " tangrams\t" << anns.size() << " annotations\t"
                  << path.string() << '\n';
    }
    return 0;
}

// ---- metrics --------------------------------------------------------------

int metrics_run(const std::string& metric, const CorpusArgs& a, double k) {
    const auto set = load_set(a, a.set);
    kg::metrics::PerplexityParams params;
    params.k = k;
    if (metric == "ppl") {
        params.vocabularySize = std::max<std::size_t>(1, kg::metrics::whole_vocabulary_size(set));
        params.check();
    }
    std::cout << "# metric=" << metric << " set=" << a.set << " stopwords=" << kg::text::stopword_hash()
              << " k=" << k;
    if (metric == "ppl") std::cout << " V=" << params.vocabularySize;
    std::cout << "\n";
    std::cout << "tangramId\t" << metric << '\n';
    std::vector<double> values;
    std::size_t undefined = 0;
    std::cout << std::setprecision(6);
    for (const auto& [id, anns] : set.members()) {
        try {
            double v = 0.0;
            if (metric == "snd") v = kg::metrics::snd(anns).value;
            else if (metric == "pnd") v = kg::metrics::pnd(anns).value;
            else if (metric == "psa") v = kg::metrics::psa(anns).value;
            else v = kg::metrics::log_perplexity(anns, params).value;
            values.push_back(v);
            std::cout << id << '\t' << v << '\n';
        } catch (const kg::metrics::MetricUndefined& e) {
            ++undefined;
            std::cout << id << "\tNA\n";
        }
    }
    const auto m = kg::corpus::mean_sd(values);
    std::cout << "# mean=" << m.mean << " sd=" << m.sd << " n=" << m.n << " undefined=" << undefined << '\n';
    return 0;
}

// ---- sampling -------------------------------------------------------------

int sample_dense(const CorpusArgs& a, const kg::sampling::DenseSampleOptions& opts, double k) {
    const auto set = load_set(a, a.set);
    kg::metrics::PerplexityParams params;
    params.k = k;
    params.vocabularySize = std::max<std::size_t>(1, kg::metrics::whole_vocabulary_size(set));
    const auto plane = kg::sampling::build_plane(set, params);
    for (const auto& id : plane.excluded) std::cerr << "warning: " << id << " has undefined metrics, excluded\n";
    const auto s = kg::sampling::dense_sample(plane.points, opts);
    std::cout << "# seed=" << opts.seed << " points=" << plane.points.size() << " hull=" << s.hullSize
              << " hullLayers=" << s.hullLayers << " occupiedCells=" << s.occupiedCells << " bounds=[" << s.bounds.minX
              << "," << s.bounds.maxX << "]x[" << s.bounds.minY << "," << s.bounds.maxY << "]\n";
    for (const auto& id : s.periphery) std::cout << id << "\tperiphery\n";
    for (const auto& id : s.uniform) std::cout << id << "\tuniform\n";
    for (const auto& id : s.grid) std::cout << id << "\tgrid\n";
    return 0;
}

// ---- games ----------------------------------------------------------------

struct GameArgs {
    std::string targets;
    std::string pool;
    std::string condition = "parts+color";
    std::size_t k = kg::refgames::kDefaultContextSize;
    std::uint64_t seed = 0;
    std::string constraints = "on";
    std::string out;
};

void add_game_options(CLI::App* cmd, GameArgs& g, bool withCondition) {
    cmd->add_option("--targets", g.targets, "corpus file; one game per annotation")->required()->check(CLI::ExistingFile);
    cmd->add_option("--pool", g.pool, "corpus file distractors come from (default: the targets)")
        ->check(CLI::ExistingFile);
    if (withCondition) cmd->add_option("--condition", g.condition, "whole|parts + black|color [+aug]");
    cmd->add_option("--k", g.k, "context size");
    cmd->add_option("--seed", g.seed, "generation seed");
    cmd->add_option("--constraints", g.constraints, "on|off")->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--out", g.out, "games file (default stdout)");
}

int games_generate(const GameArgs& g, const std::string& condition) {
    const auto targets = set_from_annotations("targets", kg::corpus::read_corpus_file(g.targets));
    const auto poolSet =
        g.pool.empty() ? targets : set_from_annotations("pool", kg::corpus::read_corpus_file(g.pool));
    const kg::refgames::GamePool pool(poolSet);
    kg::refgames::GenerateOptions opts;
    opts.k = g.k;
    opts.constraints = g.constraints == "on";
    const auto games =
        kg::refgames::generate_games(targets, pool, kg::refgames::Condition::parse(condition), opts, g.seed);
    std::ofstream file;
    std::ostream& out = open_out(g.out, file);
    out << "# condition=" << condition << " k=" << g.k << " seed=" << g.seed << " constraints=" << g.constraints
        << '\n';
    kg::refgames::write_games(out, games);
    std::cerr << games.size() << " games\n";
    return 0;
}

int games_score(const std::string& gamesFile, const std::vector<std::string>& scoreFiles, bool curves,
                std::uint64_t seed) {
    const auto games = kg::refgames::read_games_file(gamesFile);
    std::vector<kg::refgames::ScoreTable> tables;
    for (const auto& f : scoreFiles) tables.push_back(kg::refgames::read_score_table_file(f));
    const auto table = tables.size() == 1 ? tables.front() : kg::refgames::ensemble_scores(tables);
    const auto report = kg::refgames::score_games(games, table);
    std::cout << "# scores=" << report.scoreScale << " games=" << report.games.size() << '\n';
    std::cout << std::setprecision(6);
    if (curves) {
        std::cout << "totalParts\tincludedParts\tgames\tmeanProbability\tlower\tupper\n";
        for (const auto& p : kg::refgames::part_curves(games, table, 1000, seed)) {
            std::cout << p.totalParts << '\t' << p.includedParts << '\t' << p.games << '\t'
                      << p.meanProbability.estimate << '\t' << p.meanProbability.lower << '\t'
                      << p.meanProbability.upper << '\n';
        }
        return 0;
    }
    std::cout << "gameId\tpredicted\tcorrect\ttied\tprobabilityCorrect\n";
    for (const auto& o : report.games) {
        std::cout << o.gameId << '\t' << o.predicted << '\t' << o.correct << '\t' << o.tied << '\t'
                  << o.probabilityCorrect << '\n';
    }
    std::cout << "# accuracy=" << report.accuracy << " meanProbabilityCorrect=" << report.meanProbabilityCorrect
              << " ties=" << report.ties << '\n';
    return 0;
}

int games_export(const std::string& gamesFile, const std::string& outPath) {
    const auto batches = kg::refgames::export_contrastive_matrix(kg::refgames::read_games_file(gamesFile));
    std::ofstream file;
    kg::refgames::write_contrastive(open_out(outPath, file), batches);
    std::cerr << batches.size() << " batches, " << 2 * batches.size() << " directional games\n";
    return 0;
}

// ---- stats ----------------------------------------------------------------

std::vector<std::vector<double>> read_columns(const std::string& path, std::size_t columns) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<double>> cols(columns);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.empty() || line[0] == '#') continue;
        for (char& c : line) {
            if (c == ',' || c == '\t') c = ' ';
        }
        std::istringstream ss(line);
        std::vector<double> row;
        std::string cell;
        while (ss >> cell) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                row.clear();
                break;
            }
        }
        if (row.empty() && n == 1) continue;  // header
        if (row.size() < columns) throw std::runtime_error(path + ":" + std::to_string(n) + ": expected numbers");
        for (std::size_t c = 0; c < columns; ++c) cols[c].push_back(row[c]);
    }
    return cols;
}

int stats_corr(const std::string& path) {
    const auto cols = read_columns(path, 2);
    std::cout << std::setprecision(6) << "n\t" << cols[0].size() << "\npearson\t" << kg::stats::pearson(cols[0], cols[1])
              << "\nspearman\t" << kg::stats::spearman(cols[0], cols[1]) << '\n';
    return 0;
}

int stats_gmm(const std::string& path, std::uint64_t seed) {
    const auto cols = read_columns(path, 1);
    kg::stats::GmmOptions opts;
    opts.seed = seed;
    const auto fit = kg::stats::gmm2_fit(cols[0], opts);
    std::cout << std::setprecision(6) << "component\tmean\tsd\tweight\n";
    for (int c = 0; c < 2; ++c) {
        std::cout << c << '\t' << fit.means[c] << '\t' << std::sqrt(fit.variances[c]) << '\t' << fit.weights[c] << '\n';
    }
    std::cout << "# logLikelihood=" << fit.logLikelihood << " iterations=" << fit.iterations
              << " converged=" << fit.converged << '\n';
    return 0;
}

// ---- geometry -------------------------------------------------------------

int geometry_validate(const std::vector<std::string>& files, bool lenient) {
    int bad = 0;
    for (const auto& f : files) {
        try {
            const auto t = kg::geometry::load_composition_file(
                f, lenient ? kg::geometry::ParseMode::Lenient : kg::geometry::ParseMode::Strict);
            const auto report = kg::geometry::validate_tangram(t);
            if (report.ok()) {
                std::cout << f << "\tok\tarea=" << kg::geometry::silhouette_area(t).str() << '\n';
            } else {
                ++bad;
                for (const auto& v : report.violations) std::cout << f << "\tinvalid\t" << v.message << '\n';
            }
            for (const auto& w : report.warnings) std::cout << f << "\twarning\t" << w << '\n';
        } catch (const kg::geometry::CompositionError& e) {
            ++bad;
            std::cout << f << "\trejected\t" << e.what() << '\n';
        }
    }
    return bad ? 1 : 0;
}

int geometry_render(const std::string& file, const std::string& colors, const std::string& outPath) {
    const auto t = kg::geometry::load_composition_file(file);
    auto map = kg::geometry::all_black(t);
    std::stringstream ss(colors);
    std::string entry;
    while (std::getline(ss, entry, ',')) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("colors are piece:color pairs");
        map[std::stoi(entry.substr(0, colon))] = entry.substr(colon + 1);
    }
    std::ofstream f;
    open_out(outPath, f) << kg::geometry::render_svg(t, map);
    return 0;
}

// ---- serve ----------------------------------------------------------------

kg::service::HttpServer* g_server = nullptr;

void on_signal(int) {
    if (g_server) g_server->stop();
}

int serve(const std::string& configPath) {
    const auto config = kg::service::load_config(configPath);
    auto app = kg::service::make_app(config);
    kg::service::HttpServer server(*app);
    const int port = server.bind(config.host, config.port);
    if (port < 0) throw std::runtime_error("cannot bind " + config.host + ":" + std::to_string(config.port));
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cerr << "listening on " << config.host << ':' << port << '\n';
    server.listen();
    g_server = nullptr;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KiloGram tangram annotation and reference-game toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // corpus
    auto* corpus = app.add_subcommand("corpus", "corpus statistics, splits and analysis sets")->require_subcommand(1);
    CorpusArgs cstats, csplit, csets;
    std::string idsFile, outDir = "sets";
    auto* cs = corpus->add_subcommand("stats", "length and vocabulary statistics");
    add_corpus_options(cs, cstats);
    cs->callback([&] { rc = corpus_stats(cstats); });
    auto* sp = corpus->add_subcommand("split", "train/dev/test/test-dense split");
    add_corpus_options(sp, csplit, false);
    sp->add_option("--ids", idsFile, "tangram ids (default: those in the corpus)")->check(CLI::ExistingFile);
    sp->callback([&] { rc = corpus_split(csplit, idsFile); });
    auto* st = corpus->add_subcommand("sets", "write the Full, Dense and Dense10 analysis sets");
    add_corpus_options(st, csets, false);
    st->add_option("--out-dir", outDir, "output directory");
    st->callback([&] { rc = corpus_sets(csets, outDir); });

    // metrics
    auto* metrics = app.add_subcommand("metrics", "per-tangram agreement metrics")->require_subcommand(1);
    CorpusArgs margs[4];
    double mk = 0.01;
    const char* names[4] = {"snd", "pnd", "psa", "ppl"};
    for (int i = 0; i < 4; ++i) {
        auto* m = metrics->add_subcommand(names[i]);
        add_corpus_options(m, margs[i]);
        if (i == 3) m->add_option("--k", mk, "additive smoothing");
        m->callback([&, i] { rc = metrics_run(names[i], margs[i], mk); });
    }

    // sample
    auto* sample = app.add_subcommand("sample", "tangram sampling")->require_subcommand(1);
    CorpusArgs sargs;
    kg::sampling::DenseSampleOptions sopts;
    double sk = 0.01;
    auto* dense = sample->add_subcommand("dense", "periphery/uniform/grid sample on the perplexity-PSA plane");
    add_corpus_options(dense, sargs);
    dense->add_option("--periphery", sopts.periphery);
    dense->add_option("--uniform", sopts.uniform);
    dense->add_option("--grid", sopts.grid);
    dense->add_option("--k", sk, "perplexity smoothing");
    dense->callback([&] {
        sopts.seed = sargs.seed;
        rc = sample_dense(sargs, sopts, sk);
    });

    // games
    auto* games = app.add_subcommand("games", "reference games")->require_subcommand(1);
    GameArgs gen, aug;
    auto* gg = games->add_subcommand("generate", "one game per target annotation");
    add_game_options(gg, gen, true);
    gg->callback([&] { rc = games_generate(gen, gen.condition); });
    auto* ga = games->add_subcommand("augment", "part-subset augmented parts+color games");
    add_game_options(ga, aug, false);
    ga->callback([&] { rc = games_generate(aug, "parts+color+aug"); });
    std::string gamesFile, contrastiveOut;
    std::vector<std::string> scoreFiles;
    bool curves = false;
    std::uint64_t scoreSeed = 0;
    auto* gs = games->add_subcommand("score", "evaluate games against score tables (several: ensembled)");
    gs->add_option("--games", gamesFile)->required()->check(CLI::ExistingFile);
    gs->add_option("--scores", scoreFiles, "gameId/itemIndex/score table")->required()->check(CLI::ExistingFile);
    gs->add_flag("--curves", curves, "probability of correct by included parts");
    gs->add_option("--seed", scoreSeed, "bootstrap seed for --curves");
    gs->callback([&] { rc = games_score(gamesFile, scoreFiles, curves, scoreSeed); });
    auto* gx = games->add_subcommand("export-contrastive", "k x k text/image matrices");
    gx->add_option("--games", gamesFile)->required()->check(CLI::ExistingFile);
    gx->add_option("--out", contrastiveOut);
    gx->callback([&] { rc = games_export(gamesFile, contrastiveOut); });

    // stats
    auto* stats = app.add_subcommand("stats", "statistics on delimited numeric input")->require_subcommand(1);
    std::string corrFile, gmmFile;
    std::uint64_t gmmSeed = 0;
    auto* corr = stats->add_subcommand("corr", "Pearson and Spearman correlation of two columns");
    corr->add_option("input", corrFile)->required()->check(CLI::ExistingFile);
    corr->callback([&] { rc = stats_corr(corrFile); });
    auto* gmm = stats->add_subcommand("gmm", "two-component Gaussian mixture of one column");
    gmm->add_option("input", gmmFile)->required()->check(CLI::ExistingFile);
    gmm->add_option("--seed", gmmSeed);
    gmm->callback([&] { rc = stats_gmm(gmmFile, gmmSeed); });

    // geometry
    auto* geometry = app.add_subcommand("geometry", "tangram compositions")->require_subcommand(1);
    std::vector<std::string> compFiles;
    bool lenient = false;
    auto* gv = geometry->add_subcommand("validate", "check compositions");
    gv->add_option("files", compFiles)->required()->check(CLI::ExistingFile);
    gv->add_flag("--lenient", lenient, "parse loosely and report every rule violation");
    gv->callback([&] { rc = geometry_validate(compFiles, lenient); });
    std::string renderFile, renderColors, renderOut;
    auto* gr = geometry->add_subcommand("render", "write an SVG");
    gr->add_option("file", renderFile)->required()->check(CLI::ExistingFile);
    gr->add_option("--colors", renderColors, "piece:color pairs, e.g. 1:coral,2:gold");
    gr->add_option("--out", renderOut);
    gr->callback([&] { rc = geometry_render(renderFile, renderColors, renderOut); });

    // serve
    std::string configPath;
    auto* sv = app.add_subcommand("serve", "run the annotation and trial HTTP service");
    sv->add_option("--config", configPath)->required()->check(CLI::ExistingFile);
    sv->callback([&] { rc = serve(configPath); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
