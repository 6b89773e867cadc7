#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liuppa/registry.hpp"

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string trimmed = liuppa::detail::trim(line);
        if (!trimmed.empty() && trimmed[0] != '#') lines.push_back(trimmed);
    }
    return lines;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::string format_score(double score) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << score;
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"liuppa - two-level hybrid string similarity toolkit"};
    app.require_subcommand(1);

    // score <metric> <s1> <s2>
    auto* score_cmd = app.add_subcommand("score", "Score one pair of strings");
    std::string metric_spec, s1, s2;
    score_cmd->add_option("metric", metric_spec, "Metric selector, e.g. liuppa:1,1 or jarowinkler")
        ->required();
    score_cmd->add_option("s1", s1)->required();
    score_cmd->add_option("s2", s2)->required();

    // eval --dataset F (--metric M | --all)
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate metrics on a labeled pairs file");
    std::string dataset_path, eval_metric;
    bool eval_all = false;
    eval_cmd->add_option("--dataset", dataset_path, "TSV file: s1<TAB>s2<TAB>{1|0}")->required();
    auto* metric_opt = eval_cmd->add_option("--metric", eval_metric, "Single metric selector");
    eval_cmd->add_flag("--all", eval_all, "Evaluate all 81 hybrid configurations and 13 baselines")
        ->excludes(metric_opt);

    // calibrate --tokens F --mu1 CODE
    auto* cal_cmd = app.add_subcommand("calibrate", "Pick a token threshold from judged token pairs");
    std::string tokens_path;
    int mu1_code = 1;
    cal_cmd->add_option("--tokens", tokens_path, "TSV file: token1<TAB>token2<TAB>{1|0}")->required();
    cal_cmd->add_option("--mu1", mu1_code, "Token-level metric code (1..9)")->required();

    // pairs --records F --out F
    auto* pairs_cmd = app.add_subcommand("pairs", "Generate candidate pairs from records by blocking");
    std::string records_path, pairs_out;
    pairs_cmd->add_option("--records", records_path, "TSV file: id<TAB>text")->required();
    pairs_cmd->add_option("--out", pairs_out, "Output pairs TSV")->required();

    // align --terms F --labels F --metric M --threshold T --out F
    auto* align_cmd = app.add_subcommand("align", "Align lexicon terms against ontology labels");
    std::string terms_path, labels_path, align_metric, align_out;
    double threshold = 0.5;
    align_cmd->add_option("--terms", terms_path, "Terms, one per line")->required();
    align_cmd->add_option("--labels", labels_path, "Labels, one per line")->required();
    align_cmd->add_option("--metric", align_metric, "Metric selector")->required();
    align_cmd->add_option("--threshold", threshold, "Minimum score to report")->required();
    align_cmd->add_option("--out", align_out, "Output TSV: term<TAB>label<TAB>score")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (score_cmd->parsed()) {
        // For TFIDF-family metrics the corpus is just the two strings.
        const liuppa::CorpusStats stats = liuppa::CorpusStats::build({s1, s2});
        const auto metric = liuppa::make_metric(metric_spec, stats);
        std::cout << format_score(metric(s1, s2)) << "\n";
    } else if (eval_cmd->parsed()) {
        if (!eval_all && eval_metric.empty()) {
            std::cerr << "eval: one of --metric or --all is required\n";
            return 1;
        }
        const liuppa::PairDataset dataset = liuppa::load_pairs(dataset_path);
        const liuppa::CorpusStats stats = liuppa::corpus_from_dataset(dataset);
        std::vector<liuppa::NamedMetric> metrics;
        if (eval_all) {
            metrics = liuppa::all_metrics(stats);
        } else {
            metrics.push_back({eval_metric, liuppa::make_metric(eval_metric, stats)});
        }
        std::cout << liuppa::render_report(liuppa::rank_metrics(metrics, dataset));
    } else if (cal_cmd->parsed()) {
        const liuppa::PairDataset judged = liuppa::load_pairs(tokens_path);
        std::vector<liuppa::TokenPairJudgment> pairs;
        pairs.reserve(judged.pairs.size());
        for (const auto& p : judged.pairs) pairs.push_back({p.s1, p.s2, p.correct});
        const double eps = liuppa::calibrate_epsilon(pairs, mu1_code);
        std::cout << std::fixed << std::setprecision(2) << eps << "\n";
    } else if (pairs_cmd->parsed()) {
        std::vector<std::pair<std::string, std::string>> records;
        for (const auto& line : read_lines(records_path)) {
            const auto fields = liuppa::detail::split_tabs(line);
            if (fields.size() != 2) {
                throw std::runtime_error(records_path + ": expected id<TAB>text: " + line);
            }
            records.emplace_back(liuppa::detail::trim(fields[0]), liuppa::detail::trim(fields[1]));
        }
        const liuppa::PairDataset dataset = liuppa::generate_pairs_from_records(records);
        std::ostringstream out;
        for (const auto& p : dataset.pairs) {
            out << p.s1 << "\t" << p.s2 << "\t" << (p.correct ? 1 : 0) << "\n";
        }
        write_file(pairs_out, out.str());
        std::cout << dataset.n() << " pairs (" << dataset.m() << " correct)\n";
    } else if (align_cmd->parsed()) {
        const auto terms = read_lines(terms_path);
        const auto labels = read_lines(labels_path);
        std::vector<std::string> docs = terms;
        docs.insert(docs.end(), labels.begin(), labels.end());
        const liuppa::CorpusStats stats = liuppa::CorpusStats::build(docs);
        const auto metric = liuppa::make_metric(align_metric, stats);
        const auto alignments = liuppa::align_lexicon(terms, labels, metric, threshold);
        std::ostringstream out;
        for (const auto& a : alignments) {
            out << a.term << "\t" << a.label << "\t" << format_score(a.score) << "\n";
        }
        write_file(align_out, out.str());
        std::cout << alignments.size() << " alignments\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
