#include "invgraph/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "invgraph/census.hpp"
#include "invgraph/fulvene.hpp"
#include "invgraph/io.hpp"

namespace invgraph::cli {

namespace {

double rounded(double v, int precision) {
    const double scale = std::pow(10.0, precision);
    const double r = std::round(v * scale) / scale;
    return r == 0.0 ? 0.0 : r; // avoid -0
}

nlohmann::json spectrum_json(const std::vector<double>& values, int precision) {
    nlohmann::json arr = nlohmann::json::array();
    for (double v : values) arr.push_back(rounded(v, precision));
    return arr;
}

std::string format_double(double v, int precision) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision) << rounded(v, precision);
    return os.str();
}

nlohmann::json int_matrix_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json signature_json(const Signature& sig) {
    nlohmann::json arr = nlohmann::json::array();
    for (int d : sig.d) arr.push_back(d);
    return arr;
}

BridgeSpec parse_pairs(const std::string& text) {
    BridgeSpec spec;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw InvalidSpec("--pairs: expected \"a:b,a:b,...\"");
        const long long a = std::stoll(token.substr(0, colon));
        const long long b = std::stoll(token.substr(colon + 1));
        if (a < 1 || b < 1) throw InvalidSpec("--pairs: vertices are 1-based");
        spec.pairs.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
    }
    if (spec.pairs.empty()) throw InvalidSpec("--pairs: no pairs given");
    return spec;
}

nlohmann::json bridgeable_json(
    const std::map<std::size_t, std::vector<std::vector<std::size_t>>>& bridgeable) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, subsets] : bridgeable) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& s : subsets) list.push_back(s);
        out[std::to_string(k)] = std::move(list);
    }
    return out;
}

nlohmann::json classification_json(const Classification& cls, int /*precision*/) {
    nlohmann::json out{{"schema", 1}, {"class", to_string(cls.cls)}};
    out["det"] = cls.determinant.str();
    if (cls.positive_signature)
        out["signature"] = signature_json(*cls.positive_signature);
    else if (cls.negative_signature)
        out["signature"] = signature_json(*cls.negative_signature);
    if (cls.cls == InvertibilityClass::positive_and_negative)
        out["negative_signature"] = signature_json(*cls.negative_signature);
    return out;
}

struct CensusOutput {
    std::vector<CensusRecord> records;
    TableReport report;
};

nlohmann::json census_record_json(const CensusRecord& rec, const std::string& label,
                                  int precision) {
    return nlohmann::json{{"label", label},
                          {"class", to_string(rec.cls)},
                          {"spectrum", spectrum_json(rec.spectrum.eigenvalues, precision)},
                          {"bridgeable", bridgeable_json(rec.bridgeable)},
                          {"subset_counts", rec.subset_counts},
                          {"graph", graph_to_json(rec.graph)}};
}

std::string census_tsv(const CensusOutput& c, int precision) {
    // reference label order (H_1 .. H_20)
    std::ostringstream os;
    os << "label\tclass\tspectrum\n";
    std::map<std::string, std::size_t> by_label;
    for (const auto& m : c.report.matches) by_label[m.label] = m.record_index;
    for (const auto& row : reference_rows(c.records.front().graph.vertex_count())) {
        const CensusRecord& rec = c.records[by_label.at(row.label)];
        os << row.label << "\t" << to_string(rec.cls) << "\t";
        for (std::size_t i = 0; i < rec.spectrum.eigenvalues.size(); ++i) {
            if (i) os << " ";
            os << format_double(rec.spectrum.eigenvalues[i], precision);
        }
        os << "\n";
    }
    return os.str();
}

void write_census_dir(const CensusOutput& c, const std::string& dir, int precision) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    {
        std::ofstream t1(fs::path(dir) / "table1.tsv");
        t1 << census_tsv(c, precision);
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& m : c.report.matches) {
        const CensusRecord& rec = c.records[m.record_index];
        rows.push_back(nlohmann::json{{"label", m.label},
                                      {"bridgeable", bridgeable_json(rec.bridgeable)},
                                      {"counts", rec.subset_counts}});
        std::ofstream gf(fs::path(dir) / (m.label + ".json"));
        gf << graph_to_json(rec.graph).dump(2) << "\n";
    }
    std::ofstream t2(fs::path(dir) / "table2.json");
    t2 << nlohmann::json{{"schema", 1}, {"rows", rows}}.dump(2) << "\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"invertible-graph toolkit: exact inversion, bridging, spectra"};
    app.require_subcommand(1);

    int precision = 4;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--precision", precision, "decimals for numeric output")
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads for enumeration")
        ->capture_default_str();

    std::string graph_path, left_path, right_path, pairs_text, out_dir, format = "json";
    std::size_t census_m = 6;
    std::size_t fulvene_n = 0;
    bool fulvene_verify = false;

    auto* cmd_classify = app.add_subcommand("classify", "invertibility class of a graph");
    cmd_classify->add_option("graph", graph_path, "graph file (json or edge list)")
        ->required();

    auto* cmd_invert = app.add_subcommand("invert", "positive/negative inverse graph");
    cmd_invert->add_option("graph", graph_path)->required();

    auto* cmd_spectrum = app.add_subcommand("spectrum", "adjacency eigenvalues");
    cmd_spectrum->add_option("graph", graph_path)->required();

    auto* cmd_bridge = app.add_subcommand("bridge", "bridge two graphs and report");
    cmd_bridge->add_option("--left", left_path)->required();
    cmd_bridge->add_option("--right", right_path)->required();
    cmd_bridge->add_option("--pairs", pairs_text, "bridge pairs, e.g. \"3:1,4:2\"")
        ->required();

    auto* cmd_bound = app.add_subcommand("bound", "least-positive-eigenvalue lower bound");
    cmd_bound->add_option("--left", left_path)->required();
    cmd_bound->add_option("--right", right_path)->required();
    cmd_bound->add_option("--pairs", pairs_text)->required();

    auto* cmd_census = app.add_subcommand("census", "unique-1-factor census");
    cmd_census->add_option("--m", census_m, "vertex count (2, 4 or 6)")
        ->capture_default_str();
    cmd_census->add_option("--format", format, "json or tsv")->capture_default_str();
    cmd_census->add_option("--out", out_dir, "directory for table1.tsv, table2.json, graphs");

    auto* cmd_fulvene = app.add_subcommand("fulvene", "fulvene family generation");
    bool fulvene_dot = false;
    cmd_fulvene->add_option("--n", fulvene_n, "generation index")->required();
    cmd_fulvene->add_flag("--verify", fulvene_verify, "attach the family verification report");
    cmd_fulvene->add_flag("--dot", fulvene_dot, "emit DOT instead of JSON");

    auto* cmd_dot = app.add_subcommand("export-dot", "DOT rendering of a graph");
    cmd_dot->add_option("graph", graph_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (cmd_classify->parsed()) {
            const Graph g = read_graph_file(graph_path);
            out << classification_json(classify_details(g), precision).dump() << "\n";
        } else if (cmd_invert->parsed()) {
            const Graph g = read_graph_file(graph_path);
            const InverseGraphResult res = inverse_graph(g);
            out << nlohmann::json{{"schema", 1},
                                  {"sign", res.sign == InverseSign::positive ? "positive"
                                                                             : "negative"},
                                  {"signature", signature_json(res.signature)},
                                  {"inverse", graph_to_json(res.inverse)}}
                       .dump()
                << "\n";
        } else if (cmd_spectrum->parsed()) {
            const Graph g = read_graph_file(graph_path);
            out << nlohmann::json{{"schema", 1},
                                  {"eigenvalues",
                                   spectrum_json(spectrum_of(g).eigenvalues, precision)}}
                       .dump()
                << "\n";
        } else if (cmd_bridge->parsed()) {
            const Graph ga = read_graph_file(left_path);
            const Graph gb = read_graph_file(right_path);
            const BridgeSpec spec = parse_pairs(pairs_text);
            const BridgeReport report = check_invertibility_conditions(ga, gb, spec);
            nlohmann::json rj{{"condition", to_string(report.condition)},
                              {"integrally_invertible", report.integrally_invertible},
                              {"P", int_matrix_json(report.p)},
                              {"R", int_matrix_json(report.r)}};
            rj["sign_preserved"] =
                report.sign_result ? nlohmann::json(to_string(*report.sign_result))
                                   : nlohmann::json(nullptr);
            out << nlohmann::json{{"schema", 1},
                                  {"bridged", graph_to_json(report.bridged)},
                                  {"report", rj}}
                       .dump()
                << "\n";
        } else if (cmd_bound->parsed()) {
            const Graph ga = read_graph_file(left_path);
            const Graph gb = read_graph_file(right_path);
            const BridgeSpec spec = parse_pairs(pairs_text);
            const double lb = lower_bound_bridged(ga, gb, spec);
            const double actual = lambda_min_pos(bridge(ga, gb, spec));
            out << nlohmann::json{{"schema", 1},
                                  {"lambda_lb", rounded(lb, precision)},
                                  {"lambda_min_pos", rounded(actual, precision)}}
                       .dump()
                << "\n";
        } else if (cmd_census->parsed()) {
            CensusOutput c;
            c.records = run_census(census_m, threads);
            c.report = match_to_published_tables(c.records, census_m);
            if (!out_dir.empty()) write_census_dir(c, out_dir, precision);
            if (format == "tsv") {
                out << census_tsv(c, precision);
            } else {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& m : c.report.matches)
                    arr.push_back(
                        census_record_json(c.records[m.record_index], m.label, precision));
                out << nlohmann::json{{"schema", 1}, {"records", arr}}.dump() << "\n";
            }
        } else if (cmd_fulvene->parsed()) {
            const FulveneGen gen = fulvene_family(fulvene_n);
            if (fulvene_dot) {
                out << to_dot(gen.graph);
                return 0;
            }
            nlohmann::json j{{"schema", 1},
                             {"n", gen.n},
                             {"graph", graph_to_json(gen.graph)},
                             {"degree_counts",
                              {{"1", gen.deg1_count}, {"2", gen.deg2_count},
                               {"3", gen.deg3_count}}}};
            if (fulvene_verify) {
                const FamilyCheckReport rep = verify_family(fulvene_n);
                nlohmann::json rows = nlohmann::json::array();
                for (const auto& row : rep.rows) {
                    rows.push_back(nlohmann::json{
                        {"n", row.n},
                        {"vertices", row.vertices},
                        {"det", row.determinant.str()},
                        {"integrally_invertible", row.integrally_invertible},
                        {"counts_ok", row.counts_ok},
                        {"max_degree", row.max_degree.convert_to<long long>()},
                        {"lambda_min_pos", rounded(row.lambda_min_pos, precision)},
                        {"lower_bound", rounded(row.lower_bound, precision)},
                        {"bound_holds", row.bound_holds}});
                }
                j["report"] = nlohmann::json{{"rows", rows},
                                             {"ratio_nondecreasing", rep.ratio_nondecreasing},
                                             {"y_chain_ok", rep.y_chain_ok},
                                             {"all_ok", rep.all_ok}};
            }
            out << j.dump() << "\n";
        } else if (cmd_dot->parsed()) {
            out << to_dot(read_graph_file(graph_path));
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace invgraph::cli
