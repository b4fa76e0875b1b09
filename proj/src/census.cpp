#include "invgraph/census.hpp"

#include <algorithm>
#include <cmath>

namespace invgraph {

namespace {

double round4(double v) { return std::round(v * 1e4) / 1e4; }

constexpr double kSpectrumTolerance = 5e-4;

using IC = InvertibilityClass;

const std::vector<ReferenceRow>& rows_m2() {
    static const std::vector<ReferenceRow> rows = {
        {"K_2", IC::positive_and_negative, {-1.0, 1.0}, {}},
    };
    return rows;
}

const std::vector<ReferenceRow>& rows_m4() {
    static const std::vector<ReferenceRow> rows = {
        {"Q_1", IC::positive_and_negative, {-1.6180, -0.6180, 0.6180, 1.6180}, {}},
        {"Q_2", IC::positive, {-1.4812, -1.0000, 0.3111, 2.1701}, {}},
    };
    return rows;
}

const std::vector<ReferenceRow>& rows_m6() {
    static const std::vector<ReferenceRow> rows = {
        {"H_1", IC::positive_and_negative,
         {-1.8019, -1.2470, -0.4450, 0.4450, 1.2470, 1.8019}, {6, 9, 4}},
        {"H_2", IC::positive_and_negative,
         {-1.9319, -1.0000, -0.5176, 0.5176, 1.0000, 1.9319}, {6, 10, 5}},
        {"H_3", IC::positive,
         {-1.7397, -1.3738, -0.5945, 0.2742, 1.0996, 2.3342}, {5, 7, 3}},
        {"H_4", IC::positive,
         {-1.7746, -1.0000, -1.0000, 0.1859, 1.3604, 2.2283}, {4, 5, 2}},
        {"H_5", IC::negative,
         {-1.6180, -1.6180, -0.4142, 0.6180, 0.6180, 2.4142}, {6, 9, 4}},
        {"H_6", IC::positive_and_negative,
         {-2.2470, -0.8019, -0.5550, 0.5550, 0.8019, 2.2470}, {6, 10, 4}},
        {"H_7", IC::positive,
         {-1.8942, -1.3293, -0.6093, 0.3064, 0.7727, 2.7537}, {5, 7, 3}},
        {"H_8", IC::positive,
         {-1.9032, -1.0000, -1.0000, 0.1939, 1.0000, 2.7093}, {4, 5, 2}},
        {"H_9", IC::positive,
         {-1.6180, -1.3914, -1.0000, 0.2271, 0.6180, 3.1642}, {4, 5, 2}},
        {"H_10", IC::negative,
         {-1.8608, -1.6180, -0.2541, 0.6180, 1.0000, 2.1149}, {5, 7, 3}},
        {"H_11", IC::integral_only,
         {-1.8241, -1.6180, -0.5482, 0.3285, 0.6180, 3.0437}, {5, 7, 3}},
        {"H_12", IC::negative,
         {-2.1420, -1.3053, -0.3848, 0.4669, 0.7661, 2.5991}, {6, 8, 3}},
        {"H_13", IC::positive,
         {-1.8563, -1.4780, -0.7248, 0.1967, 0.8481, 3.0143}, {4, 5, 2}},
        {"H_14", IC::positive,
         {-1.9202, -1.0000, -0.7510, 0.2914, 1.0000, 2.3799}, {5, 8, 4}},
        {"H_15", IC::positive,
         {-1.6783, -1.3198, -1.0000, 0.1397, 1.2297, 2.6287}, {4, 5, 2}},
        {"H_16", IC::positive,
         {-2.1364, -1.2061, -0.5406, 0.2611, 1.0825, 2.5395}, {5, 6, 2}},
        {"H_17", IC::positive,
         {-1.8619, -1.2827, -1.0000, 0.2512, 0.4897, 3.4037}, {4, 5, 2}},
        {"H_18", IC::positive,
         {-1.9032, -1.0000, -1.0000, 0.1939, 1.0000, 2.7093}, {5, 8, 4}},
        {"H_19", IC::non_integral_invertible,
         {-1.7321, -1.0000, -1.0000, -0.4142, 1.7321, 2.4142}, {}},
        {"H_20", IC::positive,
         {-2.3117, -1.0000, -0.6570, 0.3088, 0.7272, 2.9327}, {5, 7, 2}},
    };
    return rows;
}

bool spectrum_close(const std::vector<double>& a, const std::vector<double>& b,
                    double* max_delta = nullptr) {
    if (a.size() != b.size()) return false;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::fabs(a[i] - b[i]));
    if (max_delta) *max_delta = worst;
    return worst <= kSpectrumTolerance;
}

bool is_integrally_invertible(InvertibilityClass c) {
    return c == IC::integral_only || c == IC::positive || c == IC::negative ||
           c == IC::positive_and_negative;
}

} // namespace

const std::vector<ReferenceRow>& reference_rows(std::size_t m) {
    switch (m) {
        case 2: return rows_m2();
        case 4: return rows_m4();
        case 6: return rows_m6();
        default: throw UnsupportedSize("reference_rows: m in {2, 4, 6}");
    }
}

std::vector<CensusRecord> run_census(std::size_t m, unsigned threads) {
    if (m != 2 && m != 4 && m != 6)
        throw UnsupportedSize("run_census: m in {2, 4, 6}");

    auto unique_one_factor = [](const Graph& g) { return count_one_factors(g) == 1; };
    std::vector<Graph> graphs = enumerate_connected_simple(m, unique_one_factor, threads);

    std::vector<CensusRecord> records;
    records.reserve(graphs.size());
    for (Graph& g : graphs) {
        CensusRecord rec;
        rec.key = canonical_key(g);
        rec.cls = classify(g);
        rec.spectrum = spectrum_of(g);
        if (is_integrally_invertible(rec.cls)) {
            for (std::size_t k = 1; 2 * k <= m; ++k) {
                auto subsets = arbitrarily_bridgeable_subsets(g, k);
                rec.subset_counts.push_back(subsets.size());
                rec.bridgeable.emplace(k, std::move(subsets));
            }
        }
        for (double ev : rec.spectrum.eigenvalues)
            rec.spectrum_rounded.push_back(round4(ev));
        rec.graph = std::move(g);
        records.push_back(std::move(rec));
    }
    return records;
}

TableReport match_to_published_tables(const std::vector<CensusRecord>& records,
                                  std::size_t m) {
    const auto& rows = reference_rows(m);
    if (records.size() != rows.size())
        throw UnmatchedGraph("match_to_published_tables: expected " +
                             std::to_string(rows.size()) + " records, got " +
                             std::to_string(records.size()));

    TableReport report;
    std::vector<bool> used(rows.size(), false);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const CensusRecord& rec = records[i];
        std::vector<std::size_t> candidates;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!used[r] && spectrum_close(rec.spectrum.eigenvalues, rows[r].spectrum))
                candidates.push_back(r);
        if (candidates.size() > 1) {
            // iso-spectral rows differ in their bridgeable-subset counts
            std::erase_if(candidates, [&](std::size_t r) {
                return rows[r].subset_counts != rec.subset_counts;
            });
        }
        if (candidates.size() != 1)
            throw UnmatchedGraph("match_to_published_tables: record " + std::to_string(i) +
                                 " matched " + std::to_string(candidates.size()) +
                                 " reference rows");
        const std::size_t r = candidates.front();
        used[r] = true;

        TableMatch match;
        match.record_index = i;
        match.label = rows[r].label;
        spectrum_close(rec.spectrum.eigenvalues, rows[r].spectrum,
                       &match.max_spectrum_delta);
        match.class_matches = rec.cls == rows[r].cls;
        if (!rows[r].subset_counts.empty())
            match.counts_match = rec.subset_counts == rows[r].subset_counts;
        else if (rows[r].cls == IC::non_integral_invertible)
            match.counts_match = rec.subset_counts.empty(); // none computed
        else
            match.counts_match = true; // no counts published for this row
        report.matches.push_back(std::move(match));
    }
    report.all_ok = true;
    for (const auto& match : report.matches)
        report.all_ok = report.all_ok && match.class_matches && match.counts_match;
    return report;
}

} // namespace invgraph
