#pragma once

#include <array>
#include <map>

#include "invgraph/spectra.hpp"

namespace invgraph {

struct CensusRecord {
    Graph graph{0};
    CanonicalKey key;
    InvertibilityClass cls = InvertibilityClass::singular;
    Spectrum spectrum;
    // k -> arbitrarily bridgeable k-subsets (1-based). Empty map when the
    // graph has no integral inverse.
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> bridgeable;
    // Fingerprint: spectrum rounded to 4 decimals plus per-k subset counts.
    std::vector<double> spectrum_rounded;
    std::vector<std::size_t> subset_counts;
};

// All connected simple graphs with a unique 1-factor on m vertices, one
// per isomorphism class, ordered by canonical key and fully classified.
// Supported sizes: m in {2, 4, 6}.
std::vector<CensusRecord> run_census(std::size_t m, unsigned threads = 1);

// Published reference row: class, spectrum, and (for m = 6) the per-k
// bridgeable-subset counts.
struct ReferenceRow {
    std::string label;
    InvertibilityClass cls;
    std::vector<double> spectrum;
    std::vector<std::size_t> subset_counts; // empty when not applicable
};

const std::vector<ReferenceRow>& reference_rows(std::size_t m);

struct TableMatch {
    std::size_t record_index = 0;
    std::string label;
    double max_spectrum_delta = 0.0;
    bool class_matches = false;
    bool counts_match = false;
};

struct TableReport {
    std::vector<TableMatch> matches; // one per record, record order
    bool all_ok = false;
};

// Matches census records to reference rows by spectrum (5e-4 absolute
// per eigenvalue) and, where spectra collide, by subset counts. The
// matching is a bijection; an unmatched record or doubly-used row
// throws UnmatchedGraph. Vertex labels never participate: printed
// subsets depend on the reference drawings, counts do not.
TableReport match_to_published_tables(const std::vector<CensusRecord>& records,
                                  std::size_t m = 6);

} // namespace invgraph
