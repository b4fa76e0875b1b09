#pragma once

#include <optional>
#include <string>

#include "invgraph/exact.hpp"
#include "invgraph/graph.hpp"

namespace invgraph {

// Diagonal +-1 signature vector (self-inverse: D D = I).
struct Signature {
    std::vector<int> d; // entries +1 / -1, one per vertex

    bool operator==(const Signature&) const = default;
};

enum class SignTarget { nonnegative, nonpositive };

enum class InvertibilityClass {
    singular,
    non_integral_invertible,
    integral_only,
    positive,
    negative,
    positive_and_negative,
};

std::string to_string(InvertibilityClass c);

// Searches for a diagonal +-1 matrix D with D m D entrywise of the
// requested sign. The sign-constraint graph (one edge per nonzero
// off-diagonal entry) is two-colored; the first vertex of each
// connected component is normalized to +1, which makes the result
// deterministic. nullopt when no signature exists.
std::optional<Signature> find_signature(const IntMatrix& m, SignTarget target);

// Entrywise check that d_i * m_ij * d_j has the requested sign.
bool signature_valid(const IntMatrix& m, const Signature& sig, SignTarget target);

struct Classification {
    InvertibilityClass cls = InvertibilityClass::singular;
    Int determinant = 0;
    std::optional<ExactInverse> inverse;           // absent only when singular
    std::optional<Signature> positive_signature;   // D with D A^{-1} D >= 0
    std::optional<Signature> negative_signature;   // D with D A^{-1} D <= 0
};

Classification classify_details(const Graph& g);
InvertibilityClass classify(const Graph& g);

enum class InverseSign { positive, negative };

struct InverseGraphResult {
    Graph inverse;       // multigraph; multiplicities are |A^{-1}| entries
    Signature signature; // the D realizing the sign
    InverseSign sign = InverseSign::positive;
};

// The positive (preferred) or negative inverse graph of Definition 2:
// adjacency D A^{-1} D, resp. -D A^{-1} D. Throws NotSignable when the
// graph is not positively or negatively invertible.
InverseGraphResult inverse_graph(const Graph& g);

} // namespace invgraph
