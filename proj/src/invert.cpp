#include "invgraph/invert.hpp"

namespace invgraph {

std::string to_string(InvertibilityClass c) {
    switch (c) {
        case InvertibilityClass::singular: return "singular";
        case InvertibilityClass::non_integral_invertible: return "non-integral";
        case InvertibilityClass::integral_only: return "integral-only";
        case InvertibilityClass::positive: return "positive";
        case InvertibilityClass::negative: return "negative";
        case InvertibilityClass::positive_and_negative: return "positive+negative";
    }
    return "?";
}

std::optional<Signature> find_signature(const IntMatrix& m, SignTarget target) {
    if (!m.is_square() || !m.is_symmetric())
        throw NotSymmetric("find_signature: matrix must be symmetric");
    const std::size_t n = m.rows();
    const int want = target == SignTarget::nonnegative ? 1 : -1;

    // d_i^2 = 1 leaves the diagonal untouched, so any wrong-signed
    // diagonal entry rules a signature out immediately.
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) != 0 && (m(i, i) < 0 ? -1 : 1) != want) return std::nullopt;
    }

    Signature sig;
    sig.d.assign(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (sig.d[start] != 0) continue;
        sig.d[start] = 1;
        std::vector<std::size_t> queue = {start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || m(u, v) == 0) continue;
                const int required = (m(u, v) < 0 ? -1 : 1) == want ? 1 : -1;
                if (sig.d[v] == 0) {
                    sig.d[v] = sig.d[u] * required;
                    queue.push_back(v);
                } else if (sig.d[v] != sig.d[u] * required) {
                    return std::nullopt;
                }
            }
        }
    }
    return sig;
}

bool signature_valid(const IntMatrix& m, const Signature& sig, SignTarget target) {
    if (sig.d.size() != m.rows() || !m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (sig.d[i] != 1 && sig.d[i] != -1) return false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int signed_entry = Int(sig.d[i]) * m(i, j) * Int(sig.d[j]);
            if (target == SignTarget::nonnegative ? signed_entry < 0 : signed_entry > 0)
                return false;
        }
    }
    return true;
}

Classification classify_details(const Graph& g) {
    Classification out;
    out.determinant = det(g.adjacency());
    if (out.determinant == 0) {
        out.cls = InvertibilityClass::singular;
        return out;
    }
    out.inverse = inverse_exact(g.adjacency());
    if (out.determinant != 1 && out.determinant != -1) {
        out.cls = InvertibilityClass::non_integral_invertible;
        return out;
    }
    const IntMatrix inv = to_integral(out.inverse->inverse);
    out.positive_signature = find_signature(inv, SignTarget::nonnegative);
    out.negative_signature = find_signature(inv, SignTarget::nonpositive);
    if (out.positive_signature && out.negative_signature)
        out.cls = InvertibilityClass::positive_and_negative;
    else if (out.positive_signature)
        out.cls = InvertibilityClass::positive;
    else if (out.negative_signature)
        out.cls = InvertibilityClass::negative;
    else
        out.cls = InvertibilityClass::integral_only;
    return out;
}

InvertibilityClass classify(const Graph& g) { return classify_details(g).cls; }

InverseGraphResult inverse_graph(const Graph& g) {
    const Classification c = classify_details(g);
    const bool pos = c.positive_signature.has_value();
    const bool neg = c.negative_signature.has_value();
    if (!pos && !neg)
        throw NotSignable("inverse_graph: graph is not positively or negatively invertible (" +
                          to_string(c.cls) + ")");

    const Signature& sig = pos ? *c.positive_signature : *c.negative_signature;
    const IntMatrix inv = to_integral(c.inverse->inverse);
    IntMatrix adj(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            Int e = Int(sig.d[i]) * inv(i, j) * Int(sig.d[j]);
            adj(i, j) = pos ? e : -e;
        }
    return InverseGraphResult{Graph::from_adjacency(std::move(adj)), sig,
                              pos ? InverseSign::positive : InverseSign::negative};
}

} // namespace invgraph
