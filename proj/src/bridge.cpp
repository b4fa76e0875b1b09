#include "invgraph/bridge.hpp"

#include <algorithm>
#include <set>

namespace invgraph {

std::string to_string(BridgeCondition c) {
    switch (c) {
        case BridgeCondition::pr_zero: return "pr-zero";
        case BridgeCondition::pr_two_i: return "pr-two-i";
        case BridgeCondition::none: return "none";
    }
    return "?";
}

std::string to_string(SignPreservation s) {
    switch (s) {
        case SignPreservation::positive: return "positive";
        case SignPreservation::negative: return "negative";
        case SignPreservation::both: return "both";
    }
    return "?";
}

namespace {

void validate_spec(std::size_t n, std::size_t m, const BridgeSpec& spec) {
    if (spec.pairs.empty()) throw InvalidSpec("bridge: at least one pair required");
    if (spec.pairs.size() > std::min(n, m))
        throw InvalidSpec("bridge: more pairs than vertices on one side");
    std::set<std::size_t> as, bs;
    for (const auto& [a, b] : spec.pairs) {
        if (a < 1 || a > n) throw InvalidSpec("bridge: left vertex outside 1..n");
        if (b < 1 || b > m) throw InvalidSpec("bridge: right vertex outside 1..m");
        if (!as.insert(a).second) throw InvalidSpec("bridge: repeated left vertex");
        if (!bs.insert(b).second) throw InvalidSpec("bridge: repeated right vertex");
    }
}

std::vector<std::size_t> left_indices(const BridgeSpec& spec) {
    std::vector<std::size_t> idx;
    for (const auto& [a, b] : spec.pairs) idx.push_back(a - 1);
    return idx;
}

std::vector<std::size_t> right_indices(const BridgeSpec& spec) {
    std::vector<std::size_t> idx;
    for (const auto& [a, b] : spec.pairs) idx.push_back(b - 1);
    return idx;
}

// Connected components of the support graph of a symmetric matrix
// (edge i-j for each nonzero off-diagonal entry).
std::vector<std::vector<std::size_t>> support_components(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.push_back({});
        comp[start] = id;
        std::vector<std::size_t> stack = {start};
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (std::size_t v = 0; v < n; ++v) {
                if (v != u && m(u, v) != 0 && comp[v] == -1) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return out;
}

bool sign_uniform(const IntMatrix& m) {
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) > 0) has_pos = true;
            if (m(i, j) < 0) has_neg = true;
        }
    return !(has_pos && has_neg);
}

} // namespace

IntMatrix coupling_matrix(std::size_t n, std::size_t m, const BridgeSpec& spec) {
    validate_spec(n, m, spec);
    IntMatrix h(n, m);
    for (const auto& [a, b] : spec.pairs) h(a - 1, b - 1) = 1;
    return h;
}

Graph bridge(const Graph& ga, const Graph& gb, const BridgeSpec& spec) {
    const std::size_t n = ga.vertex_count();
    const std::size_t m = gb.vertex_count();
    if (n == 0 || m == 0) throw InvalidSpec("bridge: empty graph");
    validate_spec(n, m, spec);
    IntMatrix c(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = ga.adjacency()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c(n + i, n + j) = gb.adjacency()(i, j);
    for (const auto& [a, b] : spec.pairs) {
        c(a - 1, n + b - 1) = 1;
        c(n + b - 1, a - 1) = 1;
    }
    return Graph::from_adjacency(std::move(c));
}

BridgeReport check_invertibility_conditions(const Graph& ga, const Graph& gb,
                                            const BridgeSpec& spec) {
    BridgeReport report;
    report.bridged = bridge(ga, gb, spec);

    const Int det_a = det(ga.adjacency());
    const Int det_b = det(gb.adjacency());
    const bool integral_inputs =
        (det_a == 1 || det_a == -1) && (det_b == 1 || det_b == -1);

    if (integral_inputs) {
        const IntMatrix a_inv = to_integral(inverse_exact(ga.adjacency())->inverse);
        const IntMatrix b_inv = to_integral(inverse_exact(gb.adjacency())->inverse);
        const auto ai = left_indices(spec);
        const auto bi = right_indices(spec);
        report.p = a_inv.submatrix(ai, ai);
        report.r = b_inv.submatrix(bi, bi);
        const IntMatrix pr = report.p * report.r;
        const std::size_t k = spec.pairs.size();
        IntMatrix two_i(k, k);
        for (std::size_t i = 0; i < k; ++i) two_i(i, i) = 2;
        if (pr.is_zero())
            report.condition = BridgeCondition::pr_zero;
        else if (pr == two_i)
            report.condition = BridgeCondition::pr_two_i;

        if (report.condition != BridgeCondition::none) {
            const IntMatrix h =
                coupling_matrix(ga.vertex_count(), gb.vertex_count(), spec);
            auto via_schur = schur_block_inverse(a_inv, b_inv, h);
            auto direct = inverse_exact(report.bridged.adjacency());
            if (!via_schur || !direct || *via_schur != direct->inverse)
                throw std::logic_error(
                    "check_invertibility_conditions: Schur assembly disagrees with "
                    "direct inversion");
            report.integrally_invertible = direct->is_integral;
            if (!report.integrally_invertible)
                throw std::logic_error(
                    "check_invertibility_conditions: condition held but inverse is "
                    "not integral");
        }
    }

    if (report.condition == BridgeCondition::none) {
        const Int det_c = det(report.bridged.adjacency());
        report.integrally_invertible = det_c == 1 || det_c == -1;
    }

    // Aggregate sign preservation when the inputs share a sign class.
    try {
        report.sign_result = check_sign_preservation(ga, gb, spec);
    } catch (const SignClassMismatch&) {
        report.sign_result = std::nullopt;
    }
    return report;
}

namespace {

bool admits(const Classification& c, InverseSign target) {
    return target == InverseSign::positive ? c.positive_signature.has_value()
                                           : c.negative_signature.has_value();
}

// Tries every per-component negation of both base signatures, looking
// for a pair making D^A H D^B sign-uniform.
bool signature_pair_exists(const IntMatrix& h, const Signature& base_a,
                           const std::vector<std::vector<std::size_t>>& comps_a,
                           const Signature& base_b,
                           const std::vector<std::vector<std::size_t>>& comps_b) {
    if (comps_a.size() + comps_b.size() > 16)
        throw std::invalid_argument(
            "check_sign_preservation: too many signature components for exhaustive "
            "search");
    const std::size_t ca = comps_a.size(), cb = comps_b.size();
    for (std::uint64_t ma = 0; ma < (std::uint64_t(1) << ca); ++ma) {
        Signature da = base_a;
        for (std::size_t c = 0; c < ca; ++c)
            if (ma >> c & 1)
                for (std::size_t v : comps_a[c]) da.d[v] = -da.d[v];
        for (std::uint64_t mb = 0; mb < (std::uint64_t(1) << cb); ++mb) {
            Signature db = base_b;
            for (std::size_t c = 0; c < cb; ++c)
                if (mb >> c & 1)
                    for (std::size_t v : comps_b[c]) db.d[v] = -db.d[v];
            IntMatrix signed_h(h.rows(), h.cols());
            for (std::size_t i = 0; i < h.rows(); ++i)
                for (std::size_t j = 0; j < h.cols(); ++j)
                    signed_h(i, j) = Int(da.d[i]) * h(i, j) * Int(db.d[j]);
            if (sign_uniform(signed_h)) return true;
        }
    }
    return false;
}

} // namespace

std::optional<InverseSign> check_sign_preservation(const Graph& ga, const Graph& gb,
                                                   const BridgeSpec& spec,
                                                   InverseSign target) {
    validate_spec(ga.vertex_count(), gb.vertex_count(), spec);
    const Classification cls_a = classify_details(ga);
    const Classification cls_b = classify_details(gb);
    if (!admits(cls_a, target) || !admits(cls_b, target))
        throw SignClassMismatch("check_sign_preservation: inputs do not share the "
                                "requested sign class");

    const IntMatrix a_inv = to_integral(cls_a.inverse->inverse);
    const IntMatrix b_inv = to_integral(cls_b.inverse->inverse);
    const auto ai = left_indices(spec);
    const auto bi = right_indices(spec);
    const IntMatrix pr = a_inv.submatrix(ai, ai) * b_inv.submatrix(bi, bi);
    if (!pr.is_zero()) return std::nullopt;

    const IntMatrix h = coupling_matrix(ga.vertex_count(), gb.vertex_count(), spec);
    const Signature& base_a = target == InverseSign::positive ? *cls_a.positive_signature
                                                              : *cls_a.negative_signature;
    const Signature& base_b = target == InverseSign::positive ? *cls_b.positive_signature
                                                              : *cls_b.negative_signature;
    if (signature_pair_exists(h, base_a, support_components(a_inv), base_b,
                              support_components(b_inv)))
        return target;
    return std::nullopt;
}

std::optional<SignPreservation> check_sign_preservation(const Graph& ga, const Graph& gb,
                                                        const BridgeSpec& spec) {
    const Classification cls_a = classify_details(ga);
    const Classification cls_b = classify_details(gb);
    const bool try_pos = cls_a.positive_signature && cls_b.positive_signature;
    const bool try_neg = cls_a.negative_signature && cls_b.negative_signature;
    if (!try_pos && !try_neg)
        throw SignClassMismatch("check_sign_preservation: inputs share no sign class");

    bool pos = false, neg = false;
    if (try_pos)
        pos = check_sign_preservation(ga, gb, spec, InverseSign::positive).has_value();
    if (try_neg)
        neg = check_sign_preservation(ga, gb, spec, InverseSign::negative).has_value();
    if (pos && neg) return SignPreservation::both;
    if (pos) return SignPreservation::positive;
    if (neg) return SignPreservation::negative;
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> arbitrarily_bridgeable_subsets(const Graph& g,
                                                                     std::size_t k) {
    const Int d = det(g.adjacency());
    if (d != 1 && d != -1)
        throw NotIntegrallyInvertible(
            "arbitrarily_bridgeable_subsets: adjacency determinant is not +-1");
    if (k == 0) throw std::invalid_argument("arbitrarily_bridgeable_subsets: k >= 1");
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> out;
    if (2 * k > n) return out; // zero principal block larger than n/2 is impossible

    const IntMatrix inv = to_integral(inverse_exact(g.adjacency())->inverse);
    std::vector<std::size_t> subset(k);
    // lexicographic enumeration of k-combinations of 1..n
    for (std::size_t i = 0; i < k; ++i) subset[i] = i + 1;
    while (true) {
        bool zero = true;
        for (std::size_t i = 0; i < k && zero; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (inv(subset[i] - 1, subset[j] - 1) != 0) {
                    zero = false;
                    break;
                }
        if (zero) out.push_back(subset);

        std::size_t pos = k;
        while (pos > 0 && subset[pos - 1] == n - k + pos) --pos;
        if (pos == 0) break;
        ++subset[pos - 1];
        for (std::size_t i = pos; i < k; ++i) subset[i] = subset[i - 1] + 1;
    }
    return out;
}

} // namespace invgraph
