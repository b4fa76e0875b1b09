#pragma once

#include <optional>

#include "invgraph/invert.hpp"

namespace invgraph {

// Ordered bridge pairs (a_i in G_A, b_i in G_B), 1-based. All a_i must
// be distinct and all b_i must be distinct.
struct BridgeSpec {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// The n x m 0/1 coupling matrix H with H(a_i, b_i) = 1.
IntMatrix coupling_matrix(std::size_t n, std::size_t m, const BridgeSpec& spec);

// The bridged graph on n+m vertices: G_B's vertices are shifted by n and
// one new edge is added per pair.
Graph bridge(const Graph& ga, const Graph& gb, const BridgeSpec& spec);

enum class BridgeCondition { pr_zero, pr_two_i, none };
enum class SignPreservation { positive, negative, both };

std::string to_string(BridgeCondition c);
std::string to_string(SignPreservation s);

struct BridgeReport {
    Graph bridged{0};
    // Principal submatrices of A^{-1} / B^{-1} at the bridged vertices
    // (pair order). Empty when either input lacks an integral inverse.
    IntMatrix p;
    IntMatrix r;
    BridgeCondition condition = BridgeCondition::none;
    bool integrally_invertible = false;
    // Present when both inputs share a sign class and the sufficient
    // sign-preservation condition holds for some valid signature pair.
    std::optional<SignPreservation> sign_result;
};

// Evaluates the sufficient invertibility conditions (P R = 0 or
// P R = 2I) for the bridged graph. When a condition holds, C^{-1} is
// assembled through schur_block_inverse and cross-checked against the
// direct exact inverse; otherwise integral invertibility is decided by
// the exact determinant alone.
BridgeReport check_invertibility_conditions(const Graph& ga, const Graph& gb,
                                            const BridgeSpec& spec);

// Sufficient condition of the sign-preservation theorem for one target
// sign: P R = 0 and D^A H D^B (or its negation) nonnegative for some
// valid signature pair. Signatures are unique only up to negation per
// connected component of their sign-constraint graphs; all combinations
// are tried. A nullopt does not prove non-invertibility of the result.
std::optional<InverseSign> check_sign_preservation(const Graph& ga, const Graph& gb,
                                                   const BridgeSpec& spec,
                                                   InverseSign target);

// Tries every sign class shared by both inputs. Throws SignClassMismatch
// when they share none.
std::optional<SignPreservation> check_sign_preservation(const Graph& ga, const Graph& gb,
                                                        const BridgeSpec& spec);

// All k-subsets S of vertices (1-based, each sorted ascending) with
// A^{-1}[S,S] = 0, in lexicographic order. Requires det = +-1; k > n/2
// yields the empty list since no invertible matrix has a larger zero
// principal block.
std::vector<std::vector<std::size_t>> arbitrarily_bridgeable_subsets(const Graph& g,
                                                                     std::size_t k);

} // namespace invgraph
