#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superweight/catalog.hpp"
#include "superweight/diagrams.hpp"

namespace superweight {

// Structure of the Kac module induced from one highest weight at shape
// (n, 1): simple exactly when typical, otherwise length two with the socle
// highest weight reached by the unique legal move.
struct KacStructure {
    bool simple = true;
    std::optional<Weight> socle_hw;
    std::optional<Parity> parity_twist; // the Pi exponent p_n on the socle
};

// The single legal move of a diagram from an (n,1)-style shape, if any.
// Errors: MultipleMoves when more than one exists (a shape-convention bug
// upstream).
std::optional<LegalMove> unique_legal_move(const WeightDiagram& f);

// Kac-module verdict at shape (n, 1).  Integral dominant weights get the
// full verdict; non-integral weights are admitted only when typical.
// Errors: ShapeMismatch, NotDominant, NonIntegralWeight.
KacStructure kac_structure(const Weight& lambda, long long n);

struct Ext1Verdict {
    int dim = 0; // 0 or 1
    std::optional<Parity> twist;
};

struct RankWindow {
    long long lo = 0;
    long long hi = 0;

    long long length() const { return hi - lo + 1; }
};

RankWindow parse_window(const std::string& text); // "3..8"

// Ext^1 dimension between two catalog families in the integrable bounded
// category, decided over a finite rank window: for sl families the aligned
// one-move criterion must hold at every rank (dim 1) or at none (dim 0);
// a flip raises UnstableVerdict.  q families extend themselves exactly
// when Pi-self-equivalent; the remaining algebras are semisimple.
// Errors: WindowTooSmall, UnstableVerdict, UnsupportedFamily.
Ext1Verdict ext1_dim(const FamilySpec& f, const FamilySpec& g, const RankWindow& window,
                     const AlgebraFamily& alg);

struct BlockGraph {
    std::vector<FamilySpec> nodes;
    struct Edge {
        std::size_t a = 0;
        std::size_t b = 0;
        std::optional<Parity> twist;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> components; // each ascending; singletons included
};

// Block decomposition of a node list: edges where ext1_dim is one,
// components up to Pi.
BlockGraph block_graph(const std::vector<FamilySpec>& nodes, const RankWindow& window,
                       const AlgebraFamily& alg);

} // namespace superweight
