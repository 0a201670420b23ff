#include "superweight/blocks.hpp"

#include <algorithm>
#include <numeric>

namespace superweight {

std::optional<LegalMove> unique_legal_move(const WeightDiagram& f) {
    auto moves = legal_moves(f);
    if (moves.empty()) return std::nullopt;
    if (moves.size() > 1)
        fail("MultipleMoves", "expected at most one legal move, found " +
                                  std::to_string(moves.size()));
    return moves.front();
}

namespace {

Rational left_sum(const Weight& w) {
    Rational s(0);
    for (const auto& c : w.left) s += c;
    return s;
}

bool typical_by_pairing(const Weight& w) {
    // Shifted-mark collision test evaluated over the rationals, so it also
    // covers non-integral weights.
    const long long n = static_cast<long long>(w.n());
    for (long long i = 0; i < n; ++i) {
        Rational a = w.left[i] + Rational(n - i);
        for (long long j = 0; j < static_cast<long long>(w.m()); ++j) {
            Rational b = Rational(j + 1) - w.right[j];
            if (a == b) return false;
        }
    }
    return true;
}

} // namespace

KacStructure kac_structure(const Weight& lambda, long long n) {
    if (static_cast<long long>(lambda.n()) != n || lambda.m() != 1)
        fail("ShapeMismatch", "Kac verdicts live at shape (n, 1)");
    KacStructure out;
    if (!lambda.is_integral()) {
        if (typical_by_pairing(lambda)) return out; // simple
        fail("NonIntegralWeight", "atypical non-integral weights are out of range");
    }
    WeightDiagram f = diagram_of(lambda);
    if (atypicality(f) == 0) return out;
    auto mv = unique_legal_move(f);
    if (!mv) return out;
    out.simple = false;
    Weight socle = weight_of(mv->result, lambda.n(), 1);
    Rational drop = left_sum(lambda) - left_sum(socle);
    out.parity_twist = drop.as_integer() % 2 == 0 ? Parity::even : Parity::odd;
    out.socle_hw = std::move(socle);
    return out;
}

RankWindow parse_window(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        fail("BadWindow", "windows look like 3..8, got '" + text + "'");
    RankWindow w;
    try {
        w.lo = std::stoll(text.substr(0, dots));
        w.hi = std::stoll(text.substr(dots + 2));
    } catch (...) {
        fail("BadWindow", "windows look like 3..8, got '" + text + "'");
    }
    if (w.lo > w.hi) fail("BadWindow", "empty window");
    return w;
}

namespace {

// Relation of two aligned b(<)-highest weights at one rank: 0 = unrelated,
// 1 = one legal move apart; the parity of the left-coordinate drop rides
// along.
struct RankRelation {
    bool related = false;
    Parity twist = Parity::even;
};

RankRelation relate_at_rank(const FamilySpec& f, const FamilySpec& g, long long n,
                            const AlgebraFamily& alg) {
    TruncatedHighestWeight hf = family_highest_weight_lt(f, n, alg);
    TruncatedHighestWeight hg = family_highest_weight_lt(g, n, alg);
    RankRelation out;
    if (!hf.weight.is_integral() || !hg.weight.is_integral()) return out;

    const long long nn = static_cast<long long>(hf.weight.n());
    const long long mm = static_cast<long long>(hf.weight.m());
    if (nn == mm) return out; // no central alignment at n = m
    Rational c = (c_of(hf.weight) - c_of(hg.weight)) / Rational(nn - mm);
    if (!c.is_integer()) return out;
    Weight aligned = central_shift(hg.weight, c);

    WeightDiagram df = diagram_of(hf.weight);
    WeightDiagram dg = diagram_of(aligned);
    if (!single_move_related(df, dg)) return out;
    out.related = true;
    Rational drop = left_sum(hf.weight) - left_sum(aligned);
    out.twist = drop.as_integer() % 2 == 0 ? Parity::even : Parity::odd;
    return out;
}

} // namespace

Ext1Verdict ext1_dim(const FamilySpec& f, const FamilySpec& g, const RankWindow& window,
                     const AlgebraFamily& alg) {
    if (window.length() < 3) fail("WindowTooSmall", "verdicts need at least three ranks");
    Ext1Verdict out;
    switch (alg.letter()) {
        case LetterType::Q: {
            // Only self-extensions, and only for Pi-self-equivalent modules,
            // i.e. strict partitions of odd length.
            if (!isomorphic(f, g, alg)) return out;
            FamilySpec base = f;
            if (base.kind == FamilyKind::Natural) base.mu = {1};
            else if (base.kind != FamilyKind::Qpart && base.kind != FamilyKind::QpartDual)
                return out; // the trivial module has even length zero
            if (base.mu.size() % 2 == 1) out.dim = 1;
            return out;
        }
        case LetterType::A: {
            bool all = true, none = true;
            std::optional<Parity> twist;
            bool twist_stable = true;
            for (long long n = window.lo; n <= window.hi; ++n) {
                RankRelation rel = relate_at_rank(f, g, n, alg);
                if (rel.related) {
                    none = false;
                    if (!twist) twist = rel.twist;
                    else if (*twist != rel.twist) twist_stable = false;
                } else {
                    all = false;
                }
            }
            if (!all && !none)
                fail("UnstableVerdict", "the relation flips inside the window " +
                                            std::to_string(window.lo) + ".." +
                                            std::to_string(window.hi));
            if (all) {
                out.dim = 1;
                if (twist_stable) out.twist = twist;
            }
            return out;
        }
        default:
            // Semisimple categories: no extensions between simples at all.
            require_family_over(f, alg);
            require_family_over(g, alg);
            return out;
    }
}

BlockGraph block_graph(const std::vector<FamilySpec>& nodes, const RankWindow& window,
                       const AlgebraFamily& alg) {
    BlockGraph graph;
    graph.nodes = nodes;
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            Ext1Verdict v = ext1_dim(nodes[i], nodes[j], window, alg);
            if (v.dim == 1) {
                graph.edges.push_back({i, j, v.twist});
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<std::size_t>> buckets(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) buckets[find(i)].push_back(i);
    for (auto& b : buckets)
        if (!b.empty()) graph.components.push_back(std::move(b));
    std::sort(graph.components.begin(), graph.components.end());
    return graph;
}

} // namespace superweight
