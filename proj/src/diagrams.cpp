#include "superweight/diagrams.hpp"

#include <algorithm>

namespace superweight {

void WeightDiagram::put(long long pos, DiagramSymbol s) {
    auto [it, inserted] = symbols_.emplace(pos, s);
    if (!inserted) fail("ShapeMismatch", "position " + std::to_string(pos) + " marked twice");
}

std::optional<DiagramSymbol> WeightDiagram::at(long long pos) const {
    auto it = symbols_.find(pos);
    if (it == symbols_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::vector<long long> collect(const std::map<long long, DiagramSymbol>& m, DiagramSymbol want,
                               bool with_cross, bool descending) {
    std::vector<long long> out;
    for (const auto& [pos, sym] : m)
        if (sym == want || (with_cross && sym == DiagramSymbol::cross)) out.push_back(pos);
    if (descending) std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<long long> WeightDiagram::crosses() const {
    return collect(symbols_, DiagramSymbol::cross, false, true);
}
std::vector<long long> WeightDiagram::core_left() const {
    return collect(symbols_, DiagramSymbol::left_core, false, true);
}
std::vector<long long> WeightDiagram::core_right() const {
    return collect(symbols_, DiagramSymbol::right_core, false, false);
}

long long WeightDiagram::min_pos() const { return symbols_.empty() ? 0 : symbols_.begin()->first; }
long long WeightDiagram::max_pos() const { return symbols_.empty() ? 0 : symbols_.rbegin()->first; }

WeightDiagram diagram_of(const Weight& w) {
    ShiftedWeight s = shift(w);
    if (!s.dominant)
        fail("NotDominant", "diagram of non-dominant weight " + format_weight(w));
    WeightDiagram f;
    std::vector<long long> bs(s.b.begin(), s.b.end());
    std::sort(bs.begin(), bs.end());
    for (long long a : s.a) {
        bool crossed = std::binary_search(bs.begin(), bs.end(), a);
        f.put(a, crossed ? DiagramSymbol::cross : DiagramSymbol::left_core);
    }
    std::vector<long long> as(s.a.begin(), s.a.end());
    std::sort(as.begin(), as.end());
    for (long long b : bs)
        if (!std::binary_search(as.begin(), as.end(), b)) f.put(b, DiagramSymbol::right_core);
    return f;
}

Weight weight_of(const WeightDiagram& f, std::size_t n, std::size_t m) {
    auto xs = f.crosses();
    auto l = f.core_left();
    auto r = f.core_right();
    if (l.size() + xs.size() != n || r.size() + xs.size() != m)
        fail("ShapeMismatch", "diagram does not fit shape (" + std::to_string(n) + "," +
                                  std::to_string(m) + ")");
    ShiftedWeight s;
    s.a.insert(s.a.end(), l.begin(), l.end());
    s.a.insert(s.a.end(), xs.begin(), xs.end());
    std::sort(s.a.begin(), s.a.end(), std::greater<>());
    s.b.insert(s.b.end(), r.begin(), r.end());
    s.b.insert(s.b.end(), xs.begin(), xs.end());
    std::sort(s.b.begin(), s.b.end());
    s.dominant = true;
    return unshift(s);
}

std::size_t atypicality(const WeightDiagram& f) { return f.crosses().size(); }

long long l_count(const WeightDiagram& f, long long b, long long a) {
    if (b >= a) fail("BadInterval", "need b < a");
    long long count = 0;
    for (long long z = b + 1; z < a; ++z) {
        auto s = f.at(z);
        if (!s) --count;
        else if (*s == DiagramSymbol::cross) ++count;
    }
    return count;
}

namespace {

WeightDiagram apply_move(const WeightDiagram& f, long long from, long long to) {
    WeightDiagram g;
    for (const auto& [pos, sym] : f.symbols())
        if (pos != from) g.put(pos, sym);
    g.put(to, DiagramSymbol::cross);
    return g;
}

} // namespace

std::vector<LegalMove> legal_moves(const WeightDiagram& f) {
    std::vector<LegalMove> out;
    if (f.empty()) return out;
    const long long lowest = f.min_pos();
    for (long long a : f.crosses()) {
        // Walk b downward keeping the signed count incrementally; once we
        // are below the support it can only decrease.
        long long count = 0;
        long long b = a - 1;
        while (true) {
            auto sym = f.at(b);
            if (!sym && count == 0)
                out.push_back(LegalMove{a, b, apply_move(f, a, b)});
            if (b < lowest && count < 0) break;
            if (!sym) --count;
            else if (*sym == DiagramSymbol::cross) ++count;
            --b;
        }
    }
    return out;
}

bool single_move_related(const WeightDiagram& f, const WeightDiagram& g) {
    for (const auto& mv : legal_moves(f))
        if (mv.result == g) return true;
    for (const auto& mv : legal_moves(g))
        if (mv.result == f) return true;
    return false;
}

bool ext1_nonzero(const Weight& v, const Weight& w, bool align_central) {
    if (!v.same_shape(w)) fail("ShapeMismatch", "ext1 needs equal shapes");
    Weight w2 = w;
    if (align_central) {
        long long n = static_cast<long long>(v.n());
        long long m = static_cast<long long>(v.m());
        if (n == m)
            fail("NoIntegralAlignment", "central alignment is undefined at n = m");
        Rational c = (c_of(v) - c_of(w)) / Rational(n - m);
        if (!c.is_integer())
            fail("NoIntegralAlignment", "no integral central shift matches c_of");
        w2 = central_shift(w, c);
    }
    return single_move_related(diagram_of(v), diagram_of(w2));
}

std::string render_diagram(const WeightDiagram& f) {
    long long lo = f.min_pos() - 2;
    long long hi = f.max_pos() + 2;
    std::string ruler, line;
    for (long long z = lo; z <= hi; ++z) {
        std::string label = std::to_string(z);
        char c = 'o';
        if (auto s = f.at(z)) {
            if (*s == DiagramSymbol::cross) c = 'x';
            else if (*s == DiagramSymbol::left_core) c = '>';
            else c = '<';
        }
        if (z != lo) {
            ruler += ' ';
            line += ' ';
        }
        ruler += label;
        line += std::string(label.size() - 1, ' ') + c;
    }
    return ruler + "\n" + line + "\n";
}

} // namespace superweight
