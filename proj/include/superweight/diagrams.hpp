#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superweight/weights.hpp"

namespace superweight {

enum class DiagramSymbol { left_core, right_core, cross }; // '>', '<', 'x'

// A weight diagram: finitely many positions of Z marked '<', '>' or 'x';
// everything else reads 'o'.  Crosses are the collisions of shifted left
// and right marks, so #crosses is the atypicality degree.
class WeightDiagram {
public:
    WeightDiagram() = default;

    void put(long long pos, DiagramSymbol s);
    // 'o' positions answer nullopt.
    std::optional<DiagramSymbol> at(long long pos) const;

    std::vector<long long> crosses() const;     // descending
    std::vector<long long> core_left() const;   // descending, '>' marks
    std::vector<long long> core_right() const;  // ascending, '<' marks

    const std::map<long long, DiagramSymbol>& symbols() const { return symbols_; }
    bool empty() const { return symbols_.empty(); }
    long long min_pos() const;
    long long max_pos() const;

    bool operator==(const WeightDiagram& o) const = default;

private:
    std::map<long long, DiagramSymbol> symbols_;
};

// A legal move of weight zero: the cross at `from` relocates to the empty
// position `to` < `from`, legal because the signed symbol count between
// them vanishes.
struct LegalMove {
    long long from = 0;
    long long to = 0;
    WeightDiagram result;
};

// Diagram of a dominant integral weight: position z is 'x' when z occurs
// among both shifted mark families, '>' when only left, '<' when only
// right.  Errors: NonIntegralWeight, NotDominant.
WeightDiagram diagram_of(const Weight& w);

// Inverse at fixed shape counts.  Errors: ShapeMismatch.
Weight weight_of(const WeightDiagram& f, std::size_t n, std::size_t m);

// Number of crosses; 0 means typical.
std::size_t atypicality(const WeightDiagram& f);

// Signed count (#x minus #o) strictly between b and a.  Errors: BadInterval.
long long l_count(const WeightDiagram& f, long long b, long long a);

// All legal moves of weight zero, ordered by descending source then
// descending target.
std::vector<LegalMove> legal_moves(const WeightDiagram& f);

// Whether one diagram is a single legal move of the other, in either
// direction.
bool single_move_related(const WeightDiagram& f, const WeightDiagram& g);

// Ext^1 criterion between simple weight modules at shape (n, m): nonzero
// exactly when the diagrams are one legal move apart.  With align_central,
// w is first moved by the unique central shift matching c_of (the sl-level
// comparison); the shift must exist, be integral, and needs n != m.
// Errors: ShapeMismatch, NoIntegralAlignment, plus diagram errors.
bool ext1_nonzero(const Weight& v, const Weight& w, bool align_central = false);

// ASCII rendering over [min-2, max+2]: an index ruler plus a symbol line
// using o < > x.
std::string render_diagram(const WeightDiagram& f);

} // namespace superweight
