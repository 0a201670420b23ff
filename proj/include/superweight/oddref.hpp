#pragma once

#include <string>
#include <vector>

#include "superweight/rootsys.hpp"

namespace superweight {

// A highest weight together with the Borel it is highest for and the
// parity twist accumulated so far.
struct HighestWeightState {
    Weight weight;
    BorelSeq borel; // no sign map
    Parity parity = Parity::even;
};

// Reflects in the odd isotropic simple root spanned by the slots at
// positions pos, pos+1 (1-based) of the Borel order.  The weight drops by
// that root and the parity flips exactly when their pairing is nonzero.
// Errors: NotOddSimple, IndexOutOfRange.
HighestWeightState odd_reflect(const HighestWeightState& s, std::size_t pos);

// Transports a highest weight from one Borel to another over the same slot
// multiset.  The within-kind order is aligned first (an even-Weyl step: a
// pure coordinate relabeling, exact for the extremal weights this is used
// on); the interleaving change is then realized by a shortest sequence of
// adjacent odd reflections.  Returns the final weight and total parity.
// Errors: SlotMismatch.
std::pair<Weight, Parity> transport(const Weight& w, const BorelSeq& from, const BorelSeq& to);

enum class OmegaKind { O2, O3, O6 };

OmegaKind parse_omega_kind(const std::string& text);

// Closed-form b(<)-highest weights of the dual symmetric powers (O2), the
// exterior powers (O3) and the dual partition family (O6) at truncation
// (n, x).  Errors: NonPositiveRank, BadPartition.
Weight omega_table(OmegaKind kind, long long n, long long x, long long a);
Weight omega_table(OmegaKind kind, long long n, long long x, const std::vector<long long>& mu);

} // namespace superweight
