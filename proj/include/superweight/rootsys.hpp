#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superweight/weights.hpp"

namespace superweight {

enum class SlotKind { delta, eps };

// One basis slot of the Cartan: delta_k (k >= 1) or eps_j (j >= 1).
struct Slot {
    SlotKind kind;
    std::size_t index;

    bool operator==(const Slot& o) const = default;
    auto operator<=>(const Slot& o) const = default;
};

std::string slot_name(const Slot& s);        // "d3", "e1"
Slot parse_slot(const std::string& text);

struct RootTerm {
    SlotKind kind;
    std::size_t index;
    int coeff; // in {-2,-1,1,2}

    bool operator==(const RootTerm& o) const = default;
    auto operator<=>(const RootTerm& o) const = default;
};

// Root spaces of q-type have dimension 1|1; those roots carry `both`.
enum class RootParity { even, odd, both };

const char* root_parity_name(RootParity p);

// A root: at most two nonzero terms on basis slots, plus its parity.
struct Root {
    std::vector<RootTerm> terms; // sorted by (kind, index)
    RootParity parity = RootParity::even;

    Root() = default;
    Root(std::vector<RootTerm> t, RootParity p);

    Root negated() const;
    std::string str() const; // "d1-e2", "2e1", "-d1-d2", ...

    bool operator==(const Root& o) const { return terms == o.terms; }
    auto operator<=>(const Root& o) const { return terms <=> o.terms; }
};

Root make_root(std::vector<RootTerm> terms, RootParity parity);

// The eleven direct-limit families.  The finite truncations only ever see
// the letter type (A/B/C/D/p/q); the variant fixes which side stays finite
// and is validated against requested ranks.
enum class FamilyTag {
    sl_m,      // sl(inf|m), m finite
    sl_inf,    // sl(inf|inf)
    ospB_2k,   // osp_B(inf|2k)
    ospB_inf,  // osp_B(inf|inf)
    ospB_m,    // osp_B(m|inf), m odd
    ospC,      // osp_C(2|inf)
    ospD_2k,   // osp_D(inf|2k)
    ospD_inf,  // osp_D(inf|inf)
    ospD_m,    // osp_D(m|inf), m even, m != 2
    p_inf,     // p(inf)
    q_inf,     // q(inf)
};

enum class LetterType { A, B, C, D, P, Q };

struct AlgebraFamily {
    FamilyTag tag;
    std::optional<long long> param; // the m or k of the six finite-side families

    LetterType letter() const;
    bool needs_sign_map() const;        // osp and p types
    std::string str() const;

    // x_n of the sl families: m when finite, n-1 when m = inf.
    // Only meaningful for letter() == A.
    long long x_of(long long n) const;

    bool operator==(const AlgebraFamily& o) const = default;
};

// Family strings: "sl:2", "sl:inf", "ospB" (rank-free), "ospB:2" (k),
// "ospBm:5" (m), "ospC", "ospD:2", "ospD:inf", "ospDm:6", "p", "q".
AlgebraFamily parse_family(const std::string& text);

// A splitting Borel at finite rank: a total order on the active slots,
// listed Borel-highest first, with an optional sign map (required for
// osp/p families).
struct BorelSeq {
    std::vector<Slot> order;
    std::optional<std::map<Slot, int>> sign; // values +1/-1

    std::size_t n_delta() const;
    std::size_t n_eps() const;
    std::string str() const; // "d2,d1,e1"
};

// Order strings list slots Borel-first: "d2,d1,e1"; sign strings align with
// the order: "+,-,+".
BorelSeq parse_borel(const std::string& order, const std::optional<std::string>& sign = std::nullopt);

// The standard Borel b(<) = (d_n,...,d_1,e_1,...,e_m) and its full reverse
// b(>).  "b<" / "b>" are accepted by parse_borel_named.
BorelSeq borel_less(std::size_t n, std::size_t m);
BorelSeq borel_greater(std::size_t n, std::size_t m);
BorelSeq parse_borel_named(const std::string& text, std::size_t n, std::size_t m);

// Root system of the rank-(n_delta, n_eps) truncation.  Sorted, duplicate
// free.  Errors: RankMismatch when the ranks contradict the family variant.
std::vector<Root> roots(const AlgebraFamily& fam, std::size_t n_delta, std::size_t n_eps);

// Positive system for a linear order (and sign map where required), clause
// by clause.  Errors: MissingSignMap, UnexpectedSignMap, BadBorelOrder,
// IllegalSignOnMaxDeltaSlot (ospD only).
std::vector<Root> positive_roots(const AlgebraFamily& fam, const BorelSeq& b);

// Support of the natural module V, as a membership predicate plus the
// parity each member carries.
struct NaturalSupport {
    AlgebraFamily family;

    bool contains(const Weight& w) const;
    // "even", "odd", or "both" (q-type); only valid on members.
    std::string parity_of(const Weight& w) const;
};

NaturalSupport natural_support(const AlgebraFamily& fam);

} // namespace superweight
