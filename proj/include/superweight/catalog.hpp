#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superweight/intset.hpp"
#include "superweight/rootsys.hpp"

namespace superweight {

// A weakly increasing integer sequence a_n given by an explicit prefix and
// an affine tail a_n = alpha*n + beta, together with the parity exponents
// b_n (a prefix plus a constant tail).  This finite data is all that any
// catalog-level statement ever inspects.
struct SeqSpec {
    std::vector<long long> a_prefix;
    long long alpha = 0;
    long long beta = 0;
    std::vector<int> b_prefix;
    int b_tail = 0;

    long long a_at(long long n) const;
    int b_at(long long n) const;
    // Set of values {a_n : n >= 1} (used by the Borel conditions).
    IntSet value_set() const;
    // Tails eventually agree: same affine law and same b beyond both prefixes.
    bool tail_equal(const SeqSpec& o) const;

    void validate(const std::string& where) const;
};

enum class FamilyKind {
    SmuV,       // simple covariant family, partition parameter
    SmuVdual,   // its restricted dual
    SinfV,      // growing symmetric powers of the natural module
    SinfVdual,  // growing symmetric powers of the conatural module
    LinfV,      // growing exterior powers of the natural module
    LinfVdual,  // growing exterior powers of the conatural module
    LhalfV,     // semi-infinite exterior family, subset parameter
    SpinorB,    // odd orthogonal spinor limit, subset parameter
    SpinorD,    // even orthogonal spinor limit, subset parameter
    Natural,    // the natural module
    Trivial,    // the one-dimensional module
    Qpart,      // queer family, strict partition parameter
    QpartDual,  // its dual
    GenericSl1, // rank-one-right generic weight, non-integral parameter
};

const char* family_kind_name(FamilyKind k);

// A classified simple module presented symbolically.
struct FamilySpec {
    FamilyKind kind;
    std::vector<long long> mu;     // SmuV/SmuVdual (partition), Qpart/QpartDual (strict)
    SeqSpec seq;                   // SinfV/SinfVdual/LinfV/LinfVdual
    IntSet set;                    // LhalfV/SpinorB/SpinorD
    Rational generic_a;            // GenericSl1
    char generic_borel = '<';      // GenericSl1: '<' or '>'
    Parity twist = Parity::even;   // global Pi twist

    std::string str() const;
};

// Grammar: SmuV[3,1], SinfV[a:1,2;tail:n-1;b:0], LinfV[prefix:...;tail:...;b:1],
// LhalfV[base:evens;xor:2,3], SpinorD[base:all;xor:1,2], Qpart[3,2],
// GenSl1[1/2;borel:<], Natural, Trivial; optional !Pi suffix anywhere.
FamilySpec parse_family_spec(const std::string& text);

// Where each family is highest weight at truncation n.
struct TruncatedHighestWeight {
    Weight weight;
    char borel;    // '<' or '>'
    Parity twist;  // Pi exponent at this truncation (b_n plus the global twist)
};

// The highest weight of the family at truncation n (for sl families the
// right rank is x_n from the algebra).  Errors: RankTooSmall.
TruncatedHighestWeight family_highest_weight(const FamilySpec& f, long long n,
                                             const AlgebraFamily& alg);

// As above but always in the b(<) convention, converting the b(>)-sided
// families through the closed-form tables; the workhorse for block logic.
TruncatedHighestWeight family_highest_weight_lt(const FamilySpec& f, long long n,
                                                const AlgebraFamily& alg);

// ---------------------------------------------------------------------------
// Supports

enum class SupportKind {
    lambda_A,   // semi-infinite exterior support, queried by subsets
    S_A,        // symmetric tower support
    S_A_dual,
    S_mu,       // bounded-box support
    S_mu_dual,
    spinor_B,   // omega classes, finite symmetric difference
    spinor_D,   // omega classes, even finite symmetric difference
    natural,
    singleton,
};

struct SupportSet {
    SupportKind kind;
    std::vector<long long> mu;
    SeqSpec seq;
    IntSet base;
    AlgebraFamily algebra{FamilyTag::sl_inf, std::nullopt};
};

// The support predicate of a family (natural needs the algebra).
SupportSet support_of(const FamilySpec& f, const AlgebraFamily& alg);

// Queries: coordinate queries are finitely supported sequences
// (lambda_1, lambda_2, ...); subset queries describe epsilon_B / omega_B
// vectors by their index set.
struct SupportQuery {
    std::optional<std::vector<Rational>> coords;
    std::optional<IntSet> subset;
    std::optional<Weight> weight; // natural/singleton take honest weights
};

bool support_contains(const SupportSet& s, const SupportQuery& q);

// ---------------------------------------------------------------------------
// Classification-level predicates

// Rejects family kinds that do not live over the algebra.
// Errors: UnsupportedFamily.
void require_family_over(const FamilySpec& f, const AlgebraFamily& alg);

// The isomorphism relation between catalog members over one algebra.
bool isomorphic(const FamilySpec& f, const FamilySpec& g, const AlgebraFamily& alg);

// Linear orders presented as bucket lists: explicit indices and at most one
// named bucket among evens/odds/rest, e.g. "1,2,3|rest", "evens|rest",
// "rest|2,1".  Buckets are separated by '|'; named buckets enumerate
// ascending.
struct OrderRule {
    struct Bucket {
        bool named = false;           // named buckets enumerate ascending
        bool is_rest = false;
        IntSet set;                   // resolved set of a named bucket
        std::vector<long long> list;  // explicit bucket, in listed order
    };
    std::vector<Bucket> buckets;
};

OrderRule parse_order_rule(const std::string& text);

// Whether the family is a highest weight module for the Borel of the given
// order.  Errors: UnsupportedOrderRule, UnsupportedFamily.
bool hw_borel_condition(const FamilySpec& f, const OrderRule& order, const AlgebraFamily& alg);

// The closed catalog of integrable bounded simples for the algebra, as
// symbolic descriptors.
struct Classification {
    AlgebraFamily algebra;
    std::vector<std::string> families;
    std::vector<std::string> notes;
};

Classification classify_bounded(const AlgebraFamily& alg);

// Shape tests for the singular-weight lemma, cases a..e.
bool validate_singular_shape(char the_case, const Weight& w, long long n, long long x);

// Extension of a root-lattice translate to the first gl coordinate: the
// value at E_{1,1} of lambda + beta is c + beta_1.  beta must be an
// integral vector with zero sum.  Errors: NotInRootLatticeTranslate.
Rational extend_to_gl(const std::vector<Rational>& beta, const Rational& c);

// Dimension of the queer highest-weight space: 2^[#nonzero/2].
long long q_hw_space_dim(const Weight& w);

// The restricted-duality involution on family specs.
FamilySpec dual_family(const FamilySpec& f);

} // namespace superweight
