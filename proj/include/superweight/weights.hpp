#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superweight/rational.hpp"

namespace superweight {

// Z/2 parity, toggled by the shift functor Pi.
enum class Parity { even, odd };

inline Parity operator+(Parity a, Parity b) {
    return a == b ? Parity::even : Parity::odd;
}
inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

// A weight of gl/sl/osp/... truncated at ranks (n, m), stored as two tuples
// of exact rationals.
//
// Coordinate dictionary (fixed once for the whole library): the left tuple
// lists delta-coordinates highest slot first, left[0] <-> delta_n, ...,
// left[n-1] <-> delta_1; the right tuple lists epsilon-coordinates in index
// order, right[0] <-> eps_1, ..., right[m-1] <-> eps_m.  This is the order
// in which weights display as "(l_1,...,l_n|r_1,...,r_m)" and it makes the
// rho-shift index-free.
struct Weight {
    std::vector<Rational> left;
    std::vector<Rational> right;

    Weight() = default;
    Weight(std::vector<Rational> l, std::vector<Rational> r)
        : left(std::move(l)), right(std::move(r)) {}

    std::size_t n() const { return left.size(); }
    std::size_t m() const { return right.size(); }
    bool same_shape(const Weight& o) const { return n() == o.n() && m() == o.m(); }
    bool is_integral() const;

    // Coefficient of delta_k (1 <= k <= n) resp. eps_j (1 <= j <= m).
    const Rational& delta_coeff(std::size_t k) const { return left[n() - k]; }
    const Rational& eps_coeff(std::size_t j) const { return right[j - 1]; }
    Rational& delta_coeff(std::size_t k) { return left[n() - k]; }
    Rational& eps_coeff(std::size_t j) { return right[j - 1]; }

    bool operator==(const Weight& o) const = default;
    auto operator<=>(const Weight& o) const = default;
};

// rho-shifted marks of an integral weight: a_i = left_i + (n+1-i),
// b_j = j - right_j.  Dominance is strict monotony of both tuples.
struct ShiftedWeight {
    std::vector<long long> a;
    std::vector<long long> b;
    bool dominant = false;

    bool operator==(const ShiftedWeight& o) const = default;
};

// rho(n|m) = (n,...,2,1 | -1,-2,...,-m).
Weight rho(std::size_t n, std::size_t m);

// Shifted-mark identification of integral weights.  Errors: NonIntegralWeight.
ShiftedWeight shift(const Weight& w);

// Inverse of the identification on dominant marks.  Errors: NotDominant.
Weight unshift(const ShiftedWeight& s);

// Adds c to every left coordinate and -c to every right coordinate (the
// gl-vs-sl central ambiguity at fixed shape).
Weight central_shift(const Weight& w, const Rational& c);

// The unique c with w = central_shift(v, c), if any.  Unique as soon as one
// side is nonempty; the empty shape returns 0.  Errors: ShapeMismatch.
std::optional<Rational> central_shift_between(const Weight& v, const Weight& w);

// Sum of all coordinates (the central character used to align sl-weights).
Rational c_of(const Weight& w);

struct Root; // rootsys.hpp

// Invariant form with (delta_i, delta_j) = d_ij, (eps_i, eps_j) = -d_ij,
// mixed pairs orthogonal; so pairing(w, delta_i - eps_j) = w(delta_i) + w(eps_j).
// Errors: IndexOutOfRange.
Rational pairing(const Weight& w, const Root& r);

// Literal grammar: "(" COORDS "|" COORDS ")" with items RATIONAL or
// RATIONAL^NAT (repetition), e.g. "(0^3,-1|1)".  parse_weight throws
// DomainError("BadWeightLiteral") on malformed input.
Weight parse_weight(const std::string& text);
std::string format_weight(const Weight& w); // repetitions expanded

} // namespace superweight
