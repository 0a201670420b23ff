#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superweight/errors.hpp"

namespace superweight {

// Subsets of Z_{>0} that are eventually periodic mod 2: an explicit bitmap
// up to a horizon plus one of four tail patterns.  Closed under the boolean
// operations, which is all the infinite-set bookkeeping the catalog needs
// (classes like "differ by finitely many elements" become decidable).
class IntSet {
public:
    enum class Tail { none, evens, odds, all };

    IntSet() : tail_(Tail::none) {}
    explicit IntSet(Tail tail) : tail_(tail) {}

    static IntSet finite(const std::vector<long long>& elems);
    // Named bases for the CLI grammar: all, none, evens, odds.
    static IntSet named(const std::string& name);

    bool contains(long long z) const;
    bool is_finite() const { return tail_ == Tail::none; }
    bool empty() const;

    IntSet complementation() const; // within Z_{>0}
    IntSet unite(const IntSet& o) const;
    IntSet intersect(const IntSet& o) const;
    IntSet minus(const IntSet& o) const;
    IntSet sym_diff(const IntSet& o) const;

    // Elements <= bound, ascending.
    std::vector<long long> elements_up_to(long long bound) const;
    // Size when finite.
    std::optional<long long> finite_size() const;
    std::optional<long long> min_element() const;
    std::optional<long long> max_element() const; // finite sets only

    std::string str() const;

    bool operator==(const IntSet& o) const;

private:
    bool tail_contains(long long z) const;
    void normalize();

    std::vector<bool> prefix_; // membership of 1..prefix_.size()
    Tail tail_;
};

} // namespace superweight
