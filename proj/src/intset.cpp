#include "superweight/intset.hpp"

#include <algorithm>

namespace superweight {

bool IntSet::tail_contains(long long z) const {
    switch (tail_) {
        case Tail::none: return false;
        case Tail::all: return true;
        case Tail::evens: return z % 2 == 0;
        default: return z % 2 == 1;
    }
}

void IntSet::normalize() {
    while (!prefix_.empty() &&
           prefix_.back() == tail_contains(static_cast<long long>(prefix_.size())))
        prefix_.pop_back();
}

IntSet IntSet::finite(const std::vector<long long>& elems) {
    IntSet s;
    for (long long z : elems) {
        if (z < 1) fail("BadSetSpec", "set elements must be positive");
        if (static_cast<std::size_t>(z) > s.prefix_.size()) s.prefix_.resize(z, false);
        s.prefix_[z - 1] = true;
    }
    s.normalize();
    return s;
}

IntSet IntSet::named(const std::string& name) {
    if (name == "all") return IntSet(Tail::all);
    if (name == "none") return IntSet(Tail::none);
    if (name == "evens") return IntSet(Tail::evens);
    if (name == "odds") return IntSet(Tail::odds);
    fail("BadSetSpec", "unknown base set '" + name + "' (use all|none|evens|odds)");
}

bool IntSet::contains(long long z) const {
    if (z < 1) return false;
    if (static_cast<std::size_t>(z) <= prefix_.size()) return prefix_[z - 1];
    return tail_contains(z);
}

bool IntSet::empty() const {
    if (tail_ != Tail::none) return false;
    return std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; });
}

namespace {

IntSet::Tail combine_tail(IntSet::Tail a, IntSet::Tail b, bool (*op)(bool, bool)) {
    // Evaluate the op on the two periodic patterns at an even and an odd
    // position and reassemble the pattern.
    auto at = [](IntSet::Tail t, long long z) {
        switch (t) {
            case IntSet::Tail::none: return false;
            case IntSet::Tail::all: return true;
            case IntSet::Tail::evens: return z % 2 == 0;
            default: return z % 2 == 1;
        }
    };
    bool even_in = op(at(a, 2), at(b, 2));
    bool odd_in = op(at(a, 1), at(b, 1));
    if (even_in && odd_in) return IntSet::Tail::all;
    if (even_in) return IntSet::Tail::evens;
    if (odd_in) return IntSet::Tail::odds;
    return IntSet::Tail::none;
}

} // namespace

IntSet IntSet::complementation() const {
    IntSet out = *this;
    for (std::size_t i = 0; i < out.prefix_.size(); ++i) out.prefix_[i] = !out.prefix_[i];
    switch (tail_) {
        case Tail::none: out.tail_ = Tail::all; break;
        case Tail::all: out.tail_ = Tail::none; break;
        case Tail::evens: out.tail_ = Tail::odds; break;
        default: out.tail_ = Tail::evens; break;
    }
    out.normalize();
    return out;
}

#define SUPERWEIGHT_SET_OP(NAME, OP)                                                     \
    IntSet IntSet::NAME(const IntSet& o) const {                                         \
        IntSet out;                                                                      \
        std::size_t h = std::max(prefix_.size(), o.prefix_.size());                      \
        out.prefix_.resize(h);                                                           \
        for (std::size_t i = 0; i < h; ++i) {                                            \
            long long z = static_cast<long long>(i + 1);                                 \
            out.prefix_[i] = OP(contains(z), o.contains(z));                             \
        }                                                                                \
        out.tail_ = combine_tail(tail_, o.tail_, OP);                                    \
        out.normalize();                                                                 \
        return out;                                                                      \
    }

namespace {
inline bool op_or(bool a, bool b) { return a || b; }
inline bool op_and(bool a, bool b) { return a && b; }
inline bool op_minus(bool a, bool b) { return a && !b; }
inline bool op_xor(bool a, bool b) { return a != b; }
} // namespace

SUPERWEIGHT_SET_OP(unite, op_or)
SUPERWEIGHT_SET_OP(intersect, op_and)
SUPERWEIGHT_SET_OP(minus, op_minus)
SUPERWEIGHT_SET_OP(sym_diff, op_xor)

#undef SUPERWEIGHT_SET_OP

std::vector<long long> IntSet::elements_up_to(long long bound) const {
    std::vector<long long> out;
    for (long long z = 1; z <= bound; ++z)
        if (contains(z)) out.push_back(z);
    return out;
}

std::optional<long long> IntSet::finite_size() const {
    if (!is_finite()) return std::nullopt;
    long long c = 0;
    for (bool b : prefix_)
        if (b) ++c;
    return c;
}

std::optional<long long> IntSet::min_element() const {
    for (std::size_t i = 0; i < prefix_.size(); ++i)
        if (prefix_[i]) return static_cast<long long>(i + 1);
    long long h = static_cast<long long>(prefix_.size());
    switch (tail_) {
        case Tail::none: return std::nullopt;
        case Tail::all: return h + 1;
        case Tail::evens: return h % 2 == 0 ? h + 2 : h + 1;
        default: return h % 2 == 0 ? h + 1 : h + 2;
    }
}

std::optional<long long> IntSet::max_element() const {
    if (!is_finite()) return std::nullopt;
    for (std::size_t i = prefix_.size(); i-- > 0;)
        if (prefix_[i]) return static_cast<long long>(i + 1);
    return std::nullopt;
}

std::string IntSet::str() const {
    std::string out = "{";
    auto elems = elements_up_to(static_cast<long long>(prefix_.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(elems[i]);
    }
    if (tail_ != Tail::none) {
        if (!elems.empty()) out += ",";
        long long h = static_cast<long long>(prefix_.size());
        out += tail_ == Tail::all ? ("z>" + std::to_string(h))
                                  : (tail_ == Tail::evens ? "evens>" : "odds>") +
                                        std::to_string(h);
    }
    return out + "}";
}

bool IntSet::operator==(const IntSet& o) const {
    return prefix_ == o.prefix_ && tail_ == o.tail_;
}

} // namespace superweight
