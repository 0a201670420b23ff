#include "superweight/oddref.hpp"

#include <algorithm>
#include <map>

namespace superweight {

HighestWeightState odd_reflect(const HighestWeightState& s, std::size_t pos) {
    if (pos < 1 || pos >= s.borel.order.size())
        fail("IndexOutOfRange", "no adjacent pair at position " + std::to_string(pos));
    Slot u = s.borel.order[pos - 1];
    Slot v = s.borel.order[pos];
    if (u.kind == v.kind)
        fail("NotOddSimple", "slots " + slot_name(u) + "," + slot_name(v) + " have equal kind");

    // alpha = (earlier slot) - (later slot), an odd isotropic simple root.
    Root alpha = make_root({RootTerm{u.kind, u.index, 1}, RootTerm{v.kind, v.index, -1}},
                           RootParity::odd);
    HighestWeightState out = s;
    std::swap(out.borel.order[pos - 1], out.borel.order[pos]);
    if (!pairing(s.weight, alpha).is_zero()) {
        const Slot& dslot = u.kind == SlotKind::delta ? u : v;
        const Slot& eslot = u.kind == SlotKind::eps ? u : v;
        int dcoeff = dslot == u ? 1 : -1; // coefficient of the delta term in alpha
        out.weight.delta_coeff(dslot.index) -= Rational(dcoeff);
        out.weight.eps_coeff(eslot.index) += Rational(dcoeff);
        out.parity = flip(out.parity);
    }
    return out;
}

namespace {

std::vector<Slot> kind_subsequence(const BorelSeq& b, SlotKind k) {
    std::vector<Slot> out;
    for (const auto& s : b.order)
        if (s.kind == k) out.push_back(s);
    return out;
}

} // namespace

std::pair<Weight, Parity> transport(const Weight& w, const BorelSeq& from, const BorelSeq& to) {
    auto fd = kind_subsequence(from, SlotKind::delta);
    auto fe = kind_subsequence(from, SlotKind::eps);
    auto td = kind_subsequence(to, SlotKind::delta);
    auto te = kind_subsequence(to, SlotKind::eps);
    {
        auto sd = fd, se = fe, ud = td, ue = te;
        std::sort(sd.begin(), sd.end());
        std::sort(ud.begin(), ud.end());
        std::sort(se.begin(), se.end());
        std::sort(ue.begin(), ue.end());
        if (sd != ud || se != ue)
            fail("SlotMismatch", "Borels must order the same slot multiset");
    }
    if (w.n() != fd.size() || w.m() != fe.size())
        fail("ShapeMismatch", "weight shape does not match the Borel");

    // Even-Weyl alignment: relabel slots so both Borels agree within each
    // kind.  sigma sends the i-th delta of `from` to the i-th delta of `to`.
    std::map<Slot, Slot> sigma;
    for (std::size_t i = 0; i < fd.size(); ++i) sigma[fd[i]] = td[i];
    for (std::size_t i = 0; i < fe.size(); ++i) sigma[fe[i]] = te[i];

    HighestWeightState state;
    state.weight = w;
    for (const auto& [src, dst] : sigma) {
        if (src == dst) continue;
        if (src.kind == SlotKind::delta)
            state.weight.delta_coeff(dst.index) = w.delta_coeff(src.index);
        else
            state.weight.eps_coeff(dst.index) = w.eps_coeff(src.index);
    }
    for (const auto& s : from.order) state.borel.order.push_back(sigma.at(s));

    // Bring each target slot into place; every adjacent swap on the way
    // crosses a slot of the other kind, so each step is an odd reflection.
    for (std::size_t t = 0; t < to.order.size(); ++t) {
        std::size_t cur = t;
        while (state.borel.order[cur] != to.order[t]) ++cur;
        for (; cur > t; --cur) state = odd_reflect(state, cur);
    }
    return {state.weight, state.parity};
}

OmegaKind parse_omega_kind(const std::string& text) {
    if (text == "O2") return OmegaKind::O2;
    if (text == "O3") return OmegaKind::O3;
    if (text == "O6") return OmegaKind::O6;
    fail("BadFamilySpec", "omega kind must be O2, O3 or O6, got '" + text + "'");
}

namespace {

void check_ranks(long long n, long long x) {
    if (n < 1 || x < 1) fail("NonPositiveRank", "need n >= 1 and x >= 1");
}

void check_partition(const std::vector<long long>& mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 1) fail("BadPartition", "partition parts must be positive");
        if (i && mu[i] > mu[i - 1]) fail("BadPartition", "partition must be weakly decreasing");
    }
}

Weight from_ll(std::vector<long long> left, std::vector<long long> right) {
    Weight w;
    for (long long v : left) w.left.emplace_back(v);
    for (long long v : right) w.right.emplace_back(v);
    return w;
}

} // namespace

Weight omega_table(OmegaKind kind, long long n, long long x, long long a) {
    check_ranks(n, x);
    if (a < 1) fail("BadPartition", "need a >= 1");
    std::vector<long long> left, right;
    switch (kind) {
        case OmegaKind::O2:
            if (a <= x) {
                left.assign(n, 0);
                right.assign(x - a, 0);
                right.insert(right.end(), a, -1);
            } else {
                left.assign(n - 1, 0);
                left.push_back(x - a);
                right.assign(x, -1);
            }
            return from_ll(left, right);
        case OmegaKind::O3:
            if (a <= n) {
                left.assign(a, 1);
                left.insert(left.end(), n - a, 0);
                right.assign(x, 0);
            } else {
                left.assign(n, 1);
                right.push_back(a - n);
                right.insert(right.end(), x - 1, 0);
            }
            return from_ll(left, right);
        default:
            return omega_table(OmegaKind::O6, n, x, std::vector<long long>{a});
    }
}

Weight omega_table(OmegaKind kind, long long n, long long x, const std::vector<long long>& mu) {
    if (kind != OmegaKind::O6)
        fail("BadPartition", "only O6 takes a partition parameter");
    check_ranks(n, x);
    check_partition(mu);
    const long long k = static_cast<long long>(mu.size());
    auto part = [&](long long j) { return j <= k ? mu[j - 1] : 0; }; // 1-based, 0 beyond

    std::vector<long long> left, right;
    if (k > 0 && mu[0] >= x) {
        // l = number of parts of size >= x
        long long l = 0;
        while (l < k && mu[l] >= x) ++l;
        if (n < l) fail("NonPositiveRank", "partition too long for rank n");
        left.assign(n - l, 0);
        for (long long j = l; j >= 1; --j) left.push_back(x - part(j));
        right.assign(x - part(l + 1), -l);
        for (long long j = l + 1; j <= k; ++j)
            right.insert(right.end(), part(j) - part(j + 1), -j);
    } else {
        left.assign(n, 0);
        right.assign(x - part(1), 0);
        for (long long j = 1; j <= k; ++j)
            right.insert(right.end(), part(j) - part(j + 1), -j);
    }
    return from_ll(left, right);
}

} // namespace superweight
