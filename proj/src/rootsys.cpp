#include "superweight/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace superweight {

std::string slot_name(const Slot& s) {
    return (s.kind == SlotKind::delta ? "d" : "e") + std::to_string(s.index);
}

Slot parse_slot(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'd' && text[0] != 'e'))
        fail("BadBorelOrder", "slot must look like d2 or e1, got '" + text + "'");
    for (std::size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            fail("BadBorelOrder", "slot must look like d2 or e1, got '" + text + "'");
    std::size_t index = std::stoull(text.substr(1));
    if (index == 0) fail("BadBorelOrder", "slot indices start at 1");
    return Slot{text[0] == 'd' ? SlotKind::delta : SlotKind::eps, index};
}

const char* root_parity_name(RootParity p) {
    switch (p) {
        case RootParity::even: return "even";
        case RootParity::odd: return "odd";
        default: return "both";
    }
}

Root::Root(std::vector<RootTerm> t, RootParity p) : terms(std::move(t)), parity(p) {
    std::sort(terms.begin(), terms.end());
}

Root make_root(std::vector<RootTerm> terms, RootParity parity) {
    return Root(std::move(terms), parity);
}

Root Root::negated() const {
    Root out = *this;
    for (auto& t : out.terms) t.coeff = -t.coeff;
    return out;
}

std::string Root::str() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const RootTerm& t = terms[i];
        int c = t.coeff;
        if (c < 0) {
            out += "-";
            c = -c;
        } else if (i > 0) {
            out += "+";
        }
        if (c == 2) out += "2";
        out += slot_name(Slot{t.kind, t.index});
    }
    return out;
}

LetterType AlgebraFamily::letter() const {
    switch (tag) {
        case FamilyTag::sl_m:
        case FamilyTag::sl_inf: return LetterType::A;
        case FamilyTag::ospB_2k:
        case FamilyTag::ospB_inf:
        case FamilyTag::ospB_m: return LetterType::B;
        case FamilyTag::ospC: return LetterType::C;
        case FamilyTag::ospD_2k:
        case FamilyTag::ospD_inf:
        case FamilyTag::ospD_m: return LetterType::D;
        case FamilyTag::p_inf: return LetterType::P;
        default: return LetterType::Q;
    }
}

bool AlgebraFamily::needs_sign_map() const {
    LetterType l = letter();
    return l == LetterType::B || l == LetterType::C || l == LetterType::D || l == LetterType::P;
}

std::string AlgebraFamily::str() const {
    switch (tag) {
        case FamilyTag::sl_m: return "sl:" + std::to_string(*param);
        case FamilyTag::sl_inf: return "sl:inf";
        case FamilyTag::ospB_2k: return "ospB:" + std::to_string(*param);
        case FamilyTag::ospB_inf: return "ospB:inf";
        case FamilyTag::ospB_m: return "ospBm:" + std::to_string(*param);
        case FamilyTag::ospC: return "ospC";
        case FamilyTag::ospD_2k: return "ospD:" + std::to_string(*param);
        case FamilyTag::ospD_inf: return "ospD:inf";
        case FamilyTag::ospD_m: return "ospDm:" + std::to_string(*param);
        case FamilyTag::p_inf: return "p";
        default: return "q";
    }
}

long long AlgebraFamily::x_of(long long n) const {
    if (letter() != LetterType::A) fail("RankMismatch", "x_n is defined for sl families only");
    if (tag == FamilyTag::sl_m) return *param;
    return n - 1;
}

AlgebraFamily parse_family(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::optional<std::string> arg;
    if (colon != std::string::npos) arg = text.substr(colon + 1);

    auto nat_arg = [&](const char* what) -> long long {
        if (!arg || arg->empty()) fail("BadFamilySpec", std::string(what) + " needs a parameter");
        for (char ch : *arg)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                fail("BadFamilySpec", "bad parameter '" + *arg + "' for " + what);
        return std::stoll(*arg);
    };

    if (head == "sl") {
        if (!arg || *arg == "inf") return {FamilyTag::sl_inf, std::nullopt};
        long long m = nat_arg("sl");
        if (m < 1) fail("BadFamilySpec", "sl:m needs m >= 1");
        return {FamilyTag::sl_m, m};
    }
    if (head == "ospB") {
        if (!arg || *arg == "inf") return {FamilyTag::ospB_inf, std::nullopt};
        long long k = nat_arg("ospB");
        if (k < 1) fail("BadFamilySpec", "ospB:k needs k >= 1");
        return {FamilyTag::ospB_2k, k};
    }
    if (head == "ospBm") {
        long long m = nat_arg("ospBm");
        if (m < 1 || m % 2 == 0) fail("BadFamilySpec", "ospBm:m needs odd m >= 1");
        return {FamilyTag::ospB_m, m};
    }
    if (head == "ospC") return {FamilyTag::ospC, std::nullopt};
    if (head == "ospD") {
        if (!arg || *arg == "inf") return {FamilyTag::ospD_inf, std::nullopt};
        long long k = nat_arg("ospD");
        if (k < 1) fail("BadFamilySpec", "ospD:k needs k >= 1");
        return {FamilyTag::ospD_2k, k};
    }
    if (head == "ospDm") {
        long long m = nat_arg("ospDm");
        if (m < 4 || m % 2 == 1) fail("BadFamilySpec", "ospDm:m needs even m >= 4");
        return {FamilyTag::ospD_m, m};
    }
    if (head == "p") return {FamilyTag::p_inf, std::nullopt};
    if (head == "q") return {FamilyTag::q_inf, std::nullopt};
    fail("BadFamilySpec", "unknown algebra family '" + text + "'");
}

std::size_t BorelSeq::n_delta() const {
    std::size_t c = 0;
    for (const auto& s : order)
        if (s.kind == SlotKind::delta) ++c;
    return c;
}

std::size_t BorelSeq::n_eps() const { return order.size() - n_delta(); }

std::string BorelSeq::str() const {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ",";
        out += slot_name(order[i]);
    }
    return out;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) next = text.size();
        std::string piece = text.substr(pos, next - pos);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        out.push_back(a == std::string::npos ? "" : piece.substr(a, b - a + 1));
        pos = next + 1;
        if (next == text.size()) break;
    }
    return out;
}

} // namespace

BorelSeq parse_borel(const std::string& order, const std::optional<std::string>& sign) {
    BorelSeq b;
    for (const auto& piece : split(order, ','))
        b.order.push_back(parse_slot(piece));
    if (sign) {
        auto pieces = split(*sign, ',');
        if (pieces.size() != b.order.size())
            fail("BadBorelOrder", "sign map must list one sign per slot");
        std::map<Slot, int> signs;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (pieces[i] != "+" && pieces[i] != "-")
                fail("BadBorelOrder", "signs must be '+' or '-', got '" + pieces[i] + "'");
            signs[b.order[i]] = pieces[i] == "+" ? 1 : -1;
        }
        b.sign = std::move(signs);
    }
    return b;
}

BorelSeq borel_less(std::size_t n, std::size_t m) {
    BorelSeq b;
    for (std::size_t k = n; k >= 1; --k) b.order.push_back(Slot{SlotKind::delta, k});
    for (std::size_t j = 1; j <= m; ++j) b.order.push_back(Slot{SlotKind::eps, j});
    return b;
}

BorelSeq borel_greater(std::size_t n, std::size_t m) {
    BorelSeq b = borel_less(n, m);
    std::reverse(b.order.begin(), b.order.end());
    return b;
}

BorelSeq parse_borel_named(const std::string& text, std::size_t n, std::size_t m) {
    if (text == "b<") return borel_less(n, m);
    if (text == "b>") return borel_greater(n, m);
    return parse_borel(text);
}

namespace {

void validate_ranks(const AlgebraFamily& fam, std::size_t nd, std::size_t ne) {
    auto expect = [&](bool ok, const std::string& msg) {
        if (!ok) fail("RankMismatch", msg + " for " + fam.str());
    };
    switch (fam.tag) {
        case FamilyTag::sl_m:
            expect(static_cast<long long>(ne) == *fam.param, "eps rank must equal m");
            break;
        case FamilyTag::ospB_2k:
        case FamilyTag::ospD_2k:
            expect(static_cast<long long>(ne) == *fam.param, "eps rank must equal k");
            break;
        case FamilyTag::ospB_m:
            expect(static_cast<long long>(nd) == (*fam.param - 1) / 2,
                   "delta rank must equal (m-1)/2");
            break;
        case FamilyTag::ospD_m:
            expect(static_cast<long long>(nd) == *fam.param / 2, "delta rank must equal m/2");
            break;
        case FamilyTag::ospC:
            expect(nd == 1, "ospC has exactly one delta slot");
            break;
        case FamilyTag::p_inf:
        case FamilyTag::q_inf:
            expect(nd == 0, "p/q types have no delta slots");
            break;
        default:
            break;
    }
}

RootParity parity_of(LetterType letter, const std::vector<RootTerm>& terms) {
    if (letter == LetterType::Q) return RootParity::both;
    bool has_delta = false, has_eps = false;
    for (const auto& t : terms) {
        if (t.kind == SlotKind::delta) has_delta = true;
        else has_eps = true;
    }
    if (has_delta && has_eps) return RootParity::odd;
    if (letter == LetterType::B && terms.size() == 1 && terms[0].kind == SlotKind::eps &&
        (terms[0].coeff == 1 || terms[0].coeff == -1))
        return RootParity::odd; // short eps roots of type B
    if (letter == LetterType::P) {
        // p-type: eps_i - eps_j is even, everything else odd.
        if (terms.size() == 2 && terms[0].coeff + terms[1].coeff == 0) return RootParity::even;
        return RootParity::odd;
    }
    return RootParity::even;
}

Root mk(LetterType letter, std::vector<RootTerm> terms) {
    RootParity p = parity_of(letter, terms);
    return Root(std::move(terms), p);
}

} // namespace

std::vector<Root> roots(const AlgebraFamily& fam, std::size_t nd, std::size_t ne) {
    validate_ranks(fam, nd, ne);
    LetterType L = fam.letter();
    std::vector<Root> out;
    auto d = [](std::size_t k, int c) { return RootTerm{SlotKind::delta, k, c}; };
    auto e = [](std::size_t j, int c) { return RootTerm{SlotKind::eps, j, c}; };

    switch (L) {
        case LetterType::A:
            for (std::size_t r = 1; r <= nd; ++r)
                for (std::size_t s = 1; s <= nd; ++s)
                    if (r != s) out.push_back(mk(L, {d(r, 1), d(s, -1)}));
            for (std::size_t i = 1; i <= ne; ++i)
                for (std::size_t j = 1; j <= ne; ++j)
                    if (i != j) out.push_back(mk(L, {e(i, 1), e(j, -1)}));
            for (std::size_t r = 1; r <= nd; ++r)
                for (std::size_t i = 1; i <= ne; ++i) {
                    out.push_back(mk(L, {d(r, 1), e(i, -1)}));
                    out.push_back(mk(L, {d(r, -1), e(i, 1)}));
                }
            break;
        case LetterType::B:
        case LetterType::D:
        case LetterType::C:
            for (std::size_t r = 1; r <= nd; ++r)
                for (std::size_t s = r + 1; s <= nd; ++s)
                    for (int cr : {1, -1})
                        for (int cs : {1, -1})
                            out.push_back(mk(L, {d(r, cr), d(s, cs)}));
            for (std::size_t i = 1; i <= ne; ++i)
                for (std::size_t j = i + 1; j <= ne; ++j)
                    for (int ci : {1, -1})
                        for (int cj : {1, -1})
                            out.push_back(mk(L, {e(i, ci), e(j, cj)}));
            for (std::size_t i = 1; i <= ne; ++i)
                for (int c : {2, -2})
                    out.push_back(mk(L, {e(i, c)}));
            for (std::size_t r = 1; r <= nd; ++r)
                for (std::size_t i = 1; i <= ne; ++i)
                    for (int cr : {1, -1})
                        for (int ci : {1, -1})
                            out.push_back(mk(L, {d(r, cr), e(i, ci)}));
            if (L == LetterType::B) {
                for (std::size_t r = 1; r <= nd; ++r)
                    for (int c : {1, -1})
                        out.push_back(mk(L, {d(r, c)}));
                for (std::size_t i = 1; i <= ne; ++i)
                    for (int c : {1, -1})
                        out.push_back(mk(L, {e(i, c)}));
            }
            break;
        case LetterType::P:
            for (std::size_t i = 1; i <= ne; ++i)
                for (std::size_t j = 1; j <= ne; ++j)
                    if (i != j) out.push_back(mk(L, {e(i, 1), e(j, -1)}));
            for (std::size_t i = 1; i <= ne; ++i)
                for (std::size_t j = i + 1; j <= ne; ++j) {
                    out.push_back(mk(L, {e(i, 1), e(j, 1)}));
                    out.push_back(mk(L, {e(i, -1), e(j, -1)}));
                }
            for (std::size_t i = 1; i <= ne; ++i)
                out.push_back(mk(L, {e(i, 2)})); // note: -2e_i is not a root
            break;
        case LetterType::Q:
            for (std::size_t i = 1; i <= ne; ++i)
                for (std::size_t j = 1; j <= ne; ++j)
                    if (i != j) out.push_back(mk(L, {e(i, 1), e(j, -1)}));
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Root> positive_roots(const AlgebraFamily& fam, const BorelSeq& b) {
    // The slot set must be exactly {d1..d_nd, e1..e_ne}, each once.
    std::set<Slot> seen;
    std::size_t nd = 0, ne = 0;
    for (const auto& s : b.order) {
        if (!seen.insert(s).second)
            fail("BadBorelOrder", "slot " + slot_name(s) + " listed twice");
        if (s.kind == SlotKind::delta) nd = std::max(nd, s.index);
        else ne = std::max(ne, s.index);
    }
    if (seen.size() != nd + ne)
        fail("BadBorelOrder", "order must cover d1..d" + std::to_string(nd) + ", e1..e" +
                                  std::to_string(ne) + " without gaps");
    validate_ranks(fam, nd, ne);

    const bool needs_sign = fam.needs_sign_map();
    if (needs_sign && !b.sign)
        fail("MissingSignMap", fam.str() + " Borels need a sign map");
    if (!needs_sign && b.sign)
        fail("UnexpectedSignMap", fam.str() + " Borels take no sign map");
    if (needs_sign)
        for (const auto& s : b.order)
            if (!b.sign->count(s))
                fail("MissingSignMap", "no sign for slot " + slot_name(s));

    LetterType L = fam.letter();
    if (L == LetterType::D && !b.order.empty()) {
        const Slot& last = b.order.back();
        if (last.kind == SlotKind::delta && b.sign->at(last) != 1)
            fail("IllegalSignOnMaxDeltaSlot",
                 "ospD requires sign +1 on the maximal slot " + slot_name(last));
    }

    auto sg = [&](const Slot& s) { return needs_sign ? b.sign->at(s) : 1; };
    auto term = [&](const Slot& s, int c) { return RootTerm{s.kind, s.index, c}; };

    std::vector<Root> out;
    const auto& ord = b.order;
    for (std::size_t i = 0; i < ord.size(); ++i) {
        for (std::size_t j = i + 1; j < ord.size(); ++j) {
            const Slot& u = ord[i]; // u precedes v
            const Slot& v = ord[j];
            if (u.kind == v.kind) {
                out.push_back(mk(L, {term(u, sg(u)), term(v, -sg(v))}));
                if (L != LetterType::A && L != LetterType::Q)
                    out.push_back(mk(L, {term(u, sg(u)), term(v, sg(v))}));
            } else if (L == LetterType::A || L == LetterType::Q) {
                out.push_back(mk(L, {term(u, 1), term(v, -1)}));
            }
        }
    }
    if (L == LetterType::B || L == LetterType::C || L == LetterType::D) {
        // Mixed roots: sigma(u)d_u +- sigma(v)e_v for every pair, order-free.
        for (const auto& u : ord) {
            if (u.kind != SlotKind::delta) continue;
            for (const auto& v : ord) {
                if (v.kind != SlotKind::eps) continue;
                out.push_back(mk(L, {term(u, sg(u)), term(v, sg(v))}));
                out.push_back(mk(L, {term(u, sg(u)), term(v, -sg(v))}));
            }
        }
        for (const auto& u : ord) {
            if (u.kind == SlotKind::eps) {
                out.push_back(mk(L, {term(u, 2 * sg(u))}));
                if (L == LetterType::B) out.push_back(mk(L, {term(u, sg(u))}));
            } else if (L == LetterType::B) {
                out.push_back(mk(L, {term(u, sg(u))}));
            }
        }
    }
    if (L == LetterType::P) {
        for (std::size_t i = 0; i < ord.size(); ++i)
            for (std::size_t j = i + 1; j < ord.size(); ++j)
                out.push_back(mk(L, {term(ord[i], sg(ord[i])), term(ord[j], sg(ord[j]))}));
        for (const auto& u : ord)
            if (sg(u) == 1) out.push_back(mk(L, {term(u, 2)}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

NaturalSupport natural_support(const AlgebraFamily& fam) { return NaturalSupport{fam}; }

namespace {

// Locates the single nonzero coordinate of w, if any.
struct SingleMark {
    bool zero_weight = false;
    SlotKind kind = SlotKind::delta;
    std::size_t index = 0;
    Rational value;
};

std::optional<SingleMark> single_mark(const Weight& w) {
    SingleMark m;
    bool found = false;
    for (std::size_t k = 1; k <= w.n(); ++k) {
        if (!w.delta_coeff(k).is_zero()) {
            if (found) return std::nullopt;
            m = {false, SlotKind::delta, k, w.delta_coeff(k)};
            found = true;
        }
    }
    for (std::size_t j = 1; j <= w.m(); ++j) {
        if (!w.eps_coeff(j).is_zero()) {
            if (found) return std::nullopt;
            m = {false, SlotKind::eps, j, w.eps_coeff(j)};
            found = true;
        }
    }
    if (!found) m.zero_weight = true;
    return m;
}

} // namespace

bool NaturalSupport::contains(const Weight& w) const {
    auto m = single_mark(w);
    if (!m) return false;
    LetterType L = family.letter();
    if (m->zero_weight) return L == LetterType::B;
    bool unit = m->value == Rational(1);
    bool pm_unit = unit || m->value == Rational(-1);
    switch (L) {
        case LetterType::A: return unit;
        case LetterType::B: return pm_unit;
        case LetterType::C:
            return pm_unit && (m->kind == SlotKind::eps || m->index == 1);
        case LetterType::D: return pm_unit;
        case LetterType::P: return pm_unit && m->kind == SlotKind::eps;
        case LetterType::Q: return unit && m->kind == SlotKind::eps;
    }
    return false;
}

std::string NaturalSupport::parity_of(const Weight& w) const {
    if (!contains(w))
        fail("NotInSupport", format_weight(w) + " is not a weight of the natural module");
    auto m = single_mark(w);
    LetterType L = family.letter();
    if (L == LetterType::Q) return "both";
    if (m->zero_weight || m->kind == SlotKind::delta) return "even";
    if (L == LetterType::P) return m->value == Rational(1) ? "even" : "odd";
    return "odd";
}

} // namespace superweight
