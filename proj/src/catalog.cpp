#include "superweight/catalog.hpp"
#include "superweight/oddref.hpp"

#include <algorithm>
#include <cctype>

namespace superweight {

// ---------------------------------------------------------------------------
// SeqSpec

long long SeqSpec::a_at(long long n) const {
    if (n < 1) fail("RankTooSmall", "sequence index must be >= 1");
    if (n <= static_cast<long long>(a_prefix.size())) return a_prefix[n - 1];
    return alpha * n + beta;
}

int SeqSpec::b_at(long long n) const {
    if (n < 1) fail("RankTooSmall", "sequence index must be >= 1");
    if (n <= static_cast<long long>(b_prefix.size())) return b_prefix[n - 1];
    return b_tail;
}

IntSet SeqSpec::value_set() const {
    std::vector<long long> explicit_values;
    for (long long v : a_prefix)
        if (v >= 1) explicit_values.push_back(v);
    IntSet values = IntSet::finite(explicit_values);
    long long n0 = static_cast<long long>(a_prefix.size()) + 1;
    long long v0 = alpha * n0 + beta;
    if (alpha == 0) {
        if (v0 >= 1) values = values.unite(IntSet::finite({v0}));
    } else if (alpha == 1) {
        long long lo = std::max<long long>(1, v0);
        values = values.unite(IntSet::named("all").minus(
            IntSet::finite([&] {
                std::vector<long long> below;
                for (long long z = 1; z < lo; ++z) below.push_back(z);
                return below;
            }())));
    } else if (alpha == 2) {
        long long lo = std::max<long long>(1, v0);
        IntSet lane = IntSet::named(v0 % 2 == 0 ? "evens" : "odds");
        std::vector<long long> below;
        for (long long z = 1; z < lo; ++z) below.push_back(z);
        values = values.unite(lane.minus(IntSet::finite(below)));
    } else {
        fail("UnsupportedOrderRule", "value sets need tail slope <= 2");
    }
    return values;
}

bool SeqSpec::tail_equal(const SeqSpec& o) const {
    return alpha == o.alpha && beta == o.beta && b_tail == o.b_tail;
}

void SeqSpec::validate(const std::string& where) const {
    long long horizon = static_cast<long long>(std::max(a_prefix.size(), b_prefix.size())) + 2;
    for (long long n = 1; n <= horizon; ++n) {
        long long an = a_at(n);
        if (an < 0 || (n >= 2 && an < 1))
            fail("BadSequenceSpec", where + ": a_n must be positive (a_1 >= 0)");
        if (b_at(n) != 0 && b_at(n) != 1)
            fail("BadSequenceSpec", where + ": b_n must be 0 or 1");
        if (n > 1) {
            if (an < a_at(n - 1))
                fail("BadSequenceSpec", where + ": a_n must be weakly increasing");
            if (an == a_at(n - 1) && b_at(n) != b_at(n - 1))
                fail("BadSequenceSpec", where + ": b_n must be constant on equal a_n");
        }
    }
    if (alpha < 0) fail("BadSequenceSpec", where + ": tail slope must be >= 0");
}

// ---------------------------------------------------------------------------
// FamilySpec parsing and printing

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::SmuV: return "SmuV";
        case FamilyKind::SmuVdual: return "SmuVdual";
        case FamilyKind::SinfV: return "SinfV";
        case FamilyKind::SinfVdual: return "SinfVdual";
        case FamilyKind::LinfV: return "LinfV";
        case FamilyKind::LinfVdual: return "LinfVdual";
        case FamilyKind::LhalfV: return "LhalfV";
        case FamilyKind::SpinorB: return "SpinorB";
        case FamilyKind::SpinorD: return "SpinorD";
        case FamilyKind::Natural: return "Natural";
        case FamilyKind::Trivial: return "Trivial";
        case FamilyKind::Qpart: return "Qpart";
        case FamilyKind::QpartDual: return "QpartDual";
        default: return "GenSl1";
    }
}

namespace {

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(text.substr(pos));
            break;
        }
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::vector<long long> parse_int_list(const std::string& text, const std::string& where) {
    std::vector<long long> out;
    if (text.empty()) return out;
    for (const auto& piece : split_on(text, ',')) {
        if (piece.empty()) fail("BadFamilySpec", where + ": empty list entry");
        try {
            out.push_back(std::stoll(piece));
        } catch (...) {
            fail("BadFamilySpec", where + ": bad integer '" + piece + "'");
        }
    }
    return out;
}

void require_partition(const std::vector<long long>& mu, bool strict, const std::string& where) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 1) fail("BadPartition", where + ": parts must be positive");
        if (i && (strict ? mu[i] >= mu[i - 1] : mu[i] > mu[i - 1]))
            fail("BadPartition", where + (strict ? ": parts must strictly decrease"
                                                 : ": parts must weakly decrease"));
    }
}

// "n-1", "2n+3", "n", "7"
std::pair<long long, long long> parse_affine_tail(const std::string& text) {
    std::size_t npos = text.find('n');
    if (npos == std::string::npos) {
        try {
            return {0, std::stoll(text)};
        } catch (...) {
            fail("BadFamilySpec", "bad tail '" + text + "'");
        }
    }
    std::string coef = text.substr(0, npos);
    long long alpha = 1;
    if (coef == "-") alpha = -1;
    else if (!coef.empty()) {
        try {
            alpha = std::stoll(coef);
        } catch (...) {
            fail("BadFamilySpec", "bad tail coefficient in '" + text + "'");
        }
    }
    long long beta = 0;
    std::string rest = text.substr(npos + 1);
    if (!rest.empty()) {
        try {
            beta = std::stoll(rest);
        } catch (...) {
            fail("BadFamilySpec", "bad tail offset in '" + text + "'");
        }
    }
    return {alpha, beta};
}

SeqSpec parse_seq_fields(const std::vector<std::string>& fields, const std::string& where) {
    SeqSpec seq;
    bool saw_tail = false;
    for (const auto& field : fields) {
        auto colon = field.find(':');
        if (colon == std::string::npos)
            fail("BadFamilySpec", where + ": expected key:value, got '" + field + "'");
        std::string key = field.substr(0, colon);
        std::string value = field.substr(colon + 1);
        if (key == "a" || key == "prefix") {
            seq.a_prefix = parse_int_list(value, where);
        } else if (key == "tail") {
            std::tie(seq.alpha, seq.beta) = parse_affine_tail(value);
            saw_tail = true;
        } else if (key == "b") {
            auto bs = parse_int_list(value, where);
            if (bs.empty()) fail("BadFamilySpec", where + ": empty b list");
            seq.b_tail = static_cast<int>(bs.back());
            bs.pop_back();
            for (long long b : bs) seq.b_prefix.push_back(static_cast<int>(b));
        } else {
            fail("BadFamilySpec", where + ": unknown key '" + key + "'");
        }
    }
    if (!saw_tail) fail("BadFamilySpec", where + ": sequence needs a tail: field");
    seq.validate(where);
    return seq;
}

IntSet parse_set_fields(const std::vector<std::string>& fields, const std::string& where) {
    std::optional<IntSet> base;
    std::vector<long long> xors;
    for (const auto& field : fields) {
        auto colon = field.find(':');
        if (colon == std::string::npos)
            fail("BadFamilySpec", where + ": expected key:value, got '" + field + "'");
        std::string key = field.substr(0, colon);
        std::string value = field.substr(colon + 1);
        if (key == "base") base = IntSet::named(value);
        else if (key == "xor") xors = parse_int_list(value, where);
        else fail("BadFamilySpec", where + ": unknown key '" + key + "'");
    }
    if (!base) fail("BadFamilySpec", where + ": set needs a base: field");
    for (long long z : xors)
        if (z < 1) fail("BadSetSpec", where + ": xor entries must be positive");
    return base->sym_diff(IntSet::finite(xors));
}

} // namespace

FamilySpec parse_family_spec(const std::string& text) {
    std::string body = text;
    FamilySpec f;
    f.kind = FamilyKind::Trivial;
    if (body.size() >= 3 && body.substr(body.size() - 3) == "!Pi") {
        f.twist = Parity::odd;
        body = body.substr(0, body.size() - 3);
    }
    std::string head = body, args;
    auto bracket = body.find('[');
    if (bracket != std::string::npos) {
        if (body.back() != ']') fail("BadFamilySpec", "missing ']' in '" + text + "'");
        head = body.substr(0, bracket);
        args = body.substr(bracket + 1, body.size() - bracket - 2);
    }
    auto fields = args.empty() ? std::vector<std::string>{} : split_on(args, ';');

    auto the_partition = [&](bool strict) {
        std::vector<long long> mu;
        if (!args.empty()) mu = parse_int_list(args, head);
        require_partition(mu, strict, head);
        return mu;
    };

    if (head == "SmuV" || head == "SmuVdual") {
        f.kind = head == "SmuV" ? FamilyKind::SmuV : FamilyKind::SmuVdual;
        f.mu = the_partition(false);
    } else if (head == "Qpart" || head == "QpartDual") {
        f.kind = head == "Qpart" ? FamilyKind::Qpart : FamilyKind::QpartDual;
        f.mu = the_partition(true);
    } else if (head == "SinfV" || head == "SinfVdual" || head == "LinfV" || head == "LinfVdual") {
        f.kind = head == "SinfV"       ? FamilyKind::SinfV
                 : head == "SinfVdual" ? FamilyKind::SinfVdual
                 : head == "LinfV"     ? FamilyKind::LinfV
                                       : FamilyKind::LinfVdual;
        f.seq = parse_seq_fields(fields, head);
    } else if (head == "LhalfV" || head == "SpinorB" || head == "SpinorD") {
        f.kind = head == "LhalfV"    ? FamilyKind::LhalfV
                 : head == "SpinorB" ? FamilyKind::SpinorB
                                     : FamilyKind::SpinorD;
        f.set = parse_set_fields(fields, head);
        if (f.kind == FamilyKind::LhalfV) {
            if (f.set.is_finite() || f.set.complementation().is_finite())
                fail("BadSetSpec", "LhalfV needs a semi-infinite set");
        }
    } else if (head == "GenSl1") {
        f.kind = FamilyKind::GenericSl1;
        if (fields.empty()) fail("BadFamilySpec", "GenSl1 needs a parameter");
        f.generic_a = Rational::parse(fields[0]);
        if (f.generic_a.is_integer())
            fail("BadFamilySpec", "GenSl1 parameter must be non-integral");
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (fields[i] == "borel:<") f.generic_borel = '<';
            else if (fields[i] == "borel:>") f.generic_borel = '>';
            else fail("BadFamilySpec", "unknown GenSl1 field '" + fields[i] + "'");
        }
    } else if (head == "Natural") {
        f.kind = FamilyKind::Natural;
    } else if (head == "Trivial") {
        f.kind = FamilyKind::Trivial;
    } else {
        fail("BadFamilySpec", "unknown family '" + head + "'");
    }
    return f;
}

std::string FamilySpec::str() const {
    std::string out = family_kind_name(kind);
    switch (kind) {
        case FamilyKind::SmuV:
        case FamilyKind::SmuVdual:
        case FamilyKind::Qpart:
        case FamilyKind::QpartDual: {
            out += "[";
            for (std::size_t i = 0; i < mu.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(mu[i]);
            }
            out += "]";
            break;
        }
        case FamilyKind::SinfV:
        case FamilyKind::SinfVdual:
        case FamilyKind::LinfV:
        case FamilyKind::LinfVdual: {
            out += "[";
            if (!seq.a_prefix.empty()) {
                out += "a:";
                for (std::size_t i = 0; i < seq.a_prefix.size(); ++i) {
                    if (i) out += ",";
                    out += std::to_string(seq.a_prefix[i]);
                }
                out += ";";
            }
            out += "tail:";
            if (seq.alpha == 0) {
                out += std::to_string(seq.beta);
            } else {
                if (seq.alpha != 1) out += std::to_string(seq.alpha);
                out += "n";
                if (seq.beta > 0) out += "+" + std::to_string(seq.beta);
                if (seq.beta < 0) out += std::to_string(seq.beta);
            }
            out += ";b:";
            for (int b : seq.b_prefix) out += std::to_string(b) + ",";
            out += std::to_string(seq.b_tail);
            out += "]";
            break;
        }
        case FamilyKind::LhalfV:
        case FamilyKind::SpinorB:
        case FamilyKind::SpinorD:
            out += "[" + set.str() + "]";
            break;
        case FamilyKind::GenericSl1:
            out += "[" + generic_a.str() + ";borel:" + generic_borel + "]";
            break;
        default:
            break;
    }
    if (twist == Parity::odd) out += "!Pi";
    return out;
}

// ---------------------------------------------------------------------------
// Highest weights at finite truncations

namespace {

void require_kind_algebra(const FamilySpec& f, const AlgebraFamily& alg) {
    LetterType L = alg.letter();
    auto ok = [&]() -> bool {
        switch (f.kind) {
            case FamilyKind::SmuV:
            case FamilyKind::SmuVdual:
            case FamilyKind::SinfV:
            case FamilyKind::SinfVdual:
            case FamilyKind::LinfV:
            case FamilyKind::LinfVdual:
            case FamilyKind::LhalfV: return L == LetterType::A;
            case FamilyKind::GenericSl1:
                return alg.tag == FamilyTag::sl_m && *alg.param == 1;
            case FamilyKind::Qpart:
            case FamilyKind::QpartDual: return L == LetterType::Q;
            case FamilyKind::SpinorB: return L == LetterType::B;
            case FamilyKind::SpinorD: return L == LetterType::D;
            default: return true; // Natural, Trivial
        }
    }();
    if (!ok)
        fail("UnsupportedFamily",
             std::string(family_kind_name(f.kind)) + " does not live over " + alg.str());
}

void validate_for_algebra(const FamilySpec& f, const AlgebraFamily& alg) {
    require_kind_algebra(f, alg);
    if ((f.kind == FamilyKind::LinfV || f.kind == FamilyKind::LinfVdual) &&
        alg.tag == FamilyTag::sl_m) {
        // Exterior towers over a finite right side force step-at-most-one
        // growth and a constant parity exponent.
        const SeqSpec& s = f.seq;
        if (s.alpha > 1)
            fail("BadSequenceSpec", "LinfV over sl:m needs a_{n+1} - a_n <= 1");
        long long start = *alg.param + 1;
        long long horizon = static_cast<long long>(
                                std::max(s.a_prefix.size(), s.b_prefix.size())) + 2;
        for (long long n = std::max<long long>(start, 2); n <= horizon; ++n) {
            if (s.a_at(n) - s.a_at(n - 1) > 1)
                fail("BadSequenceSpec", "LinfV over sl:m needs a_{n+1} - a_n <= 1");
            if (n > start && s.b_at(n) != s.b_at(n - 1))
                fail("BadSequenceSpec", "LinfV over sl:m needs constant b_n");
        }
    }
}

Weight zeros(long long n, long long x) {
    Weight w;
    w.left.assign(n, Rational(0));
    w.right.assign(x, Rational(0));
    return w;
}

} // namespace

void require_family_over(const FamilySpec& f, const AlgebraFamily& alg) {
    require_kind_algebra(f, alg);
}

TruncatedHighestWeight family_highest_weight(const FamilySpec& f, long long n,
                                             const AlgebraFamily& alg) {
    validate_for_algebra(f, alg);
    if (n < 1) fail("RankTooSmall", "truncation rank must be >= 1");
    const LetterType L = alg.letter();
    const long long k = static_cast<long long>(f.mu.size());

    auto sl_x = [&]() {
        long long x = alg.x_of(n);
        if (x < 1) fail("RankTooSmall", "truncation has empty right side at n=" +
                                            std::to_string(n));
        return x;
    };

    switch (f.kind) {
        case FamilyKind::Trivial: {
            if (L == LetterType::A) return {zeros(n, sl_x()), '<', f.twist};
            if (L == LetterType::Q || L == LetterType::P) return {zeros(0, n), '<', f.twist};
            if (alg.tag == FamilyTag::ospC) return {zeros(1, n), '<', f.twist};
            return {zeros(n, 0), '<', f.twist};
        }
        case FamilyKind::Natural: {
            if (L == LetterType::A) {
                FamilySpec nat = f;
                nat.kind = FamilyKind::SmuV;
                nat.mu = {1};
                return family_highest_weight(nat, n, alg);
            }
            if (L == LetterType::Q || L == LetterType::P) {
                Weight w = zeros(0, n);
                w.eps_coeff(1) = Rational(1);
                return {w, '<', f.twist};
            }
            if (alg.tag == FamilyTag::ospC) {
                Weight w = zeros(1, n);
                w.delta_coeff(1) = Rational(1);
                return {w, '<', f.twist};
            }
            Weight w = zeros(n, 0);
            w.delta_coeff(n) = Rational(1); // the highest natural weight delta_n
            return {w, '<', f.twist};
        }
        case FamilyKind::SmuV: {
            if (n < k) fail("RankTooSmall", "need n >= partition length");
            Weight w = zeros(n, sl_x());
            for (long long i = 0; i < k; ++i) w.left[i] = Rational(f.mu[i]);
            return {w, '<', f.twist};
        }
        case FamilyKind::SmuVdual: {
            if (n < k) fail("RankTooSmall", "need n >= partition length");
            Weight w = zeros(n, sl_x());
            for (long long i = 0; i < k; ++i) w.left[i] = Rational(-f.mu[i]);
            return {w, '>', f.twist};
        }
        case FamilyKind::SinfV:
        case FamilyKind::SinfVdual: {
            long long a = f.seq.a_at(n);
            Weight w = zeros(n, sl_x());
            w.left[0] = Rational(f.kind == FamilyKind::SinfV ? a : -a);
            return {w, f.kind == FamilyKind::SinfV ? '<' : '>',
                    f.twist + (f.seq.b_at(n) ? Parity::odd : Parity::even)};
        }
        case FamilyKind::LinfV:
        case FamilyKind::LinfVdual: {
            long long x = sl_x();
            long long a = f.seq.a_at(n);
            Weight w = zeros(n, x);
            w.right[x - 1] = Rational(f.kind == FamilyKind::LinfV ? a : -a);
            return {w, f.kind == FamilyKind::LinfV ? '>' : '<',
                    f.twist + (f.seq.b_at(n) ? Parity::odd : Parity::even)};
        }
        case FamilyKind::LhalfV: {
            long long c = 0;
            for (long long z = 1; z <= n; ++z)
                if (f.set.contains(z)) ++c;
            Weight w = zeros(n, 0);
            for (long long i = 0; i < c; ++i) w.left[i] = Rational(1);
            return {w, '<', f.twist};
        }
        case FamilyKind::SpinorB:
        case FamilyKind::SpinorD: {
            Weight w = zeros(n, 0);
            for (long long kk = 1; kk <= n; ++kk)
                w.delta_coeff(kk) = f.set.contains(kk) ? Rational(1, 2) : Rational(-1, 2);
            return {w, '<', f.twist};
        }
        case FamilyKind::Qpart:
        case FamilyKind::QpartDual: {
            if (n < k) fail("RankTooSmall", "need n >= partition length");
            Weight w = zeros(0, n);
            for (long long i = 0; i < k; ++i)
                w.right[i] = Rational(f.kind == FamilyKind::Qpart ? f.mu[i] : -f.mu[i]);
            return {w, f.kind == FamilyKind::Qpart ? '<' : '>', f.twist};
        }
        default: { // GenericSl1
            Weight w = zeros(n, 1);
            w.right[0] = f.generic_a;
            return {w, f.generic_borel, f.twist};
        }
    }
}

TruncatedHighestWeight family_highest_weight_lt(const FamilySpec& f, long long n,
                                                const AlgebraFamily& alg) {
    TruncatedHighestWeight direct = family_highest_weight(f, n, alg);
    if (direct.borel == '<') return direct;

    switch (f.kind) {
        case FamilyKind::SinfVdual: {
            long long a = f.seq.a_at(n);
            Weight w = a == 0 ? zeros(n, alg.x_of(n)) : omega_table(OmegaKind::O2, n, alg.x_of(n), a);
            return {w, '<', direct.twist};
        }
        case FamilyKind::LinfV: {
            long long a = f.seq.a_at(n);
            Weight w = a == 0 ? zeros(n, alg.x_of(n)) : omega_table(OmegaKind::O3, n, alg.x_of(n), a);
            return {w, '<', direct.twist};
        }
        case FamilyKind::SmuVdual: {
            Weight w = omega_table(OmegaKind::O6, n, alg.x_of(n), f.mu);
            return {w, '<', direct.twist};
        }
        case FamilyKind::GenericSl1: {
            // L_{b(>)}(0^n|a) = L_{b(<)}(1^n|a-n) when a is non-integral.
            Weight w = zeros(n, 1);
            for (auto& c : w.left) c = Rational(1);
            w.right[0] = f.generic_a - Rational(n);
            return {w, '<', direct.twist};
        }
        default:
            fail("UnsupportedFamily", std::string(family_kind_name(f.kind)) +
                                          " has no b(<) presentation here");
    }
}

// ---------------------------------------------------------------------------
// Supports

SupportSet support_of(const FamilySpec& f, const AlgebraFamily& alg) {
    SupportSet s;
    s.algebra = alg;
    switch (f.kind) {
        case FamilyKind::SmuV: s.kind = SupportKind::S_mu; s.mu = f.mu; break;
        case FamilyKind::SmuVdual: s.kind = SupportKind::S_mu_dual; s.mu = f.mu; break;
        case FamilyKind::SinfV: s.kind = SupportKind::S_A; s.seq = f.seq; break;
        case FamilyKind::SinfVdual: s.kind = SupportKind::S_A_dual; s.seq = f.seq; break;
        case FamilyKind::LhalfV: s.kind = SupportKind::lambda_A; s.base = f.set; break;
        case FamilyKind::SpinorB: s.kind = SupportKind::spinor_B; s.base = f.set; break;
        case FamilyKind::SpinorD: s.kind = SupportKind::spinor_D; s.base = f.set; break;
        case FamilyKind::Natural: s.kind = SupportKind::natural; break;
        case FamilyKind::Trivial: s.kind = SupportKind::singleton; break;
        default:
            fail("UnsupportedFamily", std::string(family_kind_name(f.kind)) +
                                          " has no support predicate here");
    }
    return s;
}

namespace {

std::vector<long long> integral_coords(const std::vector<Rational>& coords) {
    std::vector<long long> out;
    for (const auto& c : coords) {
        if (!c.is_integer())
            fail("NonIntegralWeight", "support queries here must be integral");
        out.push_back(c.num());
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

bool tower_support_contains(const SeqSpec& seq, std::vector<long long> lam, bool dual) {
    if (dual)
        for (auto& v : lam) v = -v;
    for (long long v : lam)
        if (v < 0) return false;
    if (seq.alpha != 0) return false; // finitely supported queries need a flat tail
    long long horizon =
        std::max<long long>(static_cast<long long>(lam.size()),
                            static_cast<long long>(seq.a_prefix.size())) + 1;
    long long partial = 0;
    auto lam_at = [&](long long i) {
        return i <= static_cast<long long>(lam.size()) ? lam[i - 1] : 0;
    };
    for (long long cut = 1; cut <= horizon; ++cut) {
        partial += lam_at(cut);
        if (partial != seq.a_at(cut)) continue;
        bool tail_ok = true;
        for (long long i = cut + 1; i <= horizon + 1; ++i)
            if (lam_at(i) != seq.a_at(i) - seq.a_at(i - 1)) {
                tail_ok = false;
                break;
            }
        if (tail_ok) return true;
    }
    return false;
}

} // namespace

bool support_contains(const SupportSet& s, const SupportQuery& q) {
    switch (s.kind) {
        case SupportKind::lambda_A: {
            if (!q.subset) fail("BadQuery", "exterior supports take subset queries");
            IntSet a_only = s.base.minus(*q.subset);
            IntSet b_only = q.subset->minus(s.base);
            return a_only.is_finite() && b_only.is_finite() &&
                   *a_only.finite_size() == *b_only.finite_size();
        }
        case SupportKind::spinor_B:
        case SupportKind::spinor_D: {
            if (!q.subset) fail("BadParity", "spinor supports take omega subset queries");
            IntSet diff = s.base.sym_diff(*q.subset);
            if (!diff.is_finite()) return false;
            if (s.kind == SupportKind::spinor_B) return true;
            return *diff.finite_size() % 2 == 0;
        }
        case SupportKind::S_A:
        case SupportKind::S_A_dual: {
            if (!q.coords) fail("BadQuery", "tower supports take coordinate queries");
            return tower_support_contains(s.seq, integral_coords(*q.coords),
                                          s.kind == SupportKind::S_A_dual);
        }
        case SupportKind::S_mu:
        case SupportKind::S_mu_dual: {
            if (!q.coords) fail("BadQuery", "box supports take coordinate queries");
            auto lam = integral_coords(*q.coords);
            for (std::size_t i = 0; i < lam.size(); ++i) {
                long long v = s.kind == SupportKind::S_mu ? lam[i] : -lam[i];
                long long cap = i < s.mu.size() ? s.mu[i] : 0;
                if (v < 0 || v > cap) return false;
            }
            return true;
        }
        case SupportKind::natural: {
            if (!q.weight) fail("BadQuery", "natural supports take weight queries");
            return natural_support(s.algebra).contains(*q.weight);
        }
        default: { // singleton
            if (q.weight) {
                for (const auto& c : q.weight->left)
                    if (!c.is_zero()) return false;
                for (const auto& c : q.weight->right)
                    if (!c.is_zero()) return false;
                return true;
            }
            if (q.coords) {
                for (const auto& c : *q.coords)
                    if (!c.is_zero()) return false;
                return true;
            }
            fail("BadQuery", "singleton supports take weight queries");
        }
    }
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Fold the global Pi twist of a sequence family into its b-data and rewrite
// the degenerate partition cases, so equality becomes literal.
FamilySpec normalize_spec(const FamilySpec& f, const AlgebraFamily& alg) {
    FamilySpec out = f;
    switch (f.kind) {
        case FamilyKind::SinfV:
        case FamilyKind::SinfVdual:
        case FamilyKind::LinfV:
        case FamilyKind::LinfVdual:
            if (f.twist == Parity::odd) {
                for (auto& b : out.seq.b_prefix) b ^= 1;
                out.seq.b_tail ^= 1;
                out.twist = Parity::even;
            }
            break;
        case FamilyKind::SmuV:
        case FamilyKind::SmuVdual:
        case FamilyKind::Qpart:
        case FamilyKind::QpartDual:
            if (f.mu.empty()) {
                out.kind = FamilyKind::Trivial;
                out.mu.clear();
            }
            break;
        case FamilyKind::Natural:
            if (alg.letter() == LetterType::A) {
                out.kind = FamilyKind::SmuV;
                out.mu = {1};
            } else if (alg.letter() == LetterType::Q) {
                out.kind = FamilyKind::Qpart;
                out.mu = {1};
            }
            break;
        default:
            break;
    }
    return out;
}

} // namespace

bool isomorphic(const FamilySpec& f, const FamilySpec& g, const AlgebraFamily& alg) {
    require_kind_algebra(f, alg);
    require_kind_algebra(g, alg);
    FamilySpec a = normalize_spec(f, alg);
    FamilySpec b = normalize_spec(g, alg);
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case FamilyKind::Trivial:
        case FamilyKind::Natural:
            return a.twist == b.twist;
        case FamilyKind::SmuV:
        case FamilyKind::SmuVdual:
            return a.mu == b.mu && a.twist == b.twist;
        case FamilyKind::SinfV:
        case FamilyKind::SinfVdual:
        case FamilyKind::LinfV:
        case FamilyKind::LinfVdual:
            return a.seq.tail_equal(b.seq);
        case FamilyKind::Qpart:
        case FamilyKind::QpartDual:
            // A Pi twist is absorbed exactly when the strict partition has
            // odd length.
            return a.mu == b.mu && (a.mu.size() % 2 == 1 || a.twist == b.twist);
        case FamilyKind::LhalfV: {
            IntSet ab = a.set.minus(b.set), ba = b.set.minus(a.set);
            return ab.is_finite() && ba.is_finite() &&
                   *ab.finite_size() == *ba.finite_size() && a.twist == b.twist;
        }
        case FamilyKind::SpinorB:
        case FamilyKind::SpinorD: {
            IntSet diff = a.set.sym_diff(b.set);
            if (!diff.is_finite() || a.twist != b.twist) return false;
            if (a.kind == FamilyKind::SpinorB) return true;
            return *diff.finite_size() % 2 == 0;
        }
        default: // GenericSl1
            return a.generic_a == b.generic_a && a.generic_borel == b.generic_borel &&
                   a.twist == b.twist;
    }
}

// ---------------------------------------------------------------------------
// Borel conditions from order rules

OrderRule parse_order_rule(const std::string& text) {
    OrderRule rule;
    IntSet explicit_used;
    int rest_count = 0;
    for (const auto& piece : split_on(text, '|')) {
        OrderRule::Bucket bucket;
        if (piece == "rest") {
            bucket.named = true;
            bucket.is_rest = true;
            if (++rest_count > 1) fail("UnsupportedOrderRule", "at most one 'rest' bucket");
        } else if (piece == "evens" || piece == "odds") {
            bucket.named = true;
            bucket.set = IntSet::named(piece);
        } else {
            bucket.list = parse_int_list(piece, "order");
            for (long long z : bucket.list) {
                if (z < 1) fail("UnsupportedOrderRule", "indices must be positive");
                if (explicit_used.contains(z))
                    fail("UnsupportedOrderRule", "index " + std::to_string(z) + " listed twice");
                explicit_used = explicit_used.unite(IntSet::finite({z}));
            }
        }
        rule.buckets.push_back(std::move(bucket));
    }
    // Explicit indices win over named buckets; named buckets must be
    // pairwise disjoint; 'rest' takes whatever is left.  The buckets have
    // to tile all of Z_{>0}.
    IntSet named_union;
    for (auto& bucket : rule.buckets) {
        if (!bucket.named || bucket.is_rest) continue;
        bucket.set = bucket.set.minus(explicit_used);
        if (!bucket.set.intersect(named_union).empty())
            fail("UnsupportedOrderRule", "named buckets overlap");
        named_union = named_union.unite(bucket.set);
    }
    IntSet covered = explicit_used.unite(named_union);
    for (auto& bucket : rule.buckets)
        if (bucket.is_rest) bucket.set = covered.complementation();
    if (rest_count == 0 && !(covered == IntSet::named("all")))
        fail("UnsupportedOrderRule", "order must cover every index; add a 'rest' bucket");
    return rule;
}

namespace {

// True when no element of `later` precedes an element of `earlier` fails;
// concretely: checks that every element of A comes before every element of
// its complement under the rule order.
bool set_before_complement(const IntSet& A, const OrderRule& rule) {
    IntSet comp = A.complementation();
    bool seen_comp = false;
    for (const auto& bucket : rule.buckets) {
        if (!bucket.named) {
            for (long long z : bucket.list) {
                if (A.contains(z)) {
                    if (seen_comp) return false;
                } else {
                    seen_comp = true;
                }
            }
        } else {
            IntSet in_a = bucket.set.intersect(A);
            IntSet in_c = bucket.set.intersect(comp);
            if (seen_comp && !in_a.empty()) return false;
            if (!in_c.empty()) {
                if (!in_a.is_finite()) return false;
                if (!in_a.empty() && *in_a.max_element() > *in_c.min_element()) return false;
                seen_comp = true;
            }
        }
    }
    return true;
}

// Number of elements available at the very end of the rule order (only
// trailing explicit buckets have last elements).
long long trailing_explicit(const OrderRule& rule) {
    long long count = 0;
    for (auto it = rule.buckets.rbegin(); it != rule.buckets.rend(); ++it) {
        if (it->named) break;
        count += static_cast<long long>(it->list.size());
    }
    return count;
}

} // namespace

bool hw_borel_condition(const FamilySpec& f, const OrderRule& order, const AlgebraFamily& alg) {
    validate_for_algebra(f, alg);
    switch (f.kind) {
        case FamilyKind::SinfV:
        case FamilyKind::SinfVdual:
            return false; // never highest weight, for any Borel
        case FamilyKind::Trivial:
            return true;
        case FamilyKind::Natural:
            if (alg.letter() != LetterType::A)
                fail("UnsupportedFamily", "no Borel condition here for " + alg.str());
            return true;
        case FamilyKind::SmuV:
            // Needs an initial chain of length |mu|; rule orders are
            // well-ordered from the front, so one always exists.
            return true;
        case FamilyKind::SmuVdual:
            return trailing_explicit(order) >= static_cast<long long>(f.mu.size());
        case FamilyKind::LhalfV:
            return set_before_complement(f.set, order);
        case FamilyKind::LinfV:
        case FamilyKind::LinfVdual: {
            if (f.seq.alpha > 1) return false; // gaps > 1 infinitely often
            IntSet values = f.seq.value_set();
            if (f.kind == FamilyKind::LinfV) return set_before_complement(values, order);
            return set_before_complement(values.complementation(), order);
        }
        default:
            fail("UnsupportedFamily", std::string(family_kind_name(f.kind)) +
                                          " has no stated Borel condition");
    }
}

// ---------------------------------------------------------------------------
// Classification descriptors

Classification classify_bounded(const AlgebraFamily& alg) {
    Classification c;
    c.algebra = alg;
    switch (alg.letter()) {
        case LetterType::A:
            c.families = {"SmuV[mu]",      "Pi SmuV[mu]",  "SmuVdual[mu]", "Pi SmuVdual[mu]",
                          "SinfV[A]",      "SinfVdual[A]", "LinfV[A]",     "LinfVdual[A]"};
            if (alg.tag == FamilyTag::sl_m) {
                c.notes.push_back("sequence families carry a constant parity exponent b_n");
                if (*alg.param == 1) {
                    c.families.push_back("GenSl1[a;borel:>]");
                    c.families.push_back("GenSl1[a;borel:<]");
                    c.notes.push_back(
                        "generic rank-one families take non-integral a; the two Borel "
                        "presentations are listed separately");
                }
            }
            break;
        case LetterType::Q:
            c.families = {"Qpart[gamma]", "QpartDual[gamma]"};
            c.notes.push_back("gamma runs over strict partitions; Pi twists coincide with the "
                              "untwisted module exactly when the length is odd");
            break;
        default:
            c.families = {"Trivial", "Pi Trivial", "Natural", "Pi Natural"};
            break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Singular shapes

namespace {

bool all_equal(const std::vector<Rational>& v, const Rational& val) {
    return std::all_of(v.begin(), v.end(), [&](const Rational& c) { return c == val; });
}

bool is_padded_partition(const std::vector<Rational>& v, int sign) {
    // sign +1: weakly decreasing >= 0; sign -1: the negative mirror.
    Rational prev = sign > 0 ? Rational(1LL << 30) : Rational(-(1LL << 30));
    for (const auto& c : v) {
        if (!c.is_integer()) return false;
        if (sign > 0 && (c < Rational(0) || c > prev)) return false;
        if (sign < 0 && (c > Rational(0) || c < prev)) return false;
        prev = c;
    }
    return true;
}

bool head_then_zero(const std::vector<Rational>& v, bool positive) {
    if (v.empty()) return false;
    if (!v[0].is_integer()) return false;
    if (positive && v[0] <= Rational(0)) return false;
    if (!positive && v[0] >= Rational(0)) return false;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!v[i].is_zero()) return false;
    return true;
}

bool first_then_zero_right(const std::vector<Rational>& r, long long x, bool relax,
                           int sign) {
    if (static_cast<long long>(r.size()) != x || x < 1) return false;
    for (std::size_t j = 1; j < r.size(); ++j)
        if (!r[j].is_zero()) return false;
    const Rational& a = r[0];
    if (relax && x == 1) return true; // any scalar is admitted at x = 1
    if (!a.is_integer()) return false;
    return sign > 0 ? a >= Rational(0) : a <= Rational(0);
}

} // namespace

bool validate_singular_shape(char the_case, const Weight& w, long long n, long long x) {
    if (static_cast<long long>(w.n()) != n || static_cast<long long>(w.m()) != x) return false;
    const auto& L = w.left;
    const auto& R = w.right;
    const bool right_zero = all_equal(R, Rational(0));
    const bool zero_weight = right_zero && all_equal(L, Rational(0));

    switch (the_case) {
        case 'a':
            if (is_padded_partition(L, +1) && right_zero) return true;
            return all_equal(L, Rational(1)) && first_then_zero_right(R, x, true, +1);
        case 'b':
            if (is_padded_partition(L, -1) && right_zero) return true;
            return all_equal(L, Rational(-1)) && first_then_zero_right(R, x, true, -1);
        case 'c':
            if (zero_weight) return true;
            return head_then_zero(L, true) && right_zero;
        case 'd':
            if (zero_weight) return true;
            return head_then_zero(L, false) && right_zero;
        case 'e': {
            if (right_zero) {
                // (1^a, 0^(n-a))
                bool ones = true;
                std::size_t i = 0;
                while (i < L.size() && L[i] == Rational(1)) ++i;
                for (; i < L.size(); ++i)
                    if (!L[i].is_zero()) ones = false;
                if (ones) return true;
            }
            return all_equal(L, Rational(1)) && first_then_zero_right(R, x, false, +1);
        }
        default:
            fail("BadFamilySpec", "singular shape cases are a..e");
    }
}

// ---------------------------------------------------------------------------
// Odds and ends

Rational extend_to_gl(const std::vector<Rational>& beta, const Rational& c) {
    Rational sum(0);
    for (const auto& v : beta) {
        if (!v.is_integer())
            fail("NotInRootLatticeTranslate", "root-lattice elements are integral");
        sum += v;
    }
    if (!sum.is_zero())
        fail("NotInRootLatticeTranslate", "root-lattice elements have zero coordinate sum");
    return beta.empty() ? c : c + beta[0];
}

long long q_hw_space_dim(const Weight& w) {
    long long nonzero = 0;
    for (const auto& c : w.left)
        if (!c.is_zero()) ++nonzero;
    for (const auto& c : w.right)
        if (!c.is_zero()) ++nonzero;
    return 1LL << (nonzero / 2);
}

FamilySpec dual_family(const FamilySpec& f) {
    FamilySpec out = f;
    switch (f.kind) {
        case FamilyKind::SmuV: out.kind = FamilyKind::SmuVdual; break;
        case FamilyKind::SmuVdual: out.kind = FamilyKind::SmuV; break;
        case FamilyKind::SinfV: out.kind = FamilyKind::SinfVdual; break;
        case FamilyKind::SinfVdual: out.kind = FamilyKind::SinfV; break;
        case FamilyKind::LinfV: out.kind = FamilyKind::LinfVdual; break;
        case FamilyKind::LinfVdual: out.kind = FamilyKind::LinfV; break;
        case FamilyKind::Qpart: out.kind = FamilyKind::QpartDual; break;
        case FamilyKind::QpartDual: out.kind = FamilyKind::Qpart; break;
        case FamilyKind::GenericSl1:
            out.generic_a = -f.generic_a;
            out.generic_borel = f.generic_borel == '<' ? '>' : '<';
            break;
        default:
            break; // Natural, Trivial, LhalfV, spinors stay put
    }
    return out;
}

} // namespace superweight
