#include "superweight/characters.hpp"

#include <algorithm>
#include <cstdlib>

namespace superweight {

long long MultiplicityTable::max_multiplicity() const {
    long long best = 0;
    for (const auto& [w, c] : entries) best = std::max(best, c);
    return best;
}

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact at every step
    }
    return r;
}

} // namespace

long long super_sym_dim(long long a, long long n, long long m) {
    if (a < 0) return 0;
    long long total = 0;
    for (long long j = 0; j <= a; ++j) {
        long long i = a - j;
        total += binom(n + i - 1, i) * binom(m, j);
    }
    return total;
}

long long super_ext_dim(long long a, long long n, long long m) {
    if (a < 0) return 0;
    long long total = 0;
    for (long long j = 0; j <= a; ++j) {
        long long i = a - j;
        total += binom(n, i) * binom(m + j - 1, j);
    }
    return total;
}

long long enumeration_budget() {
    if (const char* env = std::getenv("SUPERWEIGHT_BUDGET")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 12;
}

namespace {

struct TableauScan {
    const std::vector<long long>& mu;
    long long n, m;
    std::vector<std::vector<int>> cells; // entries: 1..n unprimed, n+1..n+m primed
    std::vector<long long> content;      // counts per entry value
    MultiplicityTable table;
    long long primed_cells = 0;

    bool primed(int v) const { return v > n; }

    bool admissible(std::size_t r, std::size_t c, int v) const {
        if (c > 0) {
            int left = cells[r][c - 1];
            if (primed(v) && !primed(left)) {
                // unprimed-then-primed along the row is fine
            } else if (!primed(v) && primed(left)) {
                return false;
            } else if (primed(v)) {
                if (v <= left) return false; // primed strict in rows
            } else {
                if (v < left) return false; // unprimed weak in rows
            }
        }
        if (r > 0 && c < cells[r - 1].size()) {
            int top = cells[r - 1][c];
            if (primed(v) && !primed(top)) {
                // fine down a column as well
            } else if (!primed(v) && primed(top)) {
                return false;
            } else if (primed(v)) {
                if (v < top) return false; // primed weak in columns
            } else {
                if (v <= top) return false; // unprimed strict in columns
            }
        }
        return true;
    }

    void record() {
        Weight w;
        w.left.reserve(n);
        w.right.reserve(m);
        for (long long v = 1; v <= n; ++v) w.left.emplace_back(content[v]);
        for (long long v = n + 1; v <= n + m; ++v) w.right.emplace_back(content[v]);
        ++table.entries[w];
        if (primed_cells % 2 == 0) ++table.even_dim;
        else ++table.odd_dim;
    }

    void fill(std::size_t r, std::size_t c) {
        if (r == cells.size()) {
            record();
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == cells[r].size()) {
            ++nr;
            nc = 0;
        }
        for (int v = 1; v <= n + m; ++v) {
            if (!admissible(r, c, v)) continue;
            cells[r][c] = v;
            ++content[v];
            if (primed(v)) ++primed_cells;
            fill(nr, nc);
            if (primed(v)) --primed_cells;
            --content[v];
        }
        cells[r][c] = 0;
    }
};

} // namespace

MultiplicityTable hook_multiplicities(const std::vector<long long>& mu, long long n,
                                      long long m) {
    long long size = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 1) fail("BadPartition", "partition parts must be positive");
        if (i && mu[i] > mu[i - 1]) fail("BadPartition", "partition must weakly decrease");
        size += mu[i];
    }
    if (size > enumeration_budget())
        fail("BudgetExceeded", "|mu| = " + std::to_string(size) + " exceeds the budget of " +
                                   std::to_string(enumeration_budget()));
    if (n < 0 || m < 0) fail("NonPositiveRank", "ranks must be nonnegative");

    TableauScan scan{mu, n, m, {}, {}, {}, 0};
    for (long long row : mu) scan.cells.emplace_back(row, 0);
    scan.content.assign(n + m + 1, 0);
    if (mu.empty()) {
        scan.record(); // the empty tableau
        return scan.table;
    }
    scan.fill(0, 0);
    return scan.table;
}

std::vector<long long> max_multiplicity_sweep(const std::vector<long long>& mu, long long n_lo,
                                              long long n_hi, long long m) {
    std::vector<long long> out;
    for (long long n = n_lo; n <= n_hi; ++n)
        out.push_back(hook_multiplicities(mu, n, m).max_multiplicity());
    return out;
}

} // namespace superweight
