#pragma once

#include <map>
#include <vector>

#include "superweight/weights.hpp"

namespace superweight {

// Weight multiplicities of one finite-rank simple, with the total dimension
// split even|odd.
struct MultiplicityTable {
    std::map<Weight, long long> entries;
    long long even_dim = 0;
    long long odd_dim = 0;

    long long total() const { return even_dim + odd_dim; }
    long long max_multiplicity() const;
};

// dim of the a-th super symmetric power of an (n|m)-space:
// sum over i+j=a of C(n+i-1,i)*C(m,j).
long long super_sym_dim(long long a, long long n, long long m);

// dim of the a-th super exterior power: sum of C(n,i)*C(m+j-1,j).
long long super_ext_dim(long long a, long long n, long long m);

// Enumeration budget for tableau runs; SUPERWEIGHT_BUDGET overrides.
long long enumeration_budget();

// Weight multiplicities of the covariant simple with hook partition mu over
// an (n|m)-space, by explicit (n|m) hook semistandard tableau enumeration:
// unprimed entries 1..n weakly increase along rows and strictly down
// columns, primed entries 1'..m' strictly increase along rows and weakly
// down columns, and unprimed entries precede primed ones.  The weight of a
// tableau is its content.  Errors: BudgetExceeded when |mu| exceeds the
// budget.
MultiplicityTable hook_multiplicities(const std::vector<long long>& mu, long long n,
                                      long long m);

// Maximum multiplicity of hook_multiplicities(mu, n, m) for each n in
// [n_lo, n_hi]; the probe whose eventual constancy witnesses boundedness
// at desk scale.
std::vector<long long> max_multiplicity_sweep(const std::vector<long long>& mu, long long n_lo,
                                              long long n_hi, long long m);

} // namespace superweight
