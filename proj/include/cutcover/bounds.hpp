#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cutcover {

// M(k) = C(k, floor(k/2)), exact; 1 <= k <= 64
std::uint64_t central_binomial(int k);

// sqrt(2)/2 * 2^k/sqrt(k+1) <= M(k) <= sqrt(3)/2 * 2^k/sqrt(k+1), plus the
// parity-refined variants; compared in exact integer arithmetic. 1 <= k <= 60.
bool check_mk_bounds(int k);

// 2^k - 2^floor(k/2) - 2^ceil(k/2) + 1
long long delta_iii_threshold(int k);

// max { d : d^d * 2^k >= (d+1)^(d+1) }; exact integers for small d,
// certified high-precision interval comparison beyond. 1 <= k <= 40.
long long conjecture_threshold(int k);

// ceil(2^k / e), for the conjecture sanity bound
long long ceil_pow2_over_e(int k);

struct DeltaBounds {
    int k = 0;
    long long lower = 0, upper = 0;
    std::vector<std::string> lower_sources, upper_sources;
};

// interval for the largest d with all P_n^d covered by k cuts; 1 <= k <= 40
DeltaBounds delta_bounds(int k);

struct DegreeClassBounds {
    int dminus = 0, dplus = 0;
    int lower = 0, upper = 0;
};

// tightest interval for the least k covering D(dminus, dplus), combining
// the three general bounds, the exact small-case table, symmetry and
// monotonicity
DegreeClassBounds degree_class_bounds(int dminus, int dplus);

std::string bounds_table_text(int k_max);
std::string bounds_table_json(int k_max);

}  // namespace cutcover
