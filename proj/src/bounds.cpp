#include "cutcover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <gmp.h>
#include <mpfr.h>

#include "json.hpp"

namespace cutcover {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    u128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * static_cast<u128>(n - r + i) / static_cast<u128>(i);
    }
    return static_cast<u64>(acc);
}

}  // namespace

u64 central_binomial(int k) {
    if (k < 1 || k > 64) throw std::invalid_argument("central_binomial: k out of range (1..64)");
    return binomial(k, k / 2);
}

bool check_mk_bounds(int k) {
    if (k < 1 || k > 60) throw std::invalid_argument("check_mk_bounds: k out of range (1..60)");
    const u128 m = central_binomial(k);
    const u128 m2 = m * m;
    auto pow2 = [](int e) { return u128{1} << e; };
    // lower sqrt(2)/2 * 2^k / sqrt(q)  <= M  <=>  2^(2k-1) <= M^2 * q
    auto lower_holds = [&](int q) { return pow2(2 * k - 1) <= m2 * static_cast<u128>(q); };
    // upper M <= sqrt(3)/2 * 2^k / sqrt(q)  <=>  M^2 * q <= 3 * 2^(2k-2)
    auto upper_holds = [&](int q) { return m2 * static_cast<u128>(q) <= 3 * pow2(2 * k - 2); };

    bool stated = lower_holds(k + 1) && upper_holds(k + 1);
    bool refined = (k % 2 == 1) ? lower_holds(k + 1) && upper_holds(k + 2)
                                : lower_holds(k) && upper_holds(k + 1);
    return stated && refined;
}

long long delta_iii_threshold(int k) {
    if (k < 1 || k > 62) throw std::invalid_argument("delta_iii_threshold: k out of range (1..62)");
    return (1LL << k) - (1LL << (k / 2)) - (1LL << ((k + 1) / 2)) + 1;
}

namespace {

// sign of (d+1)^(d+1) - 2^k * d^d with exact integers (feasible while the
// operands stay around a megabit)
int compare_exact(long long d, int k) {
    mpz_t lhs, rhs;
    mpz_init(lhs);
    mpz_init(rhs);
    mpz_ui_pow_ui(lhs, static_cast<unsigned long>(d + 1), static_cast<unsigned long>(d + 1));
    mpz_ui_pow_ui(rhs, static_cast<unsigned long>(d), static_cast<unsigned long>(d));
    mpz_mul_2exp(rhs, rhs, static_cast<unsigned long>(k));
    int cmp = mpz_cmp(lhs, rhs);
    mpz_clear(lhs);
    mpz_clear(rhs);
    return cmp;
}

// certified comparison of ln((d+1)^(d+1)) and ln(2^k * d^d) by interval
// arithmetic with escalating precision; equality is impossible for d >= 2
// (d and d+1 are coprime), so this terminates
int compare_certified(long long d, int k) {
    if (static_cast<double>(d) * std::max(1.0, std::log2(static_cast<double>(d))) < 5.0e5)
        return compare_exact(d, k);
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        mpfr_t lhs_lo, lhs_hi, rhs_lo, rhs_hi, t;
        mpfr_inits2(prec, lhs_lo, lhs_hi, rhs_lo, rhs_hi, t, static_cast<mpfr_ptr>(nullptr));
        // lhs = (d+1) * ln(d+1)
        mpfr_set_ui(t, static_cast<unsigned long>(d + 1), MPFR_RNDD);
        mpfr_log(lhs_lo, t, MPFR_RNDD);
        mpfr_mul_ui(lhs_lo, lhs_lo, static_cast<unsigned long>(d + 1), MPFR_RNDD);
        mpfr_log(lhs_hi, t, MPFR_RNDU);
        mpfr_mul_ui(lhs_hi, lhs_hi, static_cast<unsigned long>(d + 1), MPFR_RNDU);
        // rhs = k * ln 2 + d * ln d
        mpfr_set_ui(t, static_cast<unsigned long>(d), MPFR_RNDD);
        mpfr_log(rhs_lo, t, MPFR_RNDD);
        mpfr_mul_ui(rhs_lo, rhs_lo, static_cast<unsigned long>(d), MPFR_RNDD);
        mpfr_const_log2(t, MPFR_RNDD);
        mpfr_mul_ui(t, t, static_cast<unsigned long>(k), MPFR_RNDD);
        mpfr_add(rhs_lo, rhs_lo, t, MPFR_RNDD);
        mpfr_set_ui(t, static_cast<unsigned long>(d), MPFR_RNDU);
        mpfr_log(rhs_hi, t, MPFR_RNDU);
        mpfr_mul_ui(rhs_hi, rhs_hi, static_cast<unsigned long>(d), MPFR_RNDU);
        mpfr_const_log2(t, MPFR_RNDU);
        mpfr_mul_ui(t, t, static_cast<unsigned long>(k), MPFR_RNDU);
        mpfr_add(rhs_hi, rhs_hi, t, MPFR_RNDU);

        int result = 0;
        bool decided = false;
        if (mpfr_cmp(lhs_hi, rhs_lo) < 0) {
            result = -1;
            decided = true;
        } else if (mpfr_cmp(lhs_lo, rhs_hi) > 0) {
            result = 1;
            decided = true;
        }
        mpfr_clears(lhs_lo, lhs_hi, rhs_lo, rhs_hi, t, static_cast<mpfr_ptr>(nullptr));
        if (decided) return result;
        if (prec > 1 << 20) throw std::logic_error("conjecture threshold comparison did not separate");
    }
}

}  // namespace

long long conjecture_threshold(int k) {
    if (k < 1 || k > 40) throw std::invalid_argument("conjecture_threshold: k out of range (1..40)");
    // condition holds iff (d+1)^(d+1) <= 2^k * d^d; monotone in d
    auto holds = [&](long long d) { return compare_certified(d, k) <= 0; };
    if (!holds(1)) return 0;
    long long lo = 1, hi = 1;
    while (holds(hi * 2)) hi *= 2;
    hi *= 2;  // holds(lo), !holds(hi)
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        (holds(mid) ? lo : hi) = mid;
    }
    return lo;
}

long long ceil_pow2_over_e(int k) {
    if (k < 1 || k > 62) throw std::invalid_argument("ceil_pow2_over_e: k out of range");
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        mpfr_t lo, hi;
        mpfr_inits2(prec, lo, hi, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_ui(lo, 1, MPFR_RNDD);
        mpfr_exp(lo, lo, MPFR_RNDU);  // e rounded up -> quotient rounded down
        mpfr_ui_div(lo, 1, lo, MPFR_RNDD);
        mpfr_mul_2ui(lo, lo, static_cast<unsigned long>(k), MPFR_RNDD);
        mpfr_set_ui(hi, 1, MPFR_RNDU);
        mpfr_exp(hi, hi, MPFR_RNDD);
        mpfr_ui_div(hi, 1, hi, MPFR_RNDU);
        mpfr_mul_2ui(hi, hi, static_cast<unsigned long>(k), MPFR_RNDU);
        long long clo = static_cast<long long>(mpfr_get_d(lo, MPFR_RNDD));
        // ceil of both ends
        mpfr_t tmp;
        mpfr_init2(tmp, prec);
        mpfr_ceil(tmp, lo);
        long long c1 = mpfr_get_si(tmp, MPFR_RNDN);
        mpfr_ceil(tmp, hi);
        long long c2 = mpfr_get_si(tmp, MPFR_RNDN);
        mpfr_clears(lo, hi, tmp, static_cast<mpfr_ptr>(nullptr));
        (void)clo;
        if (c1 == c2) return c1;
        if (prec > 1 << 16) throw std::logic_error("2^k/e too close to an integer");
    }
}

DeltaBounds delta_bounds(int k) {
    if (k < 1 || k > 40) throw std::invalid_argument("delta_bounds: k out of range (1..40)");
    DeltaBounds b;
    b.k = k;

    struct Candidate {
        long long value;
        std::string tag;
    };
    std::vector<Candidate> lowers, uppers;
    lowers.push_back({static_cast<long long>(central_binomial(k)) - 1, "M(k)-1"});
    if (k >= 2) lowers.push_back({1LL << (k - 2), "2^k/4"});
    if (k >= 4) lowers.push_back({(5LL << k) / 16, "5/16*2^k"});
    for (long long r = 2; r <= 16; r *= 2) {
        // requires k >= r*log2(r)
        long long rlogr = r * static_cast<long long>(std::log2(static_cast<double>(r)) + 0.5);
        if (k < rlogr) continue;
        u128 num = 1;
        for (int i = 0; i < r; ++i) num *= static_cast<u128>(r - 1);
        num <<= k;
        u128 den = 1;
        for (int i = 0; i < r; ++i) den *= static_cast<u128>(r);
        lowers.push_back({static_cast<long long>(num / den), "(1-1/r)^r*2^k, r=" + std::to_string(r)});
    }
    uppers.push_back({(1LL << k) - 1, "2^k-1"});
    if (k >= 3) uppers.push_back({(1LL << (k - 1)) - 2, "2^k/2-2"});

    static const long long exact[5] = {-1, 0, 1, 2, 5};
    if (k <= 4) {
        const char* tag = k <= 2 ? "exact (derived small k)" : "exact";
        b.lower = b.upper = exact[k];
        b.lower_sources = {tag};
        b.upper_sources = {tag};
        return b;
    }

    b.lower = -1;
    for (const auto& c : lowers)
        if (c.value > b.lower) b.lower = c.value;
    for (const auto& c : lowers)
        if (c.value == b.lower) b.lower_sources.push_back(c.tag);
    b.upper = uppers.front().value;
    for (const auto& c : uppers)
        if (c.value < b.upper) b.upper = c.value;
    for (const auto& c : uppers)
        if (c.value == b.upper) b.upper_sources.push_back(c.tag);
    return b;
}

namespace {

// exact statements about c(a, b): upper facts c(a,b) <= k, lower facts c(a,b) > k
struct ClassFact {
    int a, b, k;
};
const ClassFact kUpperFacts[] = {{2, 1, 3}, {5, 2, 4}, {3, 3, 4}, {1, 0, 2}, {0, 0, 1}};
const ClassFact kLowerFacts[] = {{2, -1, 2}, {1, 1, 2}, {3, -1, 3}, {2, 2, 3}, {6, -1, 4}, {4, 3, 4}};

long long mk_or_large(int k) {
    if (k == 0) return 1;  // M extends to C(0,0)
    if (k > 64) return 1LL << 62;
    return static_cast<long long>(central_binomial(k));
}

}  // namespace

DegreeClassBounds degree_class_bounds(int dminus, int dplus) {
    if (dminus < -1 || dplus < -1) throw std::invalid_argument("degree bounds must be >= -1");
    const long long a = dminus, b = dplus;
    const long long sum = a + b;
    const long long mx = std::max(a, b);

    int upper = -1;
    for (int k = 0; k <= 70; ++k)
        if (sum <= mk_or_large(k) - 2) {
            upper = k;
            break;
        }
    for (const ClassFact& f : kUpperFacts) {
        bool applies = (a <= f.a && b <= f.b) || (a <= f.b && b <= f.a);
        if (applies) upper = std::min(upper, f.k);
    }

    int lower = 0;
    for (int k = 0; k <= 70; ++k) {
        if (mx > mk_or_large(k) - 1) lower = std::max(lower, k + 1);
        if (sum > mk_or_large(k + 1) - 2) lower = std::max(lower, k + 1);
    }
    for (const ClassFact& f : kLowerFacts) {
        bool applies = (a >= f.a && b >= f.b) || (a >= f.b && b >= f.a);
        if (applies) lower = std::max(lower, f.k + 1);
    }

    return {dminus, dplus, lower, upper};
}

std::string bounds_table_text(int k_max) {
    std::ostringstream out;
    out << "  k        M(k)   delta lower   delta upper   thm-iii   conjecture\n";
    for (int k = 1; k <= k_max; ++k) {
        DeltaBounds db = delta_bounds(k);
        out << std::setw(3) << k << std::setw(12) << central_binomial(k) << std::setw(14)
            << db.lower << std::setw(14) << db.upper << std::setw(10) << delta_iii_threshold(k)
            << std::setw(13) << conjecture_threshold(k) << "\n";
    }
    return out.str();
}

std::string bounds_table_json(int k_max) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 1; k <= k_max; ++k) {
        DeltaBounds db = delta_bounds(k);
        nlohmann::json row;
        row["k"] = k;
        row["M"] = central_binomial(k);
        row["delta_lower"] = db.lower;
        row["delta_upper"] = db.upper;
        row["lower_sources"] = db.lower_sources;
        row["upper_sources"] = db.upper_sources;
        row["thm_iii_threshold"] = delta_iii_threshold(k);
        row["conjecture_threshold"] = conjecture_threshold(k);
        rows.push_back(row);
    }
    return rows.dump(2);
}

}  // namespace cutcover
