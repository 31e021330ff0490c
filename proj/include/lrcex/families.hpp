#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrcex/bigint.hpp"
#include "lrcex/lr.hpp"

namespace lrcex {

/// The rectangular partition (width^height).
struct Rectangle {
    long long width;
    long long height;
};
using RectangleSequence = std::vector<Rectangle>;

Partition rectangle_partition(const Rectangle& r);
/// Multiplies widths only: the stretch of (w^h) is ((N w)^h).
RectangleSequence stretch_rectangles(const RectangleSequence& rects, long long factor);

/// lambda(n) = (4^n, 3^{2n}, 2^n), mu(n) = (3^n, 2^n, 1^n); the log-concavity
/// failures live at c^{lambda}_{mu,mu} and its stretches.
struct OkounkovFamily {
    Partition lambda, mu;
};
OkounkovFamily okounkov_family(long long n);

/// lambda(n) = (2^n, 1^{2n}) with four column rectangles (1^n).
struct KostkaFamily {
    Partition lambda;
    RectangleSequence rects;
};
KostkaFamily kostka_family(long long n);

/// K_{lambda,R}: multi-LR coefficient of lambda against the rectangles.
BigInt parabolic_kostka(const Partition& lambda, const RectangleSequence& rects);

struct ComparisonRecord {
    BigInt lhs, rhs;
    bool holds;
    std::string context;
};

/// lhs = f(N+1) f(N-1) vs rhs = f(N)^2; holds iff lhs <= rhs. N >= 1.
ComparisonRecord log_concavity_check(const std::function<BigInt(long long)>& values_at,
                                     long long n_index);

/// Nonvanishing test against the target (n,n): total size 2n and
/// n - first(i) - second(j) - second(k) >= 0 for {i,j,k} = {1,2,3}.
/// Throws std::invalid_argument when a partition has more than two rows
/// or a part exceeding n.
bool horn_nonvanishing_two_rows(long long n, const std::array<Partition, 3>& triple);

struct HornTriple {
    std::array<Partition, 3> triple;
    /// Exponents (n1..n6) of the matching degree-n monomial in six variables.
    std::array<long long, 6> monomial;
};

/// All nonvanishing triples, with their monomial exponents.
std::vector<HornTriple> horn_triples_two_rows(long long n);
/// Count only (grouped by size; fast enough for n in the hundreds).
BigInt horn_count_two_rows(long long n);

/// Triples of one-row partitions with parts <= n and sizes summing to n;
/// the stretch-1 analogue of the two-row count.
BigInt one_row_triple_count(long long n);

/// LR filling of (4n,4n,3n,n)/(3n,2n,n) with content (3n,2n,n) determined by
/// the multiplicities a = (a1,a2,a3) of 1,2,3 in the last row; a sums to n.
LRFilling e_tableau(long long n, const std::array<long long, 3>& a);

/// LR filling of (4n,4n,4n,4n,3n,3n,n,n)/(3n,3n,2n,2n,n,n) with content
/// (3n,3n,2n,2n,n,n) determined by the column-type multiplicities
/// a = (a12, a24, a26, a34, a46, a56) summing to n; rows 7-8 lay the typed
/// columns out in that order, rows 5-6 are the unique completion.
LRFilling d_tableau(long long n, const std::array<long long, 6>& a);

enum class Family { Okounkov, Kostka };

struct CounterexampleRow {
    long long n;
    BigInt value1, value2;    // counted values at stretch 1 and 2
    BigInt closed1, closed2;  // binom(n+2,2) and binom(n+5,5)
    bool closed_match;
    std::optional<bool> si_dim_ok;  // Kronecker-quiver sum cross-check, within bounds
    std::optional<bool> direct_ok;  // direct LR / parabolic Kostka, when requested
    ComparisonRecord record;        // the N=1 log-concavity comparison
};

struct ReportOptions {
    Family family = Family::Okounkov;
    long long si_bound_m1 = 6;
    long long si_bound_m2 = 2;
    bool verify_direct = false;
    long long direct_bound_m1 = 6;
    long long direct_bound_m2 = 2;
    int threads = 1;
};

/// One row per n in [n_lo, n_hi]. Values come from the counting routes, the
/// closed forms are recomputed and compared each time; nothing about where
/// log-concavity first fails is hard-coded.
std::vector<CounterexampleRow> counterexample_report(long long n_lo, long long n_hi,
                                                     const ReportOptions& opts = {});

/// c^{k lambda(n)}_{k mu(n), k mu(n)}: k <= 2 via the counting routes,
/// k >= 3 through the Kronecker quiver sum (cost grows quickly with n, k).
BigInt family_stretch_value(long long n, long long k, int threads = 1);

/// K_{m lambda(n), m R(n)} against the equivalent single LR coefficient
/// c^{((4m)^n,(3m)^n,(2m)^n,m^n)}_{((3m)^n,(2m)^n,m^n), ((2m)^n,m^{2n})};
/// holds iff the two computations agree.
ComparisonRecord kostka_as_lr_identity(long long m, long long n);

}  // namespace lrcex
