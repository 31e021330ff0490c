#include "lrcex/families.hpp"

#include <numeric>
#include <stdexcept>

#include "lrcex/quiver.hpp"

namespace lrcex {

Partition rectangle_partition(const Rectangle& r) {
    if (r.width < 0 || r.height < 0)
        throw std::invalid_argument("rectangle: negative side");
    if (r.width == 0) return Partition();
    return Partition(std::vector<long long>(static_cast<std::size_t>(r.height), r.width));
}

RectangleSequence stretch_rectangles(const RectangleSequence& rects, long long factor) {
    if (factor < 0) throw std::invalid_argument("rectangles: negative stretch factor");
    RectangleSequence out(rects);
    for (auto& r : out) r.width *= factor;
    return out;
}

namespace {

Partition from_blocks(std::initializer_list<std::pair<long long, long long>> blocks) {
    std::vector<long long> parts;
    for (auto [value, count] : blocks)
        for (long long i = 0; i < count; ++i) parts.push_back(value);
    return Partition(std::move(parts));
}

}  // namespace

OkounkovFamily okounkov_family(long long n) {
    if (n < 1) throw std::invalid_argument("okounkov_family: n must be >= 1");
    return OkounkovFamily{from_blocks({{4, n}, {3, 2 * n}, {2, n}}),
                          from_blocks({{3, n}, {2, n}, {1, n}})};
}

KostkaFamily kostka_family(long long n) {
    if (n < 1) throw std::invalid_argument("kostka_family: n must be >= 1");
    return KostkaFamily{from_blocks({{2, n}, {1, 2 * n}}),
                        RectangleSequence(4, Rectangle{1, n})};
}

BigInt parabolic_kostka(const Partition& lambda, const RectangleSequence& rects) {
    if (rects.empty()) return lambda.empty() ? 1 : 0;
    std::vector<Partition> factors;
    factors.reserve(rects.size());
    for (const auto& r : rects) factors.push_back(rectangle_partition(r));
    return multi_lr_coefficient(lambda, factors);
}

ComparisonRecord log_concavity_check(const std::function<BigInt(long long)>& values_at,
                                     long long n_index) {
    if (n_index < 1) throw std::invalid_argument("log_concavity_check: index must be >= 1");
    BigInt lhs = values_at(n_index + 1) * values_at(n_index - 1);
    BigInt mid = values_at(n_index);
    BigInt rhs = mid * mid;
    return ComparisonRecord{lhs, rhs, lhs <= rhs, ""};
}

bool horn_nonvanishing_two_rows(long long n, const std::array<Partition, 3>& triple) {
    for (const auto& p : triple)
        if (p.length() > 2 || p.part(0) > n)
            throw std::invalid_argument("horn: need at most two rows with parts <= n");
    if (triple[0].size() + triple[1].size() + triple[2].size() != 2 * n) return false;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (n - triple[i].part(0) - triple[j].part(1) - triple[k].part(1) < 0) return false;
    }
    return true;
}

namespace {

struct TwoRow {
    long long p1, p2;
};

std::vector<TwoRow> two_row_partitions(long long n) {
    std::vector<TwoRow> out;
    for (long long p1 = 0; p1 <= n; ++p1)
        for (long long p2 = 0; p2 <= p1; ++p2) out.push_back({p1, p2});
    return out;
}

bool horn_ok(long long n, const TwoRow& a, const TwoRow& b, const TwoRow& c) {
    return n - a.p1 - b.p2 - c.p2 >= 0 && n - b.p1 - c.p2 - a.p2 >= 0 &&
           n - c.p1 - a.p2 - b.p2 >= 0;
}

}  // namespace

std::vector<HornTriple> horn_triples_two_rows(long long n) {
    if (n < 0) throw std::invalid_argument("horn: n must be >= 0");
    std::vector<HornTriple> out;
    auto parts = two_row_partitions(n);
    auto as_partition = [](const TwoRow& t) { return Partition({t.p1, t.p2}); };
    for (const auto& a : parts)
        for (const auto& b : parts) {
            long long s = 2 * n - (a.p1 + a.p2) - (b.p1 + b.p2);
            if (s < 0) continue;
            for (const auto& c : parts) {
                if (c.p1 + c.p2 != s || !horn_ok(n, a, b, c)) continue;
                out.push_back(HornTriple{
                    {as_partition(a), as_partition(b), as_partition(c)},
                    {n - a.p1 - b.p2 - c.p2, a.p2, n - b.p1 - c.p2 - a.p2, b.p2,
                     n - c.p1 - a.p2 - b.p2, c.p2}});
            }
        }
    return out;
}

BigInt horn_count_two_rows(long long n) {
    if (n < 0) throw std::invalid_argument("horn: n must be >= 0");
    auto parts = two_row_partitions(n);
    // group the third slot by its size so only size-compatible triples are touched
    std::vector<std::vector<TwoRow>> by_size(static_cast<std::size_t>(2 * n) + 1);
    for (const auto& p : parts)
        if (p.p1 + p.p2 <= 2 * n) by_size[static_cast<std::size_t>(p.p1 + p.p2)].push_back(p);
    BigInt count = 0;
    for (const auto& a : parts)
        for (const auto& b : parts) {
            long long s = 2 * n - (a.p1 + a.p2) - (b.p1 + b.p2);
            if (s < 0) continue;
            for (const auto& c : by_size[static_cast<std::size_t>(s)])
                if (horn_ok(n, a, b, c)) ++count;
        }
    return count;
}

BigInt one_row_triple_count(long long n) {
    if (n < 0) throw std::invalid_argument("one_row_triple_count: n must be >= 0");
    BigInt count = 0;
    for (long long x = 0; x <= n; ++x)
        for (long long y = 0; x + y <= n; ++y) ++count;  // z = n - x - y
    return count;
}

namespace {

void append_run(std::vector<int>& row, int value, long long count) {
    for (long long i = 0; i < count; ++i) row.push_back(value);
}

}  // namespace

LRFilling e_tableau(long long n, const std::array<long long, 3>& a) {
    if (n < 1) throw std::invalid_argument("e_tableau: n must be >= 1");
    for (long long x : a)
        if (x < 0) throw std::invalid_argument("e_tableau: negative multiplicity");
    if (a[0] + a[1] + a[2] != n)
        throw std::invalid_argument("e_tableau: multiplicities must sum to n");

    SkewShape shape(from_blocks({{4 * n, 2}, {3 * n, 1}, {n, 1}}),
                    from_blocks({{3 * n, 1}, {2 * n, 1}, {n, 1}}));
    std::vector<std::vector<int>> rows(4);
    append_run(rows[0], 1, n);
    append_run(rows[1], 1, n);
    append_run(rows[1], 2, n);
    // remaining content after the fixed rows and the last row, sorted
    append_run(rows[2], 1, n - a[0]);
    append_run(rows[2], 2, n - a[1]);
    append_run(rows[2], 3, n - a[2]);
    append_run(rows[3], 1, a[0]);
    append_run(rows[3], 2, a[1]);
    append_run(rows[3], 3, a[2]);

    LRFilling f{std::move(shape), std::move(rows)};
    if (!is_lr_filling(f, from_blocks({{3 * n, 1}, {2 * n, 1}, {n, 1}})))
        throw std::logic_error("e_tableau: construction is not an LR filling");
    return f;
}

LRFilling d_tableau(long long n, const std::array<long long, 6>& a) {
    if (n < 1) throw std::invalid_argument("d_tableau: n must be >= 1");
    for (long long x : a)
        if (x < 0) throw std::invalid_argument("d_tableau: negative multiplicity");
    const long long a12 = a[0], a24 = a[1], a26 = a[2], a34 = a[3], a46 = a[4], a56 = a[5];
    if (a12 + a24 + a26 + a34 + a46 + a56 != n)
        throw std::invalid_argument("d_tableau: multiplicities must sum to n");

    SkewShape shape(from_blocks({{4 * n, 4}, {3 * n, 2}, {n, 2}}),
                    from_blocks({{3 * n, 2}, {2 * n, 2}, {n, 2}}));
    std::vector<std::vector<int>> rows(8);
    append_run(rows[0], 1, n);
    append_run(rows[1], 2, n);
    append_run(rows[2], 1, n);
    append_run(rows[2], 3, n);
    append_run(rows[3], 2, n);
    append_run(rows[3], 4, n);

    // Row 5 carries no 2 and no 4, and each trailing 6 of row 6 needs a 5
    // directly above it, which forces the split below; the a24 threes
    // overflow into row 6.
    const long long sixes = n - a26 - a46 - a56;  // = a12 + a24 + a34
    append_run(rows[4], 1, n - a12);
    append_run(rows[4], 3, n - a24 - a34);
    append_run(rows[4], 5, sixes);
    append_run(rows[5], 2, n - a12 - a24 - a26);
    append_run(rows[5], 3, a24);
    append_run(rows[5], 4, a12 + a26 + a56);
    append_run(rows[5], 5, a26 + a46);
    append_run(rows[5], 6, sixes);

    // typed columns (1|2) < (2|4) < (2|6) < (3|4) < (4|6) < (5|6), each row sorted
    append_run(rows[6], 1, a12);
    append_run(rows[6], 2, a24 + a26);
    append_run(rows[6], 3, a34);
    append_run(rows[6], 4, a46);
    append_run(rows[6], 5, a56);
    append_run(rows[7], 2, a12);
    append_run(rows[7], 4, a24 + a34);
    append_run(rows[7], 6, a26 + a46 + a56);

    LRFilling f{std::move(shape), std::move(rows)};
    if (!is_lr_filling(f, from_blocks({{3 * n, 2}, {2 * n, 2}, {n, 2}})))
        throw std::logic_error("d_tableau: construction is not an LR filling");
    return f;
}

BigInt family_stretch_value(long long n, long long k, int threads) {
    if (n < 1) throw std::invalid_argument("family_stretch_value: n must be >= 1");
    if (k < 0) throw std::invalid_argument("family_stretch_value: k must be >= 0");
    if (k == 0) return 1;
    if (k == 1) return one_row_triple_count(n);
    if (k == 2) return horn_count_two_rows(n);
    return kronecker_si_dim(3, n, k, threads);
}

std::vector<CounterexampleRow> counterexample_report(long long n_lo, long long n_hi,
                                                     const ReportOptions& opts) {
    if (n_lo < 1 || n_hi < n_lo)
        throw std::invalid_argument("counterexample_report: need 1 <= n_lo <= n_hi");
    std::vector<CounterexampleRow> rows;
    for (long long n = n_lo; n <= n_hi; ++n) {
        CounterexampleRow row;
        row.n = n;
        row.value1 = family_stretch_value(n, 1, opts.threads);
        row.value2 = family_stretch_value(n, 2, opts.threads);
        row.closed1 = binomial(n + 2, 2);
        row.closed2 = binomial(n + 5, 5);
        row.closed_match = row.value1 == row.closed1 && row.value2 == row.closed2;

        bool si_ran = false, si_ok = true;
        if (n <= opts.si_bound_m1) {
            si_ran = true;
            si_ok = si_ok && kronecker_si_dim(3, n, 1, opts.threads) == row.value1;
        }
        if (n <= opts.si_bound_m2) {
            si_ran = true;
            si_ok = si_ok && kronecker_si_dim(3, n, 2, opts.threads) == row.value2;
        }
        if (si_ran) row.si_dim_ok = si_ok;

        if (opts.verify_direct) {
            bool ran = false, ok = true;
            if (opts.family == Family::Okounkov) {
                auto fam = okounkov_family(n);
                if (n <= opts.direct_bound_m1) {
                    ran = true;
                    ok = ok && lr_coefficient(fam.lambda, fam.mu, fam.mu) == row.value1;
                }
                if (n <= opts.direct_bound_m2) {
                    ran = true;
                    ok = ok && lr_coefficient(fam.lambda.stretched(2), fam.mu.stretched(2),
                                              fam.mu.stretched(2)) == row.value2;
                }
            } else {
                auto fam = kostka_family(n);
                if (n <= opts.direct_bound_m1) {
                    ran = true;
                    ok = ok && parabolic_kostka(fam.lambda, fam.rects) == row.value1;
                }
                if (n <= opts.direct_bound_m2) {
                    ran = true;
                    ok = ok && parabolic_kostka(fam.lambda.stretched(2),
                                                stretch_rectangles(fam.rects, 2)) == row.value2;
                }
            }
            if (ran) row.direct_ok = ok;
        }

        const BigInt v0 = 1, v1 = row.value1, v2 = row.value2;
        row.record = log_concavity_check(
            [&](long long k) { return k == 0 ? v0 : (k == 1 ? v1 : v2); }, 1);
        row.record.context = (opts.family == Family::Okounkov ? "okounkov n=" : "kostka n=") +
                             std::to_string(n) + " N=1";
        rows.push_back(std::move(row));
    }
    return rows;
}

ComparisonRecord kostka_as_lr_identity(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("kostka_as_lr_identity: m, n must be >= 1");
    auto fam = kostka_family(n);
    BigInt lhs = parabolic_kostka(fam.lambda.stretched(m), stretch_rectangles(fam.rects, m));
    BigInt rhs = lr_coefficient(
        from_blocks({{4 * m, n}, {3 * m, n}, {2 * m, n}, {m, n}}),
        from_blocks({{3 * m, n}, {2 * m, n}, {m, n}}),
        from_blocks({{2 * m, n}, {m, 2 * n}}));
    return ComparisonRecord{lhs, rhs, lhs == rhs,
                            "kostka-as-lr m=" + std::to_string(m) + " n=" + std::to_string(n)};
}

}  // namespace lrcex
