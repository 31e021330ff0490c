#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "lrcex/families.hpp"
#include "lrcex/lr.hpp"
#include "lrcex/partition.hpp"
#include "lrcex/quiver.hpp"
#include "oracles.hpp"

using namespace lrcex;

namespace {

Partition P(const std::string& s) { return parse_partition(s); }

/// All tuples of k nonnegative integers summing to n.
template <std::size_t K>
std::vector<std::array<long long, K>> compositions(long long n) {
    std::vector<std::array<long long, K>> out;
    std::array<long long, K> cur{};
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long rest) {
        if (i + 1 == K) {
            cur[i] = rest;
            out.push_back(cur);
            return;
        }
        for (long long v = 0; v <= rest; ++v) {
            cur[i] = v;
            rec(i + 1, rest - v);
        }
    };
    rec(0, n);
    return out;
}

void check_same_fillings(std::vector<LRFilling> image, const std::vector<LRFilling>& enumerated) {
    auto by_row_word = [](const LRFilling& x, const LRFilling& y) {
        return x.row_word() < y.row_word();
    };
    std::sort(image.begin(), image.end(), by_row_word);
    REQUIRE(image.size() == enumerated.size());
    for (std::size_t i = 0; i < image.size(); ++i) CHECK(image[i] == enumerated[i]);
}

/// Number of ways to finish rows 5-6 of the eight-row filling when everything
/// else is pinned: split the leftover content between the two rows in every
/// possible way and keep the splits forming a valid LR filling.
int completion_count(long long n, const LRFilling& base, const Partition& content) {
    // multiplicity of value v in the whole filling is content.part(v-1)
    std::array<long long, 6> remaining{};
    for (std::size_t v = 1; v <= content.length(); ++v)
        remaining[v - 1] = content.part(v - 1);
    auto tally = [&](const std::vector<int>& row, long long sign) {
        for (int v : row) remaining[static_cast<std::size_t>(v - 1)] += sign;
    };
    for (std::size_t r = 0; r < 8; ++r)
        if (r != 4 && r != 5) tally(base.rows[r], -1);

    int found = 0;
    std::array<long long, 6> take{};
    std::function<void(std::size_t, long long)> rec = [&](std::size_t v, long long rest) {
        if (v == 6) {
            if (rest != 0) return;
            LRFilling cand = base;
            cand.rows[4].clear();
            cand.rows[5].clear();
            for (int u = 0; u < 6; ++u) {
                for (long long i = 0; i < take[static_cast<std::size_t>(u)]; ++i)
                    cand.rows[4].push_back(u + 1);
                for (long long i = 0;
                     i < remaining[static_cast<std::size_t>(u)] - take[static_cast<std::size_t>(u)];
                     ++i)
                    cand.rows[5].push_back(u + 1);
            }
            if (is_lr_filling(cand, content)) {
                ++found;
                CHECK(cand.rows[4] == base.rows[4]);
                CHECK(cand.rows[5] == base.rows[5]);
            }
            return;
        }
        for (long long t = 0; t <= std::min(rest, remaining[v]); ++t) {
            take[v] = t;
            rec(v + 1, rest - t);
        }
    };
    rec(0, 2 * n);
    return found;
}

}  // namespace

TEST_CASE("rectangles") {
    CHECK(rectangle_partition({3, 2}) == P("3,3"));
    CHECK(rectangle_partition({1, 4}) == P("1^4"));
    CHECK(rectangle_partition({0, 5}) == Partition());
    CHECK_THROWS_AS(rectangle_partition({-1, 2}), std::invalid_argument);
    RectangleSequence rects{{1, 2}, {3, 1}};
    auto doubled = stretch_rectangles(rects, 2);
    CHECK(rectangle_partition(doubled[0]) == P("2,2"));
    CHECK(rectangle_partition(doubled[1]) == P("6"));
    CHECK_THROWS_AS(stretch_rectangles(rects, -1), std::invalid_argument);
}

TEST_CASE("the two families") {
    auto f1 = okounkov_family(1);
    CHECK(f1.lambda == P("4,3,3,2"));
    CHECK(f1.mu == P("3,2,1"));
    auto f2 = okounkov_family(2);
    CHECK(f2.lambda == P("4^2,3^4,2^2"));
    CHECK(f2.mu == P("3^2,2^2,1^2"));
    CHECK_THROWS_AS(okounkov_family(0), std::invalid_argument);

    auto k1 = kostka_family(1);
    CHECK(k1.lambda == P("2,1,1"));
    REQUIRE(k1.rects.size() == 4);
    for (const auto& r : k1.rects) CHECK(rectangle_partition(r) == P("1"));
    auto k2 = kostka_family(2);
    CHECK(k2.lambda == P("2,2,1,1,1,1"));
    for (const auto& r : k2.rects) CHECK(rectangle_partition(r) == P("1,1"));
    CHECK_THROWS_AS(kostka_family(0), std::invalid_argument);
}

TEST_CASE("parabolic Kostka numbers") {
    CHECK(parabolic_kostka(Partition(), {}) == 1);
    CHECK(parabolic_kostka(P("1"), {}) == 0);
    CHECK(parabolic_kostka(P("3"), {{1, 2}}) == 0);  // size matches, shape does not
    CHECK(parabolic_kostka(P("2"), {{1, 2}}) == 0);  // size mismatch
    CHECK(parabolic_kostka(P("2,1,1"), RectangleSequence(4, {1, 1})) == 3);
    CHECK(parabolic_kostka(P("2,1,1"), RectangleSequence(4, {1, 1})) ==
          oracles::multi_lr_brute(P("2,1,1"), {P("1"), P("1"), P("1"), P("1")}));

    for (long long n = 1; n <= 4; ++n) {
        auto fam = kostka_family(n);
        CHECK(parabolic_kostka(fam.lambda, fam.rects) == binomial(n + 2, 2));
    }
    for (long long n = 1; n <= 2; ++n) {
        auto fam = kostka_family(n);
        CHECK(parabolic_kostka(fam.lambda.stretched(2), stretch_rectangles(fam.rects, 2)) ==
              binomial(n + 5, 5));
    }
}

TEST_CASE("parabolic Kostka equals the single LR coefficient") {
    for (auto [m, n] : std::vector<std::pair<long long, long long>>{{1, 1}, {1, 2}, {2, 1}}) {
        auto rec = kostka_as_lr_identity(m, n);
        CHECK(rec.holds);
        CHECK(rec.lhs == rec.rhs);
        CHECK(rec.context == "kostka-as-lr m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
    CHECK(kostka_as_lr_identity(1, 1).lhs == 3);
    CHECK(kostka_as_lr_identity(1, 2).lhs == 6);
    CHECK(kostka_as_lr_identity(2, 1).lhs == 6);
    CHECK_THROWS_AS(kostka_as_lr_identity(0, 1), std::invalid_argument);
}

TEST_CASE("log-concavity comparison") {
    auto values = [](std::vector<BigInt> v) {
        return [v](long long k) { return v.at(static_cast<std::size_t>(k)); };
    };
    auto ok = log_concavity_check(values({1, 3, 6}), 1);
    CHECK(ok.lhs == 6);
    CHECK(ok.rhs == 9);
    CHECK(ok.holds);
    auto bad = log_concavity_check(values({1, 2, 5}), 1);
    CHECK(bad.lhs == 5);
    CHECK(bad.rhs == 4);
    CHECK_FALSE(bad.holds);
    auto tie = log_concavity_check(values({2, 4, 8}), 1);
    CHECK(tie.holds);  // equality counts as holding
    CHECK_THROWS_AS(log_concavity_check(values({1, 2, 5}), 0), std::invalid_argument);
}

TEST_CASE("Horn conditions: pinned examples") {
    auto T = [](const char* x, const char* y, const char* z) {
        return std::array<Partition, 3>{P(x), P(y), P(z)};
    };
    CHECK(horn_nonvanishing_two_rows(2, T("2", "1", "1")));
    CHECK(horn_nonvanishing_two_rows(2, T("1,1", "1,1", "")));
    CHECK(horn_nonvanishing_two_rows(2, T("2,2", "", "")));
    CHECK_FALSE(horn_nonvanishing_two_rows(3, T("2,2", "2", "")));  // fails one inequality
    CHECK(lr_coefficient(P("3,3"), P("2,2"), P("2")) == 0);
    CHECK_FALSE(horn_nonvanishing_two_rows(2, T("2", "1", "")));  // size mismatch
    CHECK_THROWS_AS(horn_nonvanishing_two_rows(2, T("1,1,1", "1", "")), std::invalid_argument);
    CHECK_THROWS_AS(horn_nonvanishing_two_rows(2, T("3", "1", "")), std::invalid_argument);
}

TEST_CASE("Horn conditions match nonvanishing, exhaustively") {
    for (long long n = 0; n <= 5; ++n) {
        Partition target(std::vector<long long>(2, n));
        std::vector<Partition> two_rows;
        for (long long p1 = 0; p1 <= n; ++p1)
            for (long long p2 = 0; p2 <= p1; ++p2) two_rows.push_back(Partition({p1, p2}));
        for (const auto& a : two_rows)
            for (const auto& b : two_rows)
                for (const auto& c : two_rows) {
                    bool horn = horn_nonvanishing_two_rows(n, {a, b, c});
                    bool nonzero = multi_lr_coefficient(target, {a, b, c}) != 0;
                    CHECK(horn == nonzero);
                }
    }
}

TEST_CASE("Horn triple counts follow the closed form") {
    for (long long n = 0; n <= 20; ++n) CHECK(horn_count_two_rows(n) == binomial(n + 5, 5));
    CHECK(horn_count_two_rows(30) == binomial(35, 5));
    for (long long n = 0; n <= 6; ++n)
        CHECK(BigInt(horn_triples_two_rows(n).size()) == horn_count_two_rows(n));
    for (long long n = 0; n <= 8; ++n) CHECK(one_row_triple_count(n) == binomial(n + 2, 2));
    CHECK_THROWS_AS(horn_count_two_rows(-1), std::invalid_argument);
}

TEST_CASE("Horn triples biject with degree-n monomials in six variables") {
    for (long long n = 0; n <= 4; ++n) {
        auto triples = horn_triples_two_rows(n);
        std::set<std::array<long long, 6>> seen;
        for (const auto& t : triples) {
            long long total = 0;
            for (long long e : t.monomial) {
                CHECK(e >= 0);
                total += e;
            }
            CHECK(total == n);
            CHECK(horn_nonvanishing_two_rows(n, t.triple));
            seen.insert(t.monomial);
        }
        CHECK(BigInt(seen.size()) == binomial(n + 5, 5));  // distinct and complete
    }
}

TEST_CASE("four-row tableaux indexed by the last row") {
    auto t = e_tableau(1, {0, 0, 1});
    CHECK(t.rows == std::vector<std::vector<int>>{{1}, {1, 2}, {1, 2}, {3}});
    CHECK(e_tableau(1, {0, 1, 0}).rows ==
          std::vector<std::vector<int>>{{1}, {1, 2}, {1, 3}, {2}});
    CHECK(e_tableau(1, {1, 0, 0}).rows ==
          std::vector<std::vector<int>>{{1}, {1, 2}, {2, 3}, {1}});
    CHECK(e_tableau(2, {2, 0, 0}).rows ==
          std::vector<std::vector<int>>{{1, 1}, {1, 1, 2, 2}, {2, 2, 3, 3}, {1, 1}});
    CHECK_THROWS_AS(e_tableau(1, {1, 1, 0}), std::invalid_argument);  // sum != n
    CHECK_THROWS_AS(e_tableau(1, {-1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(e_tableau(0, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("four-row tableaux exhaust the fillings") {
    for (long long n = 1; n <= 4; ++n) {
        SkewShape shape(Partition({4 * n, 4 * n, 3 * n, n}), Partition({3 * n, 2 * n, n}));
        Partition content({3 * n, 2 * n, n});
        auto enumerated = enumerate_lr_fillings(shape, content);
        CHECK(BigInt(enumerated.size()) == binomial(n + 2, 2));
        std::vector<LRFilling> image;
        for (const auto& a : compositions<3>(n)) image.push_back(e_tableau(n, a));
        check_same_fillings(std::move(image), enumerated);
    }
}

TEST_CASE("eight-row tableaux indexed by column types") {
    using Rows = std::vector<std::vector<int>>;
    auto rows_of = [](long long n, std::array<long long, 6> a) { return d_tableau(n, a).rows; };
    const Rows fixed_head{{1}, {2}, {1, 3}, {2, 4}};
    auto with_head = [&](Rows tail) {
        Rows all = fixed_head;
        for (auto& r : tail) all.push_back(std::move(r));
        return all;
    };
    CHECK(rows_of(1, {0, 0, 0, 0, 0, 1}) == with_head({{1, 3}, {2, 4}, {5}, {6}}));
    CHECK(rows_of(1, {0, 0, 0, 0, 1, 0}) == with_head({{1, 3}, {2, 5}, {4}, {6}}));
    CHECK(rows_of(1, {0, 0, 0, 1, 0, 0}) == with_head({{1, 5}, {2, 6}, {3}, {4}}));
    CHECK(rows_of(1, {0, 0, 1, 0, 0, 0}) == with_head({{1, 3}, {4, 5}, {2}, {6}}));
    CHECK(rows_of(1, {0, 1, 0, 0, 0, 0}) == with_head({{1, 5}, {3, 6}, {2}, {4}}));
    CHECK(rows_of(1, {1, 0, 0, 0, 0, 0}) == with_head({{3, 5}, {4, 6}, {1}, {2}}));
    CHECK_THROWS_AS(d_tableau(1, {1, 1, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(d_tableau(0, {0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("eight-row tableaux exhaust the fillings") {
    for (long long n = 1; n <= 2; ++n) {
        SkewShape shape(Partition({4 * n, 4 * n, 4 * n, 4 * n, 3 * n, 3 * n, n, n}),
                        Partition({3 * n, 3 * n, 2 * n, 2 * n, n, n}));
        Partition content({3 * n, 3 * n, 2 * n, 2 * n, n, n});
        auto enumerated = enumerate_lr_fillings(shape, content);
        CHECK(BigInt(enumerated.size()) == binomial(n + 5, 5));
        std::vector<LRFilling> image;
        for (const auto& a : compositions<6>(n)) image.push_back(d_tableau(n, a));
        check_same_fillings(std::move(image), enumerated);
    }
}

TEST_CASE("rows 5-6 of the eight-row tableau are forced") {
    for (long long n = 1; n <= 2; ++n) {
        Partition content({3 * n, 3 * n, 2 * n, 2 * n, n, n});
        for (const auto& a : compositions<6>(n))
            CHECK(completion_count(n, d_tableau(n, a), content) == 1);
    }
}

TEST_CASE("stretch values by n and stretch factor") {
    for (long long n = 1; n <= 6; ++n) CHECK(family_stretch_value(n, 1) == binomial(n + 2, 2));
    for (long long n = 1; n <= 4; ++n) CHECK(family_stretch_value(n, 2) == binomial(n + 5, 5));
    CHECK(family_stretch_value(3, 0) == 1);
    CHECK(family_stretch_value(1, 3) == 10);
    CHECK(family_stretch_value(1, 3) == kronecker_si_dim(3, 1, 3));
    CHECK_THROWS_AS(family_stretch_value(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(family_stretch_value(1, -1), std::invalid_argument);
}

TEST_CASE("the log-concavity counterexample appears at n = 21") {
    auto rows = counterexample_report(20, 22);
    REQUIRE(rows.size() == 3);

    CHECK(rows[0].n == 20);
    CHECK(rows[0].record.holds);
    CHECK(rows[1].n == 21);
    CHECK_FALSE(rows[1].record.holds);
    CHECK(rows[1].record.lhs == 65780);
    CHECK(rows[1].record.rhs == 64009);
    CHECK(rows[1].record.context == "okounkov n=21 N=1");
    CHECK(rows[2].n == 22);
    CHECK_FALSE(rows[2].record.holds);

    for (const auto& row : rows) {
        CHECK(row.closed_match);
        CHECK(row.value1 == binomial(row.n + 2, 2));
        CHECK(row.value2 == binomial(row.n + 5, 5));
        CHECK_FALSE(row.si_dim_ok.has_value());  // n beyond the quiver-sum bounds
        CHECK_FALSE(row.direct_ok.has_value());
    }
}

TEST_CASE("report cross-checks at small n") {
    ReportOptions opts;
    opts.verify_direct = true;
    for (Family fam : {Family::Okounkov, Family::Kostka}) {
        opts.family = fam;
        auto rows = counterexample_report(1, 2, opts);
        REQUIRE(rows.size() == 2);
        for (const auto& row : rows) {
            CHECK(row.closed_match);
            REQUIRE(row.si_dim_ok.has_value());
            CHECK(*row.si_dim_ok);
            REQUIRE(row.direct_ok.has_value());
            CHECK(*row.direct_ok);
            CHECK(row.record.holds);  // no failure this early
        }
    }
    CHECK(counterexample_report(1, 1)[0].record.context == "okounkov n=1 N=1");
    CHECK_THROWS_AS(counterexample_report(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_report(3, 2), std::invalid_argument);
}
