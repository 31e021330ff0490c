#include "lrcex/lr.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace lrcex {

std::vector<int> LRFilling::reading_word() const {
    std::vector<int> w;
    for (const auto& row : rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

std::vector<int> LRFilling::row_word() const {
    std::vector<int> w;
    for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::string LRFilling::render() const {
    std::size_t width = 1;
    for (const auto& row : rows)
        for (int v : row) width = std::max(width, std::to_string(v).size());
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string line;
        auto cell = [&](const std::string& s) {
            if (!line.empty()) line += ' ';
            line += std::string(width - s.size(), ' ') + s;
        };
        for (long long c = 0; c < shape.row_begin(r); ++c) cell(".");
        for (int v : rows[r]) cell(std::to_string(v));
        out += line;
        out += '\n';
    }
    return out;
}

bool is_lattice_word(const std::vector<int>& word) {
    int maxv = 0;
    for (int v : word) {
        if (v < 1) throw std::invalid_argument("lattice word: entries must be positive");
        maxv = std::max(maxv, v);
    }
    std::vector<long long> cnt(static_cast<std::size_t>(maxv) + 1, 0);
    for (int v : word) {
        ++cnt[static_cast<std::size_t>(v)];
        if (v >= 2 && cnt[static_cast<std::size_t>(v)] > cnt[static_cast<std::size_t>(v) - 1])
            return false;
    }
    return true;
}

bool is_lr_filling(const LRFilling& f, const Partition& content) {
    const SkewShape& sh = f.shape;
    if (f.rows.size() != sh.rows())
        throw std::invalid_argument("filling: row count does not match shape");
    for (std::size_t r = 0; r < f.rows.size(); ++r)
        if (static_cast<long long>(f.rows[r].size()) != sh.row_length(r))
            throw std::invalid_argument("filling: row length does not match shape");

    std::vector<long long> counts(content.length() + 1, 0);
    for (std::size_t r = 0; r < f.rows.size(); ++r) {
        const auto& row = f.rows[r];
        for (std::size_t j = 0; j < row.size(); ++j) {
            int v = row[j];
            if (v < 1) return false;
            if (j > 0 && row[j - 1] > v) return false;  // rows weakly increase
            if (r > 0) {                                 // columns strictly increase
                long long c = sh.row_begin(r) + static_cast<long long>(j);
                if (c >= sh.row_begin(r - 1) && c < sh.row_end(r - 1)) {
                    int above = f.rows[r - 1][static_cast<std::size_t>(c - sh.row_begin(r - 1))];
                    if (above >= v) return false;
                }
            }
            if (static_cast<std::size_t>(v) > content.length()) return false;
            ++counts[static_cast<std::size_t>(v)];
        }
    }
    for (std::size_t v = 1; v <= content.length(); ++v)
        if (counts[v] != content.part(v - 1)) return false;
    return is_lattice_word(f.reading_word());
}

// ============================================================
// Enumeration: cells are visited in reading order (right to left
// within a row, top row first), so the lattice condition is checked
// literally on the growing reading word. A failed prefix can never be
// repaired by later cells, so the pruning loses nothing.
// ============================================================

namespace {

struct CellRef {
    std::size_t r;
    std::size_t j;  // index within the row, 0 = leftmost
};

class Enumerator {
public:
    Enumerator(const SkewShape& shape, const Partition& content)
        : shape_(shape), maxv_(static_cast<int>(content.length())) {
        cap_.assign(content.parts().begin(), content.parts().end());
        cnt_.assign(static_cast<std::size_t>(maxv_) + 1, 0);
        rows_.resize(shape.rows());
        for (std::size_t r = 0; r < shape.rows(); ++r) {
            rows_[r].assign(static_cast<std::size_t>(shape.row_length(r)), 0);
            for (long long j = shape.row_length(r) - 1; j >= 0; --j)
                cells_.push_back({r, static_cast<std::size_t>(j)});
        }
    }

    std::vector<LRFilling> run() {
        step(0);
        std::sort(out_.begin(), out_.end(), [](const LRFilling& a, const LRFilling& b) {
            return a.row_word() < b.row_word();
        });
        return out_;
    }

private:
    const SkewShape& shape_;
    int maxv_;
    std::vector<long long> cap_;
    std::vector<long long> cnt_;
    std::vector<std::vector<int>> rows_;
    std::vector<CellRef> cells_;
    std::vector<LRFilling> out_;

    void step(std::size_t k) {
        if (k == cells_.size()) {
            out_.push_back(LRFilling{shape_, rows_});
            return;
        }
        auto [r, j] = cells_[k];
        int lo = 1, hi = maxv_;
        if (j + 1 < rows_[r].size()) hi = std::min(hi, rows_[r][j + 1]);
        long long c = shape_.row_begin(r) + static_cast<long long>(j);
        if (r > 0 && c >= shape_.row_begin(r - 1) && c < shape_.row_end(r - 1))
            lo = std::max(lo, rows_[r - 1][static_cast<std::size_t>(c - shape_.row_begin(r - 1))] + 1);
        for (int v = lo; v <= hi; ++v) {
            std::size_t u = static_cast<std::size_t>(v);
            if (cnt_[u] >= cap_[u - 1]) continue;
            if (v >= 2 && cnt_[u] + 1 > cnt_[u - 1]) continue;
            ++cnt_[u];
            rows_[r][j] = v;
            step(k + 1);
            --cnt_[u];
        }
        rows_[r][j] = 0;
    }
};

}  // namespace

std::vector<LRFilling> enumerate_lr_fillings(const SkewShape& shape, const Partition& content) {
    if (shape.boxes() != content.size()) return {};
    return Enumerator(shape, content).run();
}

// ============================================================
// Counting: row-by-row recursion with memoization. For semistandard
// skew fillings the lattice condition is equivalent to
//     #{v in rows <= r} <= #{v-1 in rows <= r-1}   for all r, v >= 2
// (within a row, read right to left, every v precedes every v-1), so
// it is enforced per placement against the counts frozen at the row
// boundary. The memo key is the row index, the previous row's entries
// on the columns shared with the current row, and the running content
// counters.
// ============================================================

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

class Counter {
public:
    Counter(const SkewShape& shape, const Partition& content)
        : shape_(shape), maxv_(static_cast<int>(content.length())) {
        cap_.assign(content.parts().begin(), content.parts().end());
        cnt_.assign(static_cast<std::size_t>(maxv_) + 1, 0);
    }

    BigInt run() { return rows_from(0, {}, 0, 0); }

private:
    const SkewShape& shape_;
    int maxv_;
    std::vector<long long> cap_;
    std::vector<long long> cnt_;
    std::unordered_map<std::vector<int>, BigInt, VecHash> memo_;

    BigInt rows_from(std::size_t r, const std::vector<int>& prev, long long prev_b, long long prev_e) {
        if (r == shape_.rows()) return 1;
        long long b = shape_.row_begin(r), e = shape_.row_end(r);

        std::vector<int> key;
        key.reserve(8 + static_cast<std::size_t>(maxv_));
        key.push_back(static_cast<int>(r));
        for (long long c = std::max(b, prev_b); c < std::min(e, prev_e); ++c)
            key.push_back(prev[static_cast<std::size_t>(c - prev_b)]);
        key.push_back(-1);
        for (std::size_t v = 1; v <= static_cast<std::size_t>(maxv_); ++v)
            key.push_back(static_cast<int>(cnt_[v]));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<long long> bound = cnt_;  // counts through row r-1
        std::vector<int> row(static_cast<std::size_t>(e - b), 0);
        BigInt total = fill(r, 0, b, e, prev, prev_b, prev_e, bound, row);
        memo_.emplace(std::move(key), total);
        return total;
    }

    BigInt fill(std::size_t r, std::size_t j, long long b, long long e,
                const std::vector<int>& prev, long long prev_b, long long prev_e,
                const std::vector<long long>& bound, std::vector<int>& row) {
        if (j == row.size()) return rows_from(r + 1, row, b, e);
        int lo = 1;
        if (j > 0) lo = std::max(lo, row[j - 1]);
        long long c = b + static_cast<long long>(j);
        if (c >= prev_b && c < prev_e)
            lo = std::max(lo, prev[static_cast<std::size_t>(c - prev_b)] + 1);
        BigInt total = 0;
        for (int v = lo; v <= maxv_; ++v) {
            std::size_t u = static_cast<std::size_t>(v);
            if (cnt_[u] >= cap_[u - 1]) continue;
            if (v >= 2 && cnt_[u] + 1 > bound[u - 1]) continue;
            ++cnt_[u];
            row[j] = v;
            total += fill(r, j + 1, b, e, prev, prev_b, prev_e, bound, row);
            --cnt_[u];
        }
        return total;
    }
};

}  // namespace

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
    return Counter(SkewShape(lambda, mu), nu).run();
}

namespace {

// Partitions tau with nu ⊆ tau ⊆ gamma and |tau| = size.
void gen_between(const Partition& gamma, const Partition& nu, long long remaining,
                 std::size_t i, long long prev_part, std::vector<long long>& cur,
                 std::vector<Partition>& out) {
    if (remaining == 0) {
        if (nu.part(i) == 0) out.push_back(Partition(cur));
        return;
    }
    if (i >= gamma.length()) return;
    long long hi = std::min(gamma.part(i), prev_part);
    long long lo = std::max(nu.part(i), 1LL);
    for (long long p = hi; p >= lo; --p) {
        if (p > remaining) continue;
        cur.push_back(p);
        gen_between(gamma, nu, remaining - p, i + 1, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

BigInt multi_lr_coefficient(const Partition& gamma, const std::vector<Partition>& factors) {
    if (factors.empty())
        throw std::invalid_argument("multi_lr_coefficient: factor list is empty");
    long long total = 0;
    for (const auto& f : factors) total += f.size();
    if (total != gamma.size()) return 0;

    std::map<Partition, BigInt> acc;
    if (gamma.contains(factors[0])) acc.emplace(factors[0], 1);
    for (std::size_t i = 1; i < factors.size() && !acc.empty(); ++i) {
        std::map<Partition, BigInt> next;
        for (const auto& [nu, mult] : acc) {
            std::vector<Partition> taus;
            std::vector<long long> cur;
            gen_between(gamma, nu, nu.size() + factors[i].size(),
                        0, std::numeric_limits<long long>::max(), cur, taus);
            for (const auto& tau : taus) {
                BigInt c = lr_coefficient(tau, nu, factors[i]);
                if (c != 0) next[tau] += mult * c;
            }
        }
        acc = std::move(next);
    }
    auto it = acc.find(gamma);
    return it == acc.end() ? BigInt(0) : it->second;
}

StretchTable stretched_values(const Partition& lambda, const Partition& mu,
                              const Partition& nu, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("stretched_values: n_max must be >= 0");
    StretchTable t{lambda, mu, nu, {}};
    t.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long long n = 0; n <= n_max; ++n)
        t.values.push_back(lr_coefficient(lambda.stretched(n), mu.stretched(n), nu.stretched(n)));
    return t;
}

namespace {

void gen_box(long long max_parts, long long max_part, long long last,
             std::vector<long long>& cur, std::vector<Partition>& out) {
    out.push_back(Partition(cur));
    if (static_cast<long long>(cur.size()) == max_parts) return;
    for (long long p = 1; p <= std::min(last, max_part); ++p) {
        cur.push_back(p);
        gen_box(max_parts, max_part, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(long long max_parts, long long max_part) {
    if (max_parts < 0 || max_part < 0)
        throw std::invalid_argument("partitions_in_box: bounds must be >= 0");
    std::vector<Partition> out;
    std::vector<long long> cur;
    gen_box(max_parts, max_part, max_part, cur, out);
    return out;
}

}  // namespace lrcex
