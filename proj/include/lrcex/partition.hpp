#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lrcex {

/// Integer partition: weakly decreasing positive parts. Zero parts are
/// stripped on construction, so stored equality is partition equality.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument if parts are negative or increase.
    explicit Partition(std::vector<long long> parts);

    /// Parses "4,3,3,2" or with multiplicities "4^1,3^2,2^1".
    /// Tokens must already be in weakly decreasing order; zero parts are
    /// dropped; "" is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<long long>& parts() const { return parts_; }
    /// Part i (0-based), 0 beyond the last row.
    long long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long size() const { return size_; }

    Partition conjugate() const;
    /// factor * every part; factor 0 gives the empty partition.
    Partition stretched(long long factor) const;
    bool contains(const Partition& inner) const;

    /// Canonical rendering "4,3,3,2"; empty partition renders as "".
    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<long long> parts_;
    long long size_ = 0;
};

inline Partition parse_partition(std::string_view text) { return Partition::parse(text); }

/// Pair outer/inner with inner contained in outer. Row r occupies columns
/// [row_begin(r), row_end(r)), 0-based.
class SkewShape {
public:
    /// Throws std::invalid_argument unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    std::size_t rows() const { return outer_.length(); }
    long long row_begin(std::size_t r) const { return inner_.part(r); }
    long long row_end(std::size_t r) const { return outer_.part(r); }
    long long row_length(std::size_t r) const { return row_end(r) - row_begin(r); }
    long long boxes() const { return outer_.size() - inner_.size(); }

    bool operator==(const SkewShape& o) const {
        return outer_ == o.outer_ && inner_ == o.inner_;
    }

private:
    Partition outer_, inner_;
};

}  // namespace lrcex
