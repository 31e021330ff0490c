#include "lrcex/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace lrcex {

namespace {

long long parse_number(std::string_view tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("partition: bad number '" + std::string(tok) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Partition::Partition(std::vector<long long> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition: negative part");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (std::find(parts.begin(), parts.end(), 0LL) != parts.end())
        throw std::invalid_argument("partition: parts must be weakly decreasing");
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::parse(std::string_view text) {
    text = trim(text);
    std::vector<long long> parts;
    if (text.empty()) return Partition(std::move(parts));
    while (true) {
        auto comma = text.find(',');
        std::string_view tok = trim(text.substr(0, comma));
        if (tok.empty()) throw std::invalid_argument("partition: empty token");
        long long value, count = 1;
        if (auto caret = tok.find('^'); caret != std::string_view::npos) {
            value = parse_number(trim(tok.substr(0, caret)));
            count = parse_number(trim(tok.substr(caret + 1)));
            if (count < 1) throw std::invalid_argument("partition: multiplicity must be >= 1");
        } else {
            value = parse_number(tok);
        }
        for (long long i = 0; i < count; ++i) parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<long long> cols;
    if (!parts_.empty()) {
        cols.resize(static_cast<std::size_t>(parts_[0]));
        for (long long p : parts_)
            for (long long c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(cols));
}

Partition Partition::stretched(long long factor) const {
    if (factor < 0) throw std::invalid_argument("partition: negative stretch factor");
    if (factor == 0) return Partition();
    std::vector<long long> parts(parts_);
    for (long long& p : parts) p *= factor;
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape: inner not contained in outer");
}

}  // namespace lrcex
