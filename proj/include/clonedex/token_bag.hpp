#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clonedex/common.hpp"

namespace clonedex {

/// Multiset of a block's lexical tokens. Entries are kept sorted by token
/// text; size() counts tokens with multiplicity.
class TokenBag {
public:
    using Entry = std::pair<std::string, std::uint32_t>;

    TokenBag() = default;

    /// Builds from unsorted (token, count) pairs; duplicates are merged and
    /// zero counts dropped.
    explicit TokenBag(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        for (auto& e : entries) {
            if (e.second == 0) continue;
            if (!entries_.empty() && entries_.back().first == e.first) {
                entries_.back().second += e.second;
            } else {
                entries_.push_back(std::move(e));
            }
            size_ += e.second;
        }
    }

    static TokenBag from_tokens(const std::vector<std::string>& tokens) {
        std::vector<Entry> entries;
        entries.reserve(tokens.size());
        for (const auto& t : tokens) entries.emplace_back(t, 1u);
        return TokenBag(std::move(entries));
    }

    std::uint64_t size() const { return size_; }
    bool empty() const { return entries_.empty(); }
    std::size_t distinct() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    std::uint32_t count(std::string_view token) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), token,
                                   [](const Entry& e, std::string_view t) { return e.first < t; });
        if (it == entries_.end() || it->first != token) return 0;
        return it->second;
    }

    bool operator==(const TokenBag&) const = default;

private:
    std::vector<Entry> entries_;
    std::uint64_t size_ = 0;
};

}  // namespace clonedex
