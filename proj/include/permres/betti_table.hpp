#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permres {

/// Graded Betti numbers b_{i,j} of a quotient R/I; zero entries are not stored.
class BettiTable {
public:
    using Key = std::pair<int, int>; // (homological degree i, internal degree j)

    void set(int i, int j, std::uint64_t value);
    void add(int i, int j, std::uint64_t value);
    std::uint64_t get(int i, int j) const;

    const std::map<Key, std::uint64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// max i with a nonzero entry; -1 for the zero table.
    int projective_dimension() const;
    /// max j - i over nonzero entries; -1 for the zero table.
    int regularity() const;
    /// Sum over j of b_{i,j}.
    std::uint64_t total(int i) const;
    /// Entries with j - i == r, keyed by i.
    std::map<int, std::uint64_t> row(int r) const;
    /// Keeps only entries with j - i == r.
    BettiTable restricted_to_row(int r) const;

    /// Entrywise a <= b.
    bool entrywise_leq(const BettiTable& other) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<Key, std::uint64_t> entries_;
};

/// First differing entry (for diagnostics), or empty string when equal.
std::string describe_difference(const BettiTable& a, const BettiTable& b);

/// The multiplicities c_{i,j} with larger - smaller = sum of c_{i,j} copies of
/// the pair (i,j),(i+1,j), when such nonnegative c exist. A table and one of
/// its consecutive cancellations differ exactly this way.
std::optional<BettiTable> cancellation_pairs(const BettiTable& larger, const BettiTable& smaller);

} // namespace permres
