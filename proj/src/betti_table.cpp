#include "permres/betti_table.hpp"

#include <algorithm>

namespace permres {

void BettiTable::set(int i, int j, std::uint64_t value) {
    if (value == 0) entries_.erase({i, j});
    else entries_[{i, j}] = value;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
    if (value != 0) entries_[{i, j}] += value;
}

std::uint64_t BettiTable::get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
    int p = -1;
    for (const auto& [key, v] : entries_) p = std::max(p, key.first);
    return p;
}

int BettiTable::regularity() const {
    int r = -1;
    for (const auto& [key, v] : entries_) r = std::max(r, key.second - key.first);
    return r;
}

std::uint64_t BettiTable::total(int i) const {
    std::uint64_t t = 0;
    for (const auto& [key, v] : entries_)
        if (key.first == i) t += v;
    return t;
}

std::map<int, std::uint64_t> BettiTable::row(int r) const {
    std::map<int, std::uint64_t> out;
    for (const auto& [key, v] : entries_)
        if (key.second - key.first == r) out[key.first] = v;
    return out;
}

BettiTable BettiTable::restricted_to_row(int r) const {
    BettiTable t;
    for (const auto& [key, v] : entries_)
        if (key.second - key.first == r) t.set(key.first, key.second, v);
    return t;
}

bool BettiTable::entrywise_leq(const BettiTable& other) const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const auto& e) { return e.second <= other.get(e.first.first, e.first.second); });
}

std::string describe_difference(const BettiTable& a, const BettiTable& b) {
    std::map<BettiTable::Key, int> keys;
    for (const auto& [k, v] : a.entries()) keys[k] = 0;
    for (const auto& [k, v] : b.entries()) keys[k] = 0;
    for (const auto& [k, unused] : keys) {
        auto va = a.get(k.first, k.second), vb = b.get(k.first, k.second);
        if (va != vb)
            return "b_{" + std::to_string(k.first) + "," + std::to_string(k.second) + "}: " + std::to_string(va) +
                   " vs " + std::to_string(vb);
    }
    return {};
}

std::optional<BettiTable> cancellation_pairs(const BettiTable& larger, const BettiTable& smaller) {
    if (!smaller.entrywise_leq(larger)) return std::nullopt;
    std::map<int, std::vector<std::uint64_t>> diff; // j -> (larger - smaller) by i
    for (const auto& [k, v] : larger.entries()) {
        auto& col = diff[k.second];
        if (col.size() <= static_cast<std::size_t>(k.first)) col.resize(static_cast<std::size_t>(k.first) + 1, 0);
        col[static_cast<std::size_t>(k.first)] = v - smaller.get(k.first, k.second);
    }
    BettiTable pairs;
    for (const auto& [j, col] : diff) {
        // Peel pairs off from i = 0 upwards; whatever is left at the top must vanish.
        std::uint64_t carried = 0;
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (col[i] < carried) return std::nullopt;
            std::uint64_t c = col[i] - carried;
            if (c > 0) pairs.set(static_cast<int>(i), j, c);
            carried = c;
        }
        if (carried != 0) return std::nullopt;
    }
    return pairs;
}

} // namespace permres
