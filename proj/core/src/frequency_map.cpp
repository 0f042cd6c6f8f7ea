#include "liftsim/frequency_map.hpp"

#include <algorithm>

namespace liftsim {

void FrequencyMap::reserve_ids(std::size_t n) {
    if (n > counts_.size()) {
        counts_.resize(n, 0);
        slot_.resize(n, kAbsent);
        keys_.resize(n);
    }
}

void FrequencyMap::grow_to(NodeId id) {
    reserve_ids(std::max<std::size_t>(std::size_t{id} + 1, counts_.size() * 2));
}

std::vector<NodeId> FrequencyMap::most_frequent(std::size_t h) const {
    std::vector<NodeId> out;
    const auto live = keys();
    if (h == 0 || live.empty()) return out;
    if (h >= live.size()) {
        out.assign(live.begin(), live.end());
    } else {
        // Find the count of the h-th ranked key. Everything strictly above it
        // is selected; the remaining slots go to the lowest ids sitting
        // exactly at that count.
        std::uint32_t max_count = 0;
        for (NodeId id : live) {
            const std::uint32_t c = counts_[id];
            if (c >= histogram_.size()) histogram_.resize(std::size_t{c} * 2, 0);
            ++histogram_[c];
            max_count = std::max(max_count, c);
        }
        std::uint32_t cutoff = max_count;
        std::size_t above = 0;
        while (above + histogram_[cutoff] < h) above += histogram_[cutoff--];

        std::fill(histogram_.begin(), histogram_.begin() + max_count + 1, 0u);
        boundary_.clear();
        out.reserve(h);
        for (NodeId id : live) {
            const std::uint32_t c = counts_[id];
            if (c > cutoff) {
                out.push_back(id);
            } else if (c == cutoff) {
                boundary_.push_back(id);
            }
        }
        const std::size_t fill = h - above;
        std::nth_element(boundary_.begin(), boundary_.begin() + static_cast<std::ptrdiff_t>(fill - 1),
                         boundary_.end());
        out.insert(out.end(), boundary_.begin(), boundary_.begin() + static_cast<std::ptrdiff_t>(fill));
    }
    std::sort(out.begin(), out.end(), [this](NodeId a, NodeId b) {
        return counts_[a] != counts_[b] ? counts_[a] > counts_[b] : a < b;
    });
    return out;
}

void FrequencyMap::remove(NodeId id) noexcept {
    if (!contains(id)) return;
    const std::uint32_t pos = slot_[id];
    const NodeId last = keys_[--n_keys_];
    keys_[pos] = last;
    slot_[last] = pos;
    slot_[id] = kAbsent;
    counts_[id] = 0;
}

NodeId FrequencyMap::take_random(Rng& rng) {
    const NodeId id = keys_[rng.uniform(n_keys_)];
    remove(id);
    return id;
}

void FrequencyMap::clear() noexcept {
    for (NodeId id : keys()) {
        counts_[id] = 0;
        slot_[id] = kAbsent;
    }
    n_keys_ = 0;
}

}  // namespace liftsim
