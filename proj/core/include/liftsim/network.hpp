#pragma once

#include <cstdint>
#include <vector>

#include "liftsim/adversary.hpp"
#include "liftsim/types.hpp"

namespace liftsim {

// All node states of one run, indexed by NodeId.
struct Network {
    std::vector<NodeState> nodes;
    ByzantineRoster roster;
    // Index of the next cycle to execute; equals the number executed so far.
    std::uint32_t cycle = 0;

    std::size_t size() const noexcept { return nodes.size(); }
    bool is_alive(NodeId id) const { return id < nodes.size() && nodes[id].alive; }
    bool is_byzantine(NodeId id) const { return liftsim::is_byzantine(nodes.at(id).behavior); }
    std::size_t byzantine_count() const noexcept;
    std::size_t correct_alive_count() const noexcept;
};

}  // namespace liftsim
