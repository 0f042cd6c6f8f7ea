#include "liftsim/network.hpp"

#include <algorithm>

namespace liftsim {

std::size_t Network::byzantine_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const NodeState& n) {
        return liftsim::is_byzantine(n.behavior);
    }));
}

std::size_t Network::correct_alive_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const NodeState& n) {
        return n.alive && n.behavior == Behavior::Correct;
    }));
}

}  // namespace liftsim
