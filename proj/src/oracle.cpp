#include "posetgen/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace posetgen {

StateSpace enumerate_state_space(int n, int guard) {
    if (n < 1) throw std::invalid_argument("enumerate_state_space: n must be positive");
    if (n > guard) {
        throw std::invalid_argument("enumerate_state_space: n=" + std::to_string(n) +
                                    " exceeds the enumeration guard (" + std::to_string(guard) +
                                    "); pass a larger guard to override");
    }

    StateSpace space;
    space.n = n;
    const int pairs = ordered_pair_count(n);

    // Depth-first over the edge bitstring, absent branch before present and
    // cycle-creating additions pruned, so DAGs come out in lexicographic
    // bitstring order and every visited node is acyclic.
    Dag current = empty_dag(n);
    std::uint64_t mask = 0;
    std::vector<PosetKey> keys; // per-DAG closure keys, in enumeration order
    auto recurse = [&](auto&& self, int k) -> void {
        if (k == pairs) {
            space.mask_index.emplace(mask, space.dags.size());
            space.dags.push_back(current);
            space.masks.push_back(mask);
            space.exponents.push_back(class_size_exponent(current));
            keys.push_back(poset_key(current));
            return;
        }
        self(self, k + 1);
        auto [i, j] = ordered_pair_at(n, k);
        if (!would_create_cycle(current, i, j)) {
            current.add_edge(i, j);
            mask |= std::uint64_t{1} << k;
            self(self, k + 1);
            current.remove_edge(i, j);
            mask &= ~(std::uint64_t{1} << k);
        }
    };
    recurse(recurse, 0);
    assert(space.masks[0] == 0); // empty DAG leads the lexicographic order

    std::map<PosetKey, int> key_order;
    for (const PosetKey& key : keys) key_order.emplace(key, 0);
    int next = 0;
    for (auto& [key, idx] : key_order) idx = next++;

    space.posets.reserve(key_order.size());
    for (const auto& [key, idx] : key_order) space.posets.push_back(key);
    space.class_sizes.assign(key_order.size(), 0);
    space.class_of.resize(space.dag_count());
    for (std::size_t g = 0; g < space.dag_count(); ++g) {
        int idx = key_order.at(keys[g]);
        space.class_of[g] = idx;
        ++space.class_sizes[idx];
    }
    return space;
}

std::uint64_t class_size_bruteforce(const Dag& g, const StateSpace& space) {
    if (g.size() != space.n) {
        throw std::invalid_argument("class_size_bruteforce: graph is not on " + std::to_string(space.n) +
                                    " vertices");
    }
    PosetKey key = poset_key(g);
    auto it = std::lower_bound(space.posets.begin(), space.posets.end(), key);
    if (it == space.posets.end() || !(*it == key)) {
        throw std::invalid_argument("class_size_bruteforce: closure not present in the state space");
    }
    return space.class_sizes[static_cast<std::size_t>(it - space.posets.begin())];
}

} // namespace posetgen
