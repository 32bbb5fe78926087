#pragma once

#include <cstdint>
#include <vector>

#include "twistlab/twist.hpp"

namespace twistlab {

/// Sorted, duplicate-free list of grids.
using GridSet = std::vector<EGrid>;

GridSet canonical_set(std::vector<EGrid> grids);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ull;

/// kDefaultBudget unless TWISTLAB_BUDGET holds a positive integer.
std::uint64_t default_budget();

struct SearchOptions {
    bool prune = true;
    /// 1 runs the serial reference; 0 uses every OpenMP thread.
    int threads = 0;
    std::uint64_t budget = default_budget();
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
};

/// Every grid over F_p passing the four pointwise conditions. Throws
/// BudgetExceeded once more than options.budget nodes are visited.
GridSet brute_force_twisting_maps(int n, int m, std::uint32_t p, const SearchOptions& options = {},
                                  SearchStats* stats = nullptr);

struct SetDifference {
    std::vector<EGrid> only_in_a;
    std::vector<EGrid> only_in_b;
    bool empty() const { return only_in_a.empty() && only_in_b.empty(); }
};

SetDifference compare_sets(const GridSet& a, const GridSet& b);

std::uint64_t count_idempotent_functions(int m);

} // namespace twistlab
