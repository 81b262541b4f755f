#pragma once

#include "sizebias/nullmodel.hpp"

namespace sizebias::detail {

// Sizes the result and fills everything that does not depend on the replicates.
ReshuffleResult prepare_result(const Dataset& dataset, const ReshuffleConfig& config);

// Scratch state for one worker.
struct ReplicateWorkspace {
    std::vector<Citations> shuffled;
    HIndexWorkspace h_index;
};

// Runs replicate `r` and writes row r of the result plus its checksum.
void run_replicate(std::span<const Citations> pool, ReshuffleResult& result,
                   std::uint64_t master_seed, std::size_t r, ReplicateWorkspace& ws);

}  // namespace sizebias::detail
