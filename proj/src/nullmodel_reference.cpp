#include "nullmodel_detail.hpp"

namespace sizebias::reference {

ReshuffleResult run_null_model(const Dataset& dataset, const ReshuffleConfig& config) {
    auto result = detail::prepare_result(dataset, config);
    const auto all = sizebias::pool(dataset);
    detail::ReplicateWorkspace ws;
    for (std::size_t r = 0; r < config.replicates; ++r) {
        detail::run_replicate(all, result, config.master_seed, r, ws);
    }
    return result;
}

}  // namespace sizebias::reference
