#pragma once

#include "zimin/workloads.hpp"

namespace zimin::testing {

using verification::all_patterns;
using verification::exhaustive_ranked;
using verification::for_each_rank_table;
using verification::sampled_rank4;
using verification::zimin_prefix_workload;

} // namespace zimin::testing
