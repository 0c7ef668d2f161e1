// Clause-deletion policies, expressed as pure planning functions over learned
// clause metadata so they can be exercised without a live solver.
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cdclab/cnf.hpp"

namespace cdclab {

enum class DeletionPolicy : std::uint8_t { None, GlucoseLbd, ChanseokOh };

DeletionPolicy deletion_policy_from_name(std::string_view name);  // none|glucose|chanseok-oh
std::string_view deletion_policy_name(DeletionPolicy p);

// Chanseok-Oh tiers.
enum class ClauseTier : std::uint8_t { Local = 0, Tier2 = 1, Core = 2 };

ClauseTier initial_tier(std::uint32_t lbd);  // lbd<=3 core, lbd<=6 tier2, else local

struct LearnedClauseMeta {
    std::uint32_t lbd = 0;
    double activity = 0.0;
    ClauseOrigin origin = ClauseOrigin::Learned;
    bool locked = false;  // currently the reason of an assignment
    ClauseTier tier = ClauseTier::Local;
    std::uint32_t last_touched = 0;  // reduction epoch of last conflict-analysis use
};

struct ReductionPlan {
    std::vector<std::uint8_t> remove;      // 1 = delete
    std::vector<ClauseTier> tier_after;    // tier demotions applied (Chanseok-Oh)
    std::size_t num_removed = 0;
};

// Plans one reduction round at `epoch`. None removes nothing. GlucoseLbd
// sorts deletable clauses by (lbd asc, activity desc) and removes the worse
// half, always sparing lbd <= 2 and locked clauses. ChanseokOh keeps core
// forever, demotes tier2 clauses untouched for two epochs to local, and
// halves the local tier by activity. Clauses whose origin is not Learned are
// never removed by any policy.
ReductionPlan plan_reduction(DeletionPolicy policy, std::span<const LearnedClauseMeta> metas, std::uint32_t epoch);

}  // namespace cdclab
