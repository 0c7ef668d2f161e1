#include "cdclab/clause_policy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cdclab {

DeletionPolicy deletion_policy_from_name(std::string_view name) {
    if (name == "none") return DeletionPolicy::None;
    if (name == "glucose") return DeletionPolicy::GlucoseLbd;
    if (name == "chanseok-oh") return DeletionPolicy::ChanseokOh;
    throw std::invalid_argument("unknown deletion policy '" + std::string(name) + "' (want none|glucose|chanseok-oh)");
}

std::string_view deletion_policy_name(DeletionPolicy p) {
    switch (p) {
        case DeletionPolicy::None: return "none";
        case DeletionPolicy::GlucoseLbd: return "glucose";
        case DeletionPolicy::ChanseokOh: return "chanseok-oh";
    }
    return "?";
}

ClauseTier initial_tier(std::uint32_t lbd) {
    if (lbd <= 3) return ClauseTier::Core;
    if (lbd <= 6) return ClauseTier::Tier2;
    return ClauseTier::Local;
}

namespace {

bool deletable(const LearnedClauseMeta& m) { return m.origin == ClauseOrigin::Learned && !m.locked; }

void plan_glucose(std::span<const LearnedClauseMeta> metas, ReductionPlan& plan) {
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < metas.size(); ++i)
        if (metas[i].origin == ClauseOrigin::Learned) cand.push_back(i);
    std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
        if (metas[a].lbd != metas[b].lbd) return metas[a].lbd < metas[b].lbd;
        if (metas[a].activity != metas[b].activity) return metas[a].activity > metas[b].activity;
        return a < b;
    });
    const std::size_t keep = (cand.size() + 1) / 2;
    for (std::size_t r = keep; r < cand.size(); ++r) {
        const std::size_t i = cand[r];
        if (metas[i].lbd <= 2 || metas[i].locked) continue;
        plan.remove[i] = 1;
    }
}

void plan_chanseok(std::span<const LearnedClauseMeta> metas, ReductionPlan& plan, std::uint32_t epoch) {
    std::vector<std::size_t> local;
    for (std::size_t i = 0; i < metas.size(); ++i) {
        if (metas[i].origin != ClauseOrigin::Learned) continue;
        ClauseTier tier = metas[i].tier;
        if (tier == ClauseTier::Tier2 && epoch >= metas[i].last_touched + 2) {
            tier = ClauseTier::Local;
            plan.tier_after[i] = tier;
        }
        if (tier == ClauseTier::Local) local.push_back(i);
    }
    std::sort(local.begin(), local.end(), [&](std::size_t a, std::size_t b) {
        if (metas[a].activity != metas[b].activity) return metas[a].activity > metas[b].activity;
        return a < b;
    });
    const std::size_t keep = (local.size() + 1) / 2;
    for (std::size_t r = keep; r < local.size(); ++r) {
        if (!deletable(metas[local[r]])) continue;
        plan.remove[local[r]] = 1;
    }
}

}  // namespace

ReductionPlan plan_reduction(DeletionPolicy policy, std::span<const LearnedClauseMeta> metas, std::uint32_t epoch) {
    ReductionPlan plan;
    plan.remove.assign(metas.size(), 0);
    plan.tier_after.resize(metas.size());
    for (std::size_t i = 0; i < metas.size(); ++i) plan.tier_after[i] = metas[i].tier;
    switch (policy) {
        case DeletionPolicy::None: break;
        case DeletionPolicy::GlucoseLbd: plan_glucose(metas, plan); break;
        case DeletionPolicy::ChanseokOh: plan_chanseok(metas, plan, epoch); break;
    }
    plan.num_removed = static_cast<std::size_t>(std::accumulate(plan.remove.begin(), plan.remove.end(), std::size_t{0}));
    return plan;
}

}  // namespace cdclab
