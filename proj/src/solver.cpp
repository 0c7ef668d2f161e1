#include "cdclab/solver.hpp"

#include <ctime>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "cdclab/rng.hpp"

namespace cdclab {

namespace {

// Internal literal: variable index v in [0, n), code 2v for x, 2v+1 for ~x.
using ILit = std::uint32_t;
constexpr ILit kLitUndef = ~0u;
using CRef = std::uint32_t;
constexpr CRef kCRefNone = ~0u;

inline std::uint32_t ivar(ILit p) { return p >> 1; }
inline bool isign(ILit p) { return p & 1; }
inline ILit inegate(ILit p) { return p ^ 1; }
inline ILit from_external(Lit l) {
    return (static_cast<std::uint32_t>(l.var() - 1) << 1) | (l.positive() ? 0u : 1u);
}
inline Lit to_external(ILit p) { return Lit::make(static_cast<std::int32_t>(ivar(p)) + 1, !isign(p)); }

double thread_cpu_seconds() {
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

// Luby sequence: value of the i-th term (i >= 1).
std::uint64_t luby_term(std::uint64_t i) {
    std::uint64_t k = 1;
    while ((1ULL << k) - 1 < i) ++k;
    while ((1ULL << k) - 1 != i) {
        i -= (1ULL << (k - 1)) - 1;
        k = 1;
        while ((1ULL << k) - 1 < i) ++k;
    }
    return 1ULL << (k - 1);
}

// Max-heap over variables ordered by activity, ties broken by lower index so
// replay is a total order.
class VarOrderHeap {
  public:
    void init(std::size_t n, const std::vector<double>& activity) {
        act_ = &activity;
        heap_.clear();
        pos_.assign(n, -1);
        for (std::size_t v = 0; v < n; ++v) push(static_cast<std::uint32_t>(v));
    }

    bool less(std::uint32_t a, std::uint32_t b) const {
        const double aa = (*act_)[a], ab = (*act_)[b];
        if (aa != ab) return aa > ab;
        return a < b;
    }

    bool contains(std::uint32_t v) const { return pos_[v] >= 0; }
    bool empty() const { return heap_.empty(); }

    void push(std::uint32_t v) {
        if (contains(v)) return;
        pos_[v] = static_cast<std::int32_t>(heap_.size());
        heap_.push_back(v);
        sift_up(heap_.size() - 1);
    }

    std::uint32_t pop() {
        const std::uint32_t top = heap_[0];
        pos_[top] = -1;
        if (heap_.size() > 1) {
            heap_[0] = heap_.back();
            pos_[heap_[0]] = 0;
            heap_.pop_back();
            sift_down(0);
        } else {
            heap_.pop_back();
        }
        return top;
    }

    void increased(std::uint32_t v) {  // activity of v went up
        if (contains(v)) sift_up(static_cast<std::size_t>(pos_[v]));
    }

    void rebuild() {
        for (std::size_t i = heap_.size(); i-- > 0;) sift_down(i);
    }

  private:
    void sift_up(std::size_t i) {
        while (i > 0) {
            const std::size_t parent = (i - 1) / 2;
            if (!less(heap_[i], heap_[parent])) break;
            swap_at(i, parent);
            i = parent;
        }
    }
    void sift_down(std::size_t i) {
        while (true) {
            const std::size_t l = 2 * i + 1, r = 2 * i + 2;
            std::size_t best = i;
            if (l < heap_.size() && less(heap_[l], heap_[best])) best = l;
            if (r < heap_.size() && less(heap_[r], heap_[best])) best = r;
            if (best == i) break;
            swap_at(i, best);
            i = best;
        }
    }
    void swap_at(std::size_t i, std::size_t j) {
        std::swap(heap_[i], heap_[j]);
        pos_[heap_[i]] = static_cast<std::int32_t>(i);
        pos_[heap_[j]] = static_cast<std::int32_t>(j);
    }

    const std::vector<double>* act_ = nullptr;
    std::vector<std::uint32_t> heap_;
    std::vector<std::int32_t> pos_;
};

}  // namespace

// Clause storage: one flat arena of 32-bit words. Layout per clause:
//   [size][flags][lbd][activity(f32 bits)][touch][lit0]...[litN-1]
// A CRef addresses the first header word. Deleted clauses stay in the arena
// (marked) until the end of the run; watch lists drop them lazily.
struct Solver::Impl {
    static constexpr std::uint32_t kHeader = 5;
    static constexpr std::uint32_t kFlagOriginMask = 0x3;  // ClauseOrigin
    static constexpr std::uint32_t kFlagDeleted = 0x4;
    static constexpr std::uint32_t kFlagTierShift = 3;  // two bits

    struct Watcher {
        CRef cref;
        ILit blocker;
    };

    SolverConfig cfg;
    const Formula* problem = nullptr;

    std::vector<std::uint32_t> arena;
    std::vector<CRef> problem_refs;
    std::vector<CRef> learned_refs;

    std::uint32_t nvars = 0;
    std::vector<std::vector<Watcher>> watches;  // per internal literal
    std::vector<std::int8_t> assigns;           // per var: -1/0/1
    std::vector<std::int8_t> phase;             // saved phase per var
    std::vector<std::int32_t> level;
    std::vector<CRef> reason;
    std::vector<ILit> trail;
    std::vector<std::uint32_t> trail_lim;
    std::size_t qhead = 0;

    std::vector<double> activity;
    double var_inc = 1.0;
    double cla_inc = 1.0;
    VarOrderHeap order;

    std::vector<std::uint8_t> seen;
    std::vector<ILit> analyze_clear;
    std::vector<ILit> analyze_stack;
    std::vector<std::uint32_t> lbd_stamp;
    std::uint32_t lbd_epoch = 0;

    SolveStats stats;
    bool ok = true;
    CRef pending_conflict = kCRefNone;
    std::uint64_t batch_index = 0;
    std::uint32_t reduce_epoch = 0;
    std::uint64_t conflicts_at_last_reduce = 0;
    std::uint32_t last_learned_lbd = 0;
    SplitMix64 rng{0};
    LearnedClauseSink sink;

    // --- arena accessors ---
    std::uint32_t& csize(CRef c) { return arena[c]; }
    std::uint32_t csize(CRef c) const { return arena[c]; }
    std::uint32_t& cflags(CRef c) { return arena[c + 1]; }
    std::uint32_t cflags(CRef c) const { return arena[c + 1]; }
    std::uint32_t& clbd(CRef c) { return arena[c + 2]; }
    float cact(CRef c) const {
        float f;
        std::uint32_t w = arena[c + 3];
        std::memcpy(&f, &w, sizeof(f));
        return f;
    }
    void set_cact(CRef c, float f) { std::memcpy(&arena[c + 3], &f, sizeof(f)); }
    std::uint32_t& ctouch(CRef c) { return arena[c + 4]; }
    ILit* clits(CRef c) { return reinterpret_cast<ILit*>(&arena[c + kHeader]); }
    const ILit* clits(CRef c) const { return reinterpret_cast<const ILit*>(&arena[c + kHeader]); }
    ClauseOrigin corigin(CRef c) const { return static_cast<ClauseOrigin>(cflags(c) & kFlagOriginMask); }
    bool cdeleted(CRef c) const { return cflags(c) & kFlagDeleted; }
    ClauseTier ctier(CRef c) const { return static_cast<ClauseTier>((cflags(c) >> kFlagTierShift) & 0x3); }
    void set_ctier(CRef c, ClauseTier t) {
        cflags(c) = (cflags(c) & ~(0x3u << kFlagTierShift)) | (static_cast<std::uint32_t>(t) << kFlagTierShift);
    }

    // --- assignment accessors ---
    int lit_value(ILit p) const {
        const std::int8_t v = assigns[ivar(p)];
        if (v < 0) return -1;
        return isign(p) ? 1 - v : v;
    }
    int current_level() const { return static_cast<int>(trail_lim.size()); }

    explicit Impl(const Formula& f, SolverConfig config) : cfg(config), problem(&f), rng(config.seed) {
        nvars = static_cast<std::uint32_t>(f.num_variables);
        watches.assign(2 * static_cast<std::size_t>(nvars), {});
        assigns.assign(nvars, -1);
        phase.assign(nvars, cfg.default_phase ? 1 : 0);
        level.assign(nvars, 0);
        reason.assign(nvars, kCRefNone);
        activity.assign(nvars, 0.0);
        seen.assign(nvars, 0);
        lbd_stamp.assign(nvars + 1, 0);
        order.init(nvars, activity);
        for (std::size_t i = 0; i < f.clauses.size(); ++i) {
            if (!ok) break;
            add_problem_clause(f.clauses[i], f.origins[i]);
        }
    }

    CRef alloc_clause(const std::vector<ILit>& lits, ClauseOrigin origin, std::uint32_t lbd) {
        const CRef c = static_cast<CRef>(arena.size());
        arena.push_back(static_cast<std::uint32_t>(lits.size()));
        arena.push_back(static_cast<std::uint32_t>(origin));
        arena.push_back(lbd);
        arena.push_back(0);
        arena.push_back(reduce_epoch);
        arena.insert(arena.end(), lits.begin(), lits.end());
        set_cact(c, 0.0f);
        if (origin == ClauseOrigin::Learned) set_ctier(c, initial_tier(lbd));
        return c;
    }

    void attach(CRef c) {
        ILit* ls = clits(c);
        watches[inegate(ls[0])].push_back({c, ls[1]});
        watches[inegate(ls[1])].push_back({c, ls[0]});
    }

    void detach(CRef c) {
        ILit* ls = clits(c);
        for (const ILit w : {inegate(ls[0]), inegate(ls[1])}) {
            auto& wl = watches[w];
            for (std::size_t i = 0; i < wl.size(); ++i) {
                if (wl[i].cref == c) {
                    wl[i] = wl.back();
                    wl.pop_back();
                    break;
                }
            }
        }
    }

    void add_problem_clause(const Clause& clause, ClauseOrigin origin) {
        if (clause.tautological) return;  // satisfied under every assignment
        // Level-0 simplification: drop false literals, detect satisfied ones.
        std::vector<ILit> lits;
        lits.reserve(clause.size());
        for (const Lit l : clause.lits) {
            const ILit p = from_external(l);
            const int v = lit_value(p);
            if (v == 1) return;
            if (v == 0) continue;
            if (std::find(lits.begin(), lits.end(), p) == lits.end()) lits.push_back(p);
        }
        if (lits.empty()) {
            ok = false;
            return;
        }
        if (lits.size() == 1) {
            enqueue(lits[0], kCRefNone);
            return;
        }
        const CRef c = alloc_clause(lits, origin, 0);
        problem_refs.push_back(c);
        attach(c);
    }

    void enqueue(ILit p, CRef from) {
        assert(lit_value(p) == -1);
        const std::uint32_t v = ivar(p);
        assigns[v] = isign(p) ? 0 : 1;
        level[v] = current_level();
        reason[v] = from;
        trail.push_back(p);
    }

    // Unit propagation to fixpoint; kCRefNone when no conflict arises.
    CRef propagate() {
        CRef conflict = kCRefNone;
        while (qhead < trail.size()) {
            const ILit p = trail[qhead++];
            auto& wl = watches[p];
            std::size_t keep = 0;
            std::size_t i = 0;
            for (; i < wl.size(); ++i) {
                const Watcher w = wl[i];
                if (lit_value(w.blocker) == 1) {
                    wl[keep++] = w;
                    continue;
                }
                const CRef c = w.cref;
                if (cdeleted(c)) continue;  // lazily dropped
                ILit* ls = clits(c);
                const ILit false_lit = inegate(p);
                if (ls[0] == false_lit) std::swap(ls[0], ls[1]);
                assert(ls[1] == false_lit);
                const ILit first = ls[0];
                if (first != w.blocker && lit_value(first) == 1) {
                    wl[keep++] = {c, first};
                    continue;
                }
                const std::uint32_t size = csize(c);
                bool moved = false;
                for (std::uint32_t k = 2; k < size; ++k) {
                    if (lit_value(ls[k]) != 0) {
                        std::swap(ls[1], ls[k]);
                        watches[inegate(ls[1])].push_back({c, first});
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                // Clause is unit or conflicting under the current trail.
                wl[keep++] = {c, first};
                if (lit_value(first) == 0) {
                    conflict = c;
                    qhead = trail.size();
                    ++i;
                    break;
                }
                enqueue(first, c);
                ++stats.propagations;
            }
            for (; i < wl.size(); ++i) wl[keep++] = wl[i];
            wl.resize(keep);
            if (conflict != kCRefNone) break;
        }
        if (cfg.debug_checks) check_watches(conflict, conflict == kCRefNone);
        return conflict;
    }

    void bump_var(std::uint32_t v) {
        activity[v] += var_inc;
        if (activity[v] > 1e100) {
            for (auto& a : activity) a *= 1e-100;
            var_inc *= 1e-100;
            order.rebuild();
        }
        order.increased(v);
    }

    void bump_clause(CRef c) {
        if (corigin(c) != ClauseOrigin::Learned) return;
        float a = cact(c) + static_cast<float>(cla_inc);
        if (a > 1e20f) {
            for (const CRef lc : learned_refs)
                if (!cdeleted(lc)) set_cact(lc, cact(lc) * 1e-20f);
            cla_inc *= 1e-20;
            a = cact(c) + static_cast<float>(cla_inc);
        }
        set_cact(c, a);
        ctouch(c) = reduce_epoch;
    }

    std::uint32_t lbd_of(const ILit* ls, std::uint32_t size) {
        ++lbd_epoch;
        std::uint32_t distinct = 0;
        for (std::uint32_t i = 0; i < size; ++i) {
            const std::uint32_t lvl = static_cast<std::uint32_t>(level[ivar(ls[i])]);
            if (lbd_stamp[lvl] != lbd_epoch) {
                lbd_stamp[lvl] = lbd_epoch;
                ++distinct;
            }
        }
        return distinct;
    }

    // 1UIP conflict analysis; fills `out_learnt` (out_learnt[0] = asserting
    // literal) and returns the backjump level.
    int analyze(CRef conflict, std::vector<ILit>& out_learnt) {
        out_learnt.clear();
        out_learnt.push_back(kLitUndef);  // slot for the asserting literal
        int path_count = 0;
        ILit p = kLitUndef;
        std::size_t index = trail.size();
        CRef c = conflict;
        do {
            assert(c != kCRefNone);
            bump_clause(c);
            const ILit* ls = clits(c);
            const std::uint32_t size = csize(c);
            for (std::uint32_t j = (p == kLitUndef) ? 0 : 1; j < size; ++j) {
                const ILit q = ls[j];
                const std::uint32_t v = ivar(q);
                if (!seen[v] && level[v] > 0) {
                    seen[v] = 1;
                    bump_var(v);
                    if (level[v] >= current_level())
                        ++path_count;
                    else
                        out_learnt.push_back(q);
                }
            }
            while (!seen[ivar(trail[--index])]) {
            }
            p = trail[index];
            c = reason[ivar(p)];
            seen[ivar(p)] = 0;
            --path_count;
        } while (path_count > 0);
        out_learnt[0] = inegate(p);

        analyze_clear.assign(out_learnt.begin() + 1, out_learnt.end());
        if (cfg.minimize_learned) minimize(out_learnt);

        int backjump = 0;
        if (out_learnt.size() > 1) {
            std::size_t max_i = 1;
            for (std::size_t i = 2; i < out_learnt.size(); ++i)
                if (level[ivar(out_learnt[i])] > level[ivar(out_learnt[max_i])]) max_i = i;
            std::swap(out_learnt[1], out_learnt[max_i]);
            backjump = level[ivar(out_learnt[1])];
        }
        for (const ILit q : analyze_clear) seen[ivar(q)] = 0;
        seen[ivar(out_learnt[0])] = 0;
        analyze_clear.clear();
        return backjump;
    }

    // Recursive (stack-based) redundancy check for clause minimization.
    bool lit_redundant(ILit p, std::uint32_t abstract_levels) {
        analyze_stack.assign(1, p);
        const std::size_t top = analyze_clear.size();
        while (!analyze_stack.empty()) {
            const ILit q = analyze_stack.back();
            analyze_stack.pop_back();
            const CRef rc = reason[ivar(q)];
            assert(rc != kCRefNone);
            const ILit* ls = clits(rc);
            const std::uint32_t size = csize(rc);
            for (std::uint32_t i = 1; i < size; ++i) {
                const ILit r = ls[i];
                const std::uint32_t v = ivar(r);
                if (seen[v] || level[v] == 0) continue;
                if (reason[v] == kCRefNone || (abstract_level(v) & abstract_levels) == 0) {
                    // cannot be resolved away: undo the tentative marks
                    for (std::size_t j = top; j < analyze_clear.size(); ++j) seen[ivar(analyze_clear[j])] = 0;
                    analyze_clear.resize(top);
                    return false;
                }
                seen[v] = 1;
                analyze_clear.push_back(r);
                analyze_stack.push_back(r);
            }
        }
        return true;
    }

    std::uint32_t abstract_level(std::uint32_t v) const { return 1u << (level[v] & 31); }

    void minimize(std::vector<ILit>& learnt) {
        std::uint32_t abstract = 0;
        for (std::size_t i = 1; i < learnt.size(); ++i) abstract |= abstract_level(ivar(learnt[i]));
        std::size_t keep = 1;
        for (std::size_t i = 1; i < learnt.size(); ++i) {
            const ILit q = learnt[i];
            if (reason[ivar(q)] == kCRefNone || !lit_redundant(q, abstract))
                learnt[keep++] = q;
        }
        learnt.resize(keep);
    }

    // The reason side of analyze() requires the propagating literal first in
    // its clause; propagate() maintains that for ls[0].
    void backjump_to(int target_level) {
        if (current_level() <= target_level) return;
        const std::uint32_t limit = trail_lim[static_cast<std::size_t>(target_level)];
        for (std::size_t i = trail.size(); i-- > limit;) {
            const ILit p = trail[i];
            const std::uint32_t v = ivar(p);
            if (cfg.phase_saving) phase[v] = static_cast<std::int8_t>(isign(p) ? 0 : 1);
            assigns[v] = -1;
            reason[v] = kCRefNone;
            level[v] = 0;
            order.push(v);
        }
        trail.resize(limit);
        trail_lim.resize(static_cast<std::size_t>(target_level));
        qhead = trail.size();
        if (cfg.debug_checks) check_watches(kCRefNone, false);
    }

    void new_decision_level() { trail_lim.push_back(static_cast<std::uint32_t>(trail.size())); }

    ILit pick_branch() {
        if (cfg.random_decision_freq > 0.0 && rng.next_u01() < cfg.random_decision_freq) {
            // bounded retries; falls through to the heap on failure
            for (int tries = 0; tries < 8; ++tries) {
                const std::uint32_t v = static_cast<std::uint32_t>(rng.next_below(nvars));
                if (assigns[v] < 0) return (v << 1) | (phase[v] ? 0u : 1u);
            }
        }
        while (!order.empty()) {
            const std::uint32_t v = order.pop();
            if (assigns[v] < 0) return (v << 1) | (phase[v] ? 0u : 1u);
        }
        return kLitUndef;
    }

    void on_learned(const std::vector<ILit>& lits, std::uint32_t lbd) {
        ++stats.learned_count;
        if (!sink) return;
        LearnedClauseRecord rec;
        rec.clause.lits.reserve(lits.size());
        for (const ILit p : lits) rec.clause.lits.push_back(to_external(p));
        rec.lbd = lbd;
        rec.size = static_cast<std::uint32_t>(lits.size());
        rec.batch_index = batch_index;
        rec.conflict_number = stats.conflicts;
        sink(rec);
    }

    // Handles the conflict sitting in `conflict`; returns false if the
    // instance is proven unsatisfiable (conflict at level 0).
    bool handle_conflict(CRef conflict, ConflictAnalysis* out) {
        ++stats.conflicts;
        if (current_level() == 0) {
            ok = false;
            if (out) out->unsat = true;
            return false;
        }
        std::vector<ILit> learnt;
        const int backjump = analyze(conflict, learnt);
        const std::uint32_t lbd = lbd_of(learnt.data(), static_cast<std::uint32_t>(learnt.size()));
        last_learned_lbd = lbd;
        on_learned(learnt, lbd);
        if (out) {
            out->learned.lits.clear();
            for (const ILit p : learnt) out->learned.lits.push_back(to_external(p));
            out->backjump_level = backjump;
            out->lbd = lbd;
            out->unsat = false;
        }
        backjump_to(backjump);
        if (learnt.size() == 1) {
            enqueue(learnt[0], kCRefNone);
        } else {
            const CRef c = alloc_clause(learnt, ClauseOrigin::Learned, lbd);
            learned_refs.push_back(c);
            attach(c);
            enqueue(learnt[0], c);
        }
        ++stats.propagations;  // the asserting literal is an implied assignment
        var_inc /= cfg.vsids_decay;
        cla_inc /= cfg.clause_decay;
        return true;
    }

    std::size_t reduce(DeletionPolicy policy) {
        ++reduce_epoch;
        std::vector<LearnedClauseMeta> metas;
        std::vector<CRef> alive;
        for (const CRef c : learned_refs) {
            if (cdeleted(c)) continue;
            alive.push_back(c);
            LearnedClauseMeta m;
            m.lbd = clbd(c);
            m.activity = cact(c);
            m.origin = corigin(c);
            m.locked = is_locked(c);
            m.tier = ctier(c);
            m.last_touched = ctouch(c);
            metas.push_back(m);
        }
        const ReductionPlan plan = plan_reduction(policy, metas, reduce_epoch);
        std::size_t removed = 0;
        for (std::size_t i = 0; i < alive.size(); ++i) {
            set_ctier(alive[i], plan.tier_after[i]);
            if (plan.remove[i]) {
                detach(alive[i]);
                cflags(alive[i]) |= kFlagDeleted;
                ++removed;
            }
        }
        stats.deleted_count += removed;
        conflicts_at_last_reduce = stats.conflicts;
        return removed;
    }

    bool is_locked(CRef c) const {
        const ILit first = clits(c)[0];
        return lit_value(first) == 1 && reason[ivar(first)] == c;
    }

    void restart() {
        backjump_to(0);
        ++stats.restarts;
        ++batch_index;
    }

    bool budget_exhausted(const Budget& budget, double start_cpu) const {
        if (budget.max_conflicts && stats.conflicts >= *budget.max_conflicts) return true;
        if (budget.max_seconds && thread_cpu_seconds() - start_cpu >= *budget.max_seconds) return true;
        return false;
    }

    SolveOutcome run(const Budget& budget) {
        const double start_cpu = thread_cpu_seconds();
        SolveOutcome outcome;
        if (!ok) {
            outcome.status = SolveStatus::Unsat;
            outcome.stats = stats;
            outcome.stats.cpu_seconds = thread_cpu_seconds() - start_cpu;
            return outcome;
        }

        // Glucose-style EMA restart state.
        double lbd_ema_fast = 0.0, lbd_ema_slow = 0.0;
        std::uint64_t ema_conflicts = 0;

        std::uint64_t restart_limit = cfg.luby_base * luby_term(stats.restarts + 1);
        std::uint64_t conflicts_at_restart = stats.conflicts;
        std::uint32_t next_reduce_count = 0;

        while (true) {
            const CRef conflict = propagate();
            if (conflict != kCRefNone) {
                if (!handle_conflict(conflict, nullptr)) {
                    outcome.status = SolveStatus::Unsat;
                    break;
                }
                if (cfg.restart == RestartScheme::GlucoseEma) {
                    ++ema_conflicts;
                    const double lbd = static_cast<double>(last_learned_lbd);
                    lbd_ema_fast += (lbd - lbd_ema_fast) / std::min<double>(50.0, static_cast<double>(ema_conflicts));
                    lbd_ema_slow += (lbd - lbd_ema_slow) / std::min<double>(10000.0, static_cast<double>(ema_conflicts));
                }
                if (budget_exhausted(budget, start_cpu)) {
                    outcome.status = SolveStatus::Timeout;
                    break;
                }
                continue;
            }
            // No conflict: bookkeeping, restarts, reductions, then decide.
            const bool want_restart =
                cfg.restart == RestartScheme::Luby
                    ? stats.conflicts - conflicts_at_restart >= restart_limit
                    : (ema_conflicts > 50 && lbd_ema_fast * 0.8 > lbd_ema_slow);
            if (want_restart) {
                restart();
                restart_limit = cfg.luby_base * luby_term(stats.restarts + 1);
                conflicts_at_restart = stats.conflicts;
                if (cfg.restart == RestartScheme::GlucoseEma) ema_conflicts = 0;
                continue;
            }
            if (cfg.deletion == DeletionPolicy::GlucoseLbd &&
                stats.conflicts >= conflicts_at_last_reduce + cfg.reduce_first +
                                       static_cast<std::uint64_t>(cfg.reduce_inc) * next_reduce_count) {
                reduce(DeletionPolicy::GlucoseLbd);
                ++next_reduce_count;
            } else if (cfg.deletion == DeletionPolicy::ChanseokOh &&
                       stats.conflicts >= conflicts_at_last_reduce + cfg.chanseok_interval) {
                reduce(DeletionPolicy::ChanseokOh);
            }
            const ILit next = pick_branch();
            if (next == kLitUndef) {
                outcome.status = SolveStatus::Sat;
                outcome.model = extract_model();
                break;
            }
            ++stats.decisions;
            new_decision_level();
            enqueue(next, kCRefNone);
            if (budget_exhausted(budget, start_cpu)) {
                outcome.status = SolveStatus::Timeout;
                break;
            }
        }
        outcome.stats = stats;
        outcome.stats.cpu_seconds = thread_cpu_seconds() - start_cpu;
        stats.cpu_seconds = outcome.stats.cpu_seconds;
        return outcome;
    }

    Assignment extract_model() {
        Assignment model(static_cast<std::int32_t>(nvars));
        for (std::uint32_t v = 0; v < nvars; ++v) model.set(static_cast<std::int32_t>(v) + 1, assigns[v] == 1);
        verify_model(model);
        return model;
    }

    void verify_model(const Assignment& model) const {
        for (const Clause& c : problem->clauses) {
            if (c.tautological) continue;
            bool satisfied = false;
            for (const Lit l : c.lits)
                if (model.value_of(l) == 1) {
                    satisfied = true;
                    break;
                }
            if (!satisfied) throw std::logic_error("solver produced a model violating a problem clause");
        }
    }

    // Watch invariant: no attached clause other than the reported conflict
    // may have two false watches; at a propagation fixpoint a false watch
    // forces the other one true.
    void check_watches(CRef conflict, bool at_fixpoint) const {
        for (const auto* refs : {&problem_refs, &learned_refs}) {
            for (const CRef c : *refs) {
                if (cdeleted(c) || c == conflict) continue;
                const ILit* ls = clits(c);
                const int v0 = lit_value(ls[0]), v1 = lit_value(ls[1]);
                if (v0 == 1 || v1 == 1) continue;
                if (v0 == 0 && v1 == 0) throw std::logic_error("watch invariant: two false watches");
                if (at_fixpoint && (v0 == 0 || v1 == 0))
                    throw std::logic_error("watch invariant: missed unit propagation");
            }
        }
    }
};

Solver::Solver(const Formula& f, SolverConfig cfg) : impl_(std::make_unique<Impl>(f, cfg)) {}
Solver::~Solver() = default;

SolveOutcome Solver::solve(const Budget& budget) { return impl_->run(budget); }

void Solver::set_learned_sink(LearnedClauseSink sink) { impl_->sink = std::move(sink); }

void Solver::decide(Lit decision) {
    auto& im = *impl_;
    const ILit p = from_external(decision);
    if (im.lit_value(p) != -1) throw std::logic_error("decide: literal already assigned");
    ++im.stats.decisions;
    im.new_decision_level();
    im.enqueue(p, kCRefNone);
}

std::optional<Clause> Solver::propagate_to_fixpoint() {
    auto& im = *impl_;
    const CRef conflict = im.propagate();
    im.pending_conflict = conflict;
    if (conflict == kCRefNone) return std::nullopt;
    Clause c;
    const ILit* ls = im.clits(conflict);
    for (std::uint32_t i = 0; i < im.csize(conflict); ++i) c.lits.push_back(to_external(ls[i]));
    return c;
}

ConflictAnalysis Solver::resolve_conflict() {
    auto& im = *impl_;
    if (im.pending_conflict == kCRefNone) throw std::logic_error("resolve_conflict: no pending conflict");
    ConflictAnalysis result;
    im.handle_conflict(im.pending_conflict, &result);
    im.pending_conflict = kCRefNone;
    return result;
}

int Solver::value_of(std::int32_t var) const { return impl_->assigns[static_cast<std::uint32_t>(var - 1)]; }
int Solver::level_of(std::int32_t var) const { return impl_->level[static_cast<std::uint32_t>(var - 1)]; }
int Solver::decision_level() const { return impl_->current_level(); }
const SolveStats& Solver::stats() const { return impl_->stats; }

std::uint32_t Solver::compute_lbd(const Clause& c) const {
    auto& im = *impl_;
    std::vector<ILit> lits;
    for (const Lit l : c.lits) {
        const ILit p = from_external(l);
        if (im.assigns[ivar(p)] < 0) throw std::invalid_argument("compute_lbd: unassigned literal");
        lits.push_back(p);
    }
    return im.lbd_of(lits.data(), static_cast<std::uint32_t>(lits.size()));
}

std::size_t Solver::reduce_db(DeletionPolicy policy) { return impl_->reduce(policy); }

SolveOutcome solve_recording(const Formula& f, const SolverConfig& cfg, const Budget& budget,
                             const LearnedClauseSink& sink) {
    Solver solver(f, cfg);
    solver.set_learned_sink(sink);
    return solver.solve(budget);
}

}  // namespace cdclab
