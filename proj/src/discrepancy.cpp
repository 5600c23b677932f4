#include "cosmd/discrepancy.hpp"

#include <algorithm>

#include "cosmd/generator.hpp"

namespace cosmd {

namespace {

struct Tally {
    long long mismatches = 0;
    std::vector<Counterexample> all;
};

void check_tree(const CoTree& t, Tally& prose, Tally& printed, long long& checked,
                const OracleLimits& limits) {
    auto g = evaluate_as(t, GraphKind::directed);
    int oracle_smd = smd_exact(g, limits).smd;
    ++checked;
    auto run = [&](DirectedRule rule, Tally& tally) {
        int dp = smd_directed(t, rule).smd;
        if (dp != oracle_smd) {
            ++tally.mismatches;
            tally.all.push_back({serialize(t), t.leaf_count(), dp, oracle_smd});
        }
    };
    run(DirectedRule::prose_derived, prose);
    run(DirectedRule::as_printed, printed);
}

VariantOutcome finish(DirectedRule rule, Tally&& tally, int list_limit,
                      const Counterexample& separating, int separating_dp, int separating_oracle) {
    std::sort(tally.all.begin(), tally.all.end(), [](const auto& a, const auto& b) {
        return a.leaves != b.leaves ? a.leaves < b.leaves : a.cotree < b.cotree;
    });
    tally.all.erase(std::unique(tally.all.begin(), tally.all.end(),
                                [](const auto& a, const auto& b) { return a.cotree == b.cotree; }),
                    tally.all.end());

    VariantOutcome out;
    out.rule = rule;
    out.mismatches = tally.mismatches;
    for (const auto& ce : tally.all) {
        if (static_cast<int>(out.examples.size()) >= list_limit) break;
        out.examples.push_back(ce);
    }
    if (separating_dp != separating_oracle) {
        bool listed = std::any_of(out.examples.begin(), out.examples.end(), [&](const auto& ce) {
            return ce.cotree == separating.cotree;
        });
        if (!listed) out.examples.push_back(separating);
    }
    return out;
}

}  // namespace

DiscrepancyReport run_discrepancy(const DiscrepancyConfig& config) {
    Tally prose, printed;
    long long checked = 0;

    for (int leaves = 2; leaves <= config.exhaustive_max_leaves; ++leaves) {
        enumerate_cotrees(leaves, GenMode::directed_join_root, [&](const CoTree& t) {
            if (t.node(t.root).kind != NodeKind::op_join) return;  // not strongly connected
            check_tree(t, prose, printed, checked, config.oracle);
        });
    }

    SplitMix64 rng(config.seed);
    for (int it = 0; it < config.fuzz_count; ++it) {
        int span = std::max(1, config.fuzz_max_leaves - 1);
        GenConfig gc;
        gc.leaves = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
        gc.seed = rng.next();
        gc.mode = GenMode::directed_join_root;
        check_tree(random_cotree(gc), prose, printed, checked, config.oracle);
    }

    // the canonical separating instance always participates
    auto sep_tree = parse_cotree(kSeparatingInstance);
    auto sep_graph = evaluate_as(sep_tree, GraphKind::directed);
    int sep_oracle = smd_exact(sep_graph, config.oracle).smd;
    int sep_prose = smd_directed(sep_tree, DirectedRule::prose_derived).smd;
    int sep_printed = smd_directed(sep_tree, DirectedRule::as_printed).smd;
    ++checked;
    if (sep_prose != sep_oracle) ++prose.mismatches;
    if (sep_printed != sep_oracle) ++printed.mismatches;

    DiscrepancyReport report;
    report.config = config;
    report.trees_checked = checked;
    report.separating_oracle_smd = sep_oracle;
    report.separating_prose_smd = sep_prose;
    report.separating_printed_smd = sep_printed;
    Counterexample sep{kSeparatingInstance, sep_tree.leaf_count(), 0, sep_oracle};
    auto sep_for = [&](int dp) {
        Counterexample c = sep;
        c.dp_smd = dp;
        return c;
    };
    report.prose_derived = finish(DirectedRule::prose_derived, std::move(prose),
                                  config.list_limit, sep_for(sep_prose), sep_prose, sep_oracle);
    report.as_printed = finish(DirectedRule::as_printed, std::move(printed), config.list_limit,
                               sep_for(sep_printed), sep_printed, sep_oracle);
    return report;
}

}  // namespace cosmd
