#pragma once

#include <cstdint>
#include <vector>

namespace cosmd::detail {

/// Persistent vertex-set builder for DP witnesses. A set reference is
/// either empty (-1), a single vertex (encoded as -(v+2)), or an index
/// into the arena of union pairs. Composition is O(1); a set is only
/// expanded once, at the end, so witness tracking stays linear in the
/// tree size.
class WitnessArena {
public:
    using Ref = std::int32_t;

    static constexpr Ref kEmpty = -1;

    static Ref single(std::int32_t v) { return -(v + 2); }

    Ref unite(Ref a, Ref b) {
        if (a == kEmpty) return b;
        if (b == kEmpty) return a;
        pairs_.push_back({a, b});
        return static_cast<Ref>(pairs_.size() - 1);
    }

    void collect(Ref r, std::vector<int>& out) const {
        std::vector<Ref> stack{r};
        while (!stack.empty()) {
            Ref cur = stack.back();
            stack.pop_back();
            if (cur == kEmpty) continue;
            if (cur < 0) {
                out.push_back(static_cast<int>(-cur - 2));
            } else {
                stack.push_back(pairs_[cur].second);
                stack.push_back(pairs_[cur].first);
            }
        }
    }

private:
    std::vector<std::pair<Ref, Ref>> pairs_;
};

}  // namespace cosmd::detail
