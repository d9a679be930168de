#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "tml/collections.hpp"
#include "tml/syntax.hpp"

namespace tml {

struct EvalContext;

// Rule application order: Priority scans anchors in canonical position
// order; Random shuffles the anchor order per rule, deterministically
// from the seed.
struct Strategy {
    enum class Kind { Priority, Random };
    Kind kind = Kind::Priority;
    std::uint64_t seed = 0;

    static Strategy priority() { return Strategy{}; }
    static Strategy random(std::uint64_t seed) {
        return Strategy{Kind::Random, seed};
    }
};

struct OccBinding {
    Value value;
    PatternBinding binding;
};

// One occurrence of a rule's pattern: a path of pairwise-distinct
// positions (consecutive ones neighbors, or direction-linked) plus the
// variable bindings made along it. Star segments may be empty.
struct Occurrence {
    std::size_t rule_index = 0;
    std::vector<Position> path;
    std::vector<std::pair<std::string, OccBinding>> bindings;

    Position leftmost() const;
};

// Pairwise position-disjoint occurrences covering every position (the
// mandatory bare-variable last rule matches whatever remains).
struct MatchSelection {
    std::vector<Occurrence> occurrences;
};

// Tries to anchor the pattern's first matched position at `start` and
// extend a path through `available`. Guards run left-to-right against
// the bindings made so far plus self; a guard error aborts the match
// (fail-fast). Star segments are tried shortest-first. Returns the first
// occurrence in the deterministic enumeration order.
std::optional<Occurrence> match_rule(EvalContext& ctx, const Value& self_value,
                                     const Pattern& pattern, const Env& env,
                                     const std::set<Position>& available,
                                     Position start);

// Greedy maximal selection, rule by rule; the last rule matches every
// remaining position singly.
MatchSelection select_occurrences(EvalContext& ctx, const Value& self_value,
                                  const std::vector<Rule>& rules,
                                  const Env& env, const Strategy& strategy);

// One full pass: select on the snapshot, evaluate each rule body to a
// sequence, substitute simultaneously.
Value apply_transformation(EvalContext& ctx, const TransV& trans,
                           const Value& coll_value, const Strategy& strategy);

// Internal invariants (non-intersection + totality); throws on violation.
void validate_selection(const Collection& c, const MatchSelection& sel);

}  // namespace tml
