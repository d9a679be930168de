#include "tml/transform.hpp"

#include <algorithm>
#include <random>

#include "tml/eval.hpp"

namespace tml {

Position Occurrence::leftmost() const {
    return *std::min_element(path.begin(), path.end());
}

namespace {

// Neighbor candidates in matching order. On a sequence the successor is
// tried before the predecessor, so paths prefer to follow the sequence
// direction; grids, sets and bags use canonical position order.
std::vector<Position> match_candidates(const Collection& c, Position from) {
    if (c.topo == Topo::Seq) {
        std::vector<Position> out;
        if (from.row + 1 < c.items.size()) out.push_back({from.row + 1, 0});
        if (from.row > 0) out.push_back({from.row - 1, 0});
        return out;
    }
    return neighbors(c, from);
}

struct Matcher {
    EvalContext& ctx;
    const Collection& coll;
    const Pattern& pat;
    const std::set<Position>& available;
    Position start;

    std::set<Position> used;
    std::vector<Position> path;
    std::vector<std::pair<std::string, OccBinding>> bindings;

    bool usable(Position p) const {
        return available.count(p) && !used.count(p);
    }

    // Candidate positions for the next matched position given the link
    // joining it to the previous one. The first matched position of the
    // whole occurrence is pinned to the anchor.
    std::vector<Position> candidates(const std::optional<Position>& last,
                                     const PatElem& elem) const {
        if (!last) return usable(start) ? std::vector<Position>{start}
                                        : std::vector<Position>{};
        if (elem.link == LinkKind::Dir) {
            auto step = direction_step(coll, *last, elem.dir);
            if (step && usable(*step)) return {*step};
            return {};
        }
        std::vector<Position> out;
        for (Position p : match_candidates(coll, *last))
            if (usable(p)) out.push_back(p);
        return out;
    }

    bool guard_holds(const Expr& guard, const Env& env) {
        Value v = eval(ctx, env, guard);
        if (auto* b = std::get_if<bool>(&v.node->v)) return *b;
        throw EvalError("pattern guard did not evaluate to a boolean",
                        guard->loc);
    }

    bool match_elem(std::size_t idx, std::optional<Position> last, Env env) {
        if (idx == pat.elems.size()) return true;
        const PatElem& elem = pat.elems[idx];
        if (elem.kind == ElemKind::Star) return match_star(idx, last, env);

        for (Position p : candidates(last, elem)) {
            const Value& v = coll.at(p);
            Env env2 = env.bind_pattern(elem.name, v,
                                        PatternBinding{{p}, &coll});
            if (elem.guard && !guard_holds(elem.guard, env2)) continue;
            used.insert(p);
            path.push_back(p);
            bindings.emplace_back(elem.name,
                                  OccBinding{v, PatternBinding{{p}, &coll}});
            if (match_elem(idx + 1, p, env2)) return true;
            bindings.pop_back();
            path.pop_back();
            used.erase(p);
        }
        return false;
    }

    // Star segments are simple paths tried shortest-first; within one
    // length, extension positions follow the candidate order. A star that
    // matches nothing leaves `last` untouched, so the following link is
    // measured from the element before the star.
    bool match_star(std::size_t idx, std::optional<Position> last, Env env) {
        std::size_t max_len = available.size() - used.size();
        for (std::size_t len = 0; len <= max_len; len++) {
            std::vector<Position> segment;
            if (extend_star(idx, len, segment, last, env)) return true;
        }
        return false;
    }

    bool star_done(std::size_t idx, const std::vector<Position>& segment,
                   std::optional<Position> next_last, Env env) {
        const PatElem& elem = pat.elems[idx];
        Collection seg_coll;
        seg_coll.topo = Topo::Seq;
        for (Position p : segment) seg_coll.items.push_back(coll.at(p));
        Value v = v_coll(std::move(seg_coll));
        PatternBinding pb{segment, &coll};
        Env env2 = env.bind_pattern(elem.name, v, pb);
        bindings.emplace_back(elem.name, OccBinding{v, pb});
        if (match_elem(idx + 1, next_last, env2)) return true;
        bindings.pop_back();
        return false;
    }

    bool extend_star(std::size_t idx, std::size_t remaining,
                     std::vector<Position>& segment,
                     std::optional<Position> last, Env env) {
        if (remaining == 0) {
            std::optional<Position> seg_last =
                segment.empty() ? last
                                : std::optional<Position>(segment.back());
            return star_done(idx, segment, seg_last, env);
        }
        const PatElem& elem = pat.elems[idx];
        std::optional<Position> from =
            segment.empty() ? last : std::optional<Position>(segment.back());
        // Within a segment consecutive positions are plain neighbors; the
        // star's own link constrains only its first position.
        PatElem probe = elem;
        if (!segment.empty()) probe.link = LinkKind::Comma;
        for (Position p : candidates(from, probe)) {
            used.insert(p);
            path.push_back(p);
            segment.push_back(p);
            if (extend_star(idx, remaining - 1, segment, last, env))
                return true;
            segment.pop_back();
            path.pop_back();
            used.erase(p);
        }
        return false;
    }
};

}  // namespace

std::optional<Occurrence> match_rule(EvalContext& ctx, const Value& self_value,
                                     const Pattern& pattern, const Env& env,
                                     const std::set<Position>& available,
                                     Position start) {
    const Collection& coll = as_collection(self_value);
    Matcher m{ctx, coll, pattern, available, start, {}, {}, {}};
    if (!m.match_elem(0, std::nullopt, env)) return std::nullopt;
    Occurrence occ;
    occ.path = std::move(m.path);
    occ.bindings = std::move(m.bindings);
    return occ;
}

MatchSelection select_occurrences(EvalContext& ctx, const Value& self_value,
                                  const std::vector<Rule>& rules,
                                  const Env& env, const Strategy& strategy) {
    const Collection& coll = as_collection(self_value);
    Env match_env = env.bind("self", self_value);
    std::vector<Position> all = coll.positions();
    std::set<Position> available(all.begin(), all.end());
    std::mt19937_64 rng(strategy.seed);
    bool random = strategy.kind == Strategy::Kind::Random;

    MatchSelection sel;
    for (std::size_t i = 0; i + 1 < rules.size(); i++) {
        std::vector<Position> anchors = all;
        if (random) std::shuffle(anchors.begin(), anchors.end(), rng);
        bool progress = true;
        while (progress) {
            progress = false;
            for (Position anchor : anchors) {
                if (!available.count(anchor)) continue;
                auto occ = match_rule(ctx, self_value, rules[i].pattern,
                                      match_env, available, anchor);
                if (!occ) continue;
                occ->rule_index = i;
                for (Position p : occ->path) available.erase(p);
                sel.occurrences.push_back(std::move(*occ));
                progress = true;
            }
        }
    }

    // The bare-variable last rule matches every remaining position singly.
    std::size_t last = rules.size() - 1;
    const std::string& var = rules[last].pattern.elems[0].name;
    std::vector<Position> remaining(available.begin(), available.end());
    if (random) std::shuffle(remaining.begin(), remaining.end(), rng);
    for (Position p : remaining) {
        Occurrence occ;
        occ.rule_index = last;
        occ.path = {p};
        occ.bindings.emplace_back(
            var, OccBinding{coll.at(p), PatternBinding{{p}, &coll}});
        sel.occurrences.push_back(std::move(occ));
    }

    validate_selection(coll, sel);
    return sel;
}

void validate_selection(const Collection& c, const MatchSelection& sel) {
    std::set<Position> seen;
    std::size_t count = 0;
    for (const Occurrence& occ : sel.occurrences) {
        for (Position p : occ.path) {
            if (!seen.insert(p).second)
                throw EvalError("internal: occurrences intersect");
            count++;
        }
    }
    if (count != c.positions().size())
        throw EvalError("internal: selection does not cover the collection");
}

Value apply_transformation(EvalContext& ctx, const TransV& trans,
                           const Value& coll_value, const Strategy& strategy) {
    const Collection& c = as_collection(coll_value);
    const std::vector<Rule>& rules = *trans.rules;
    MatchSelection sel =
        select_occurrences(ctx, coll_value, rules, trans.env, strategy);

    Env base = trans.env.bind("self", coll_value);
    struct Rewrite {
        const Occurrence* occ;
        std::vector<Value> repl;
    };
    std::vector<Rewrite> rewrites;
    rewrites.reserve(sel.occurrences.size());
    for (const Occurrence& occ : sel.occurrences) {
        Env env = base;
        for (const auto& [name, b] : occ.bindings)
            env = env.bind_pattern(name, b.value, b.binding);
        Value out = eval(ctx, env, rules[occ.rule_index].body);
        const Collection& rc = as_collection(out);
        if (rc.topo != Topo::Seq)
            throw EvalError("internal: rule body did not produce a sequence");
        rewrites.push_back({&occ, rc.items});
    }

    Collection result;
    result.topo = c.topo;
    switch (c.topo) {
        case Topo::Seq: {
            // Splice each replacement at the occurrence's leftmost matched
            // position; the occurrence's other positions disappear.
            std::map<std::size_t, const Rewrite*> at;
            for (const Rewrite& rw : rewrites)
                at[rw.occ->leftmost().row] = &rw;
            for (std::size_t i = 0; i < c.items.size(); i++) {
                auto it = at.find(i);
                if (it == at.end()) continue;
                for (const Value& v : it->second->repl)
                    result.items.push_back(v);
            }
            break;
        }
        case Topo::Set:
        case Topo::Bag: {
            // Matched elements vanish; replacements insert in selection
            // order (sets collapse duplicates).
            for (const Rewrite& rw : rewrites)
                for (const Value& v : rw.repl) result = cons(v, result);
            break;
        }
        case Topo::Grid: {
            result.rows = c.rows;
            result.cols = c.cols;
            result.items = c.items;
            for (const Rewrite& rw : rewrites) {
                if (rw.repl.size() != rw.occ->path.size())
                    throw StructuralError(
                        "structural error: pattern matched " +
                        std::to_string(rw.occ->path.size()) +
                        " positions, replacement has " +
                        std::to_string(rw.repl.size()) + " elements (grid " +
                        std::to_string(c.rows) + "x" + std::to_string(c.cols) +
                        ")");
                for (std::size_t i = 0; i < rw.repl.size(); i++) {
                    Position p = rw.occ->path[i];
                    result.items[p.row * c.cols + p.col] = rw.repl[i];
                }
            }
            break;
        }
    }
    return v_coll(std::move(result));
}

}  // namespace tml
