#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tml/eval.hpp"
#include "tml/transform.hpp"

using namespace tml;
using namespace tml::testing;

namespace {

std::set<Position> all_positions(const Collection& c) {
    auto v = c.positions();
    return std::set<Position>(v.begin(), v.end());
}

const TransV& as_trans(const Value& v) { return std::get<TransV>(v.node->v); }

Value make_trans(EvalContext& ctx, const std::string& src) {
    return eval(ctx, Env{}, parse_expression(src));
}

std::vector<Rule> parse_rules(const std::string& src) {
    Expr e = parse_expression(src);
    return *std::get<TransE>(e->v).rules;
}

}  // namespace

TEST_CASE("match_rule anchors a two-element pattern") {
    EvalContext ctx;
    Value coll = v_coll(int_seq({3, 1}));
    Pattern pat = parse_pattern("x, y/(y < x)");
    auto occ = match_rule(ctx, coll, pat, Env{}.bind("self", coll),
                          all_positions(as_collection(coll)), {0, 0});
    REQUIRE(occ.has_value());
    CHECK(occ->path == std::vector<Position>{{0, 0}, {1, 0}});
    CHECK(value_equal(occ->bindings[0].second.value, v_int(3)));
    CHECK(value_equal(occ->bindings[1].second.value, v_int(1)));

    // no match when the guard fails everywhere
    Value sorted = v_coll(int_seq({1, 3}));
    auto none = match_rule(ctx, sorted, pat, Env{}.bind("self", sorted),
                           all_positions(as_collection(sorted)), {0, 0});
    CHECK(!none.has_value());
}

TEST_CASE("match_rule with a star finds the shortest bridge") {
    EvalContext ctx;
    Value coll = v_coll(int_seq({0, 5, 5, 0}));
    Pattern pat = parse_pattern("x/(x = 0), * as y, z/(z = 0)");
    auto occ = match_rule(ctx, coll, pat, Env{}.bind("self", coll),
                          all_positions(as_collection(coll)), {0, 0});
    REQUIRE(occ.has_value());
    CHECK(occ->path ==
          std::vector<Position>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    // the star bound the two 5s in path order
    const OccBinding& star = occ->bindings[1].second;
    CHECK(value_equal(star.value, v_coll(int_seq({5, 5}))));
    CHECK(star.binding.path ==
          std::vector<Position>{{1, 0}, {2, 0}});
}

TEST_CASE("match_rule honors direction links on grids") {
    EvalContext ctx;
    Pattern pat = parse_pattern("x/(x = false) |north> y/(y = true)");

    // false above true: no anchor works
    Value g1 = v_coll(bool_grid(2, 1, {false, true}));
    CHECK(!match_rule(ctx, g1, pat, Env{}.bind("self", g1),
                      all_positions(as_collection(g1)), {1, 0})
               .has_value());
    CHECK(!match_rule(ctx, g1, pat, Env{}.bind("self", g1),
                      all_positions(as_collection(g1)), {0, 0})
               .has_value());

    // true above false: anchor at the false cell steps north onto true
    Value g2 = v_coll(bool_grid(2, 1, {true, false}));
    auto occ = match_rule(ctx, g2, pat, Env{}.bind("self", g2),
                          all_positions(as_collection(g2)), {1, 0});
    REQUIRE(occ.has_value());
    CHECK(occ->path == std::vector<Position>{{1, 0}, {0, 0}});
}

TEST_CASE("a direction link into a star pins the segment's first step") {
    EvalContext ctx;
    Value coll = v_coll(int_seq({1, 2, 3}));
    Pattern pat = parse_pattern("x |right> * as y, z/(z = 3)");
    auto occ = match_rule(ctx, coll, pat, Env{}.bind("self", coll),
                          all_positions(as_collection(coll)), {0, 0});
    REQUIRE(occ.has_value());
    CHECK(occ->path ==
          std::vector<Position>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(value_equal(occ->bindings[1].second.value, v_coll(int_seq({2}))));
}

TEST_CASE("priority selection is greedy in canonical anchor order") {
    EvalContext ctx;
    Value coll = v_coll(int_seq({1, 2, 3, 4}));
    std::vector<Rule> rules = parse_rules("trans [ l, x => [l] ; x => [x] ]");
    MatchSelection sel = select_occurrences(ctx, coll, rules, Env{},
                                            Strategy::priority());
    REQUIRE(sel.occurrences.size() == 2);
    CHECK(sel.occurrences[0].path ==
          std::vector<Position>{{0, 0}, {1, 0}});
    CHECK(sel.occurrences[1].path ==
          std::vector<Position>{{2, 0}, {3, 0}});

    Value coll2 = v_coll(int_seq({3, 1, 2}));
    std::vector<Rule> sort_rules = parse_rules(
        "trans [ x, y/(y < x) => y :: x :: empty_seq ; x => [x] ]");
    MatchSelection sel2 = select_occurrences(ctx, coll2, sort_rules, Env{},
                                             Strategy::priority());
    REQUIRE(sel2.occurrences.size() == 2);
    CHECK(sel2.occurrences[0].rule_index == 0);
    CHECK(sel2.occurrences[0].path ==
          std::vector<Position>{{0, 0}, {1, 0}});
    CHECK(sel2.occurrences[1].rule_index == 1);
    CHECK(sel2.occurrences[1].path == std::vector<Position>{{2, 0}});
}

TEST_CASE("a default-only transformation matches every position singly") {
    EvalContext ctx;
    std::vector<Rule> rules = parse_rules("trans [ x => [x] ]");
    for (const Collection& c :
         {int_seq({1, 2, 3}), int_set({1, 2, 3}), int_bag({1, 1, 2}),
          bool_grid(2, 2, {true, false, true, false})}) {
        Value v = v_coll(c);
        MatchSelection sel =
            select_occurrences(ctx, v, rules, Env{}, Strategy::priority());
        CHECK(sel.occurrences.size() == c.positions().size());
        for (const Occurrence& occ : sel.occurrences)
            CHECK(occ.path.size() == 1);
        CHECK(selection_disjoint_and_total(c, sel));
    }
}

TEST_CASE("identity transformation preserves every topology") {
    EvalContext ctx;
    Value identity = make_trans(ctx, "trans [ x => [x] ]");
    for (const Collection& c :
         {int_seq({1, 2, 3}), int_seq({}), int_set({4, 5}), int_bag({1, 1, 2}),
          bool_grid(2, 3, {true, false, true, false, true, false})}) {
        Value in = v_coll(c);
        Value out = apply_transformation(ctx, as_trans(identity), in,
                                         Strategy::priority());
        CHECK(value_equal(in, out));
    }
}

TEST_CASE("sequence substitution splices at the leftmost matched position") {
    EvalContext ctx;
    Value t = make_trans(
        ctx, "trans [ l, x => l :: l + x :: empty_seq ; x => [x] ]");
    Value out = apply_transformation(ctx, as_trans(t),
                                     v_coll(int_seq({1, 2, 3, 4})),
                                     Strategy::priority());
    CHECK(value_equal(out, v_coll(int_seq({1, 3, 3, 7}))));

    // shrinking rules: drop one of each adjacent pair
    Value shrink = make_trans(ctx, "trans [ l, x => [l] ; x => [x] ]");
    Value out2 = apply_transformation(ctx, as_trans(shrink),
                                      v_coll(int_seq({1, 2, 3, 4, 5})),
                                      Strategy::priority());
    CHECK(value_equal(out2, v_coll(int_seq({1, 3, 5}))));

    // growing rules: duplicate everything
    Value grow = make_trans(ctx, "trans [ x => x :: x :: empty_seq ]");
    Value out3 = apply_transformation(ctx, as_trans(grow),
                                      v_coll(int_seq({1, 2})),
                                      Strategy::priority());
    CHECK(value_equal(out3, v_coll(int_seq({1, 1, 2, 2}))));
}

TEST_CASE("sieve reaches the primes on a set") {
    EvalContext ctx;
    Value sieve = make_trans(
        ctx, "trans [ x, y/(y mod x = 0) => [x] ; x => [x] ]");
    std::vector<long long> ints;
    for (long long k = 2; k <= 20; k++) ints.push_back(k);
    Value cur = v_coll(int_set(ints));
    for (;;) {
        Value next = apply_transformation(ctx, as_trans(sieve), cur,
                                          Strategy::priority());
        if (value_equal(cur, next)) break;
        cur = next;
    }
    std::set<long long> expected = primes_up_to(20);
    std::vector<long long> primes(expected.begin(), expected.end());
    CHECK(value_equal(cur, v_coll(int_set(primes))));
}

TEST_CASE("bead sort lets the beads fall") {
    EvalContext ctx;
    Value bead = make_trans(ctx,
                            "trans [ x/(x = false) |north> y/(y = true) => "
                            "y :: x :: empty_seq ; x => [x] ]");
    Collection start = bool_grid(3, 2,
                                 {true, false,
                                  false, true,
                                  false, false});
    Value cur = v_coll(start);
    for (;;) {
        Value next = apply_transformation(ctx, as_trans(bead), cur,
                                          Strategy::priority());
        if (value_equal(cur, next)) break;
        cur = next;
    }
    CHECK(value_equal(cur, v_coll(gravity_reference(start))));
}

TEST_CASE("grid rules must preserve the matched size") {
    EvalContext ctx;
    Value bad = make_trans(
        ctx, "trans [ x, y => x :: y :: x :: empty_seq ; x => [x] ]");
    try {
        apply_transformation(ctx, as_trans(bad),
                             v_coll(bool_grid(2, 2, {true, true, true, true})),
                             Strategy::priority());
        FAIL("expected StructuralError");
    } catch (const StructuralError& e) {
        CHECK(std::string(e.what()) ==
              "structural error: pattern matched 2 positions, replacement "
              "has 3 elements (grid 2x2)");
    }

    // same-size replacements keep the dimensions
    Value swap = make_trans(
        ctx, "trans [ x, y => y :: x :: empty_seq ; x => [x] ]");
    Value out = apply_transformation(
        ctx, as_trans(swap),
        v_coll(bool_grid(2, 2, {true, false, false, true})),
        Strategy::priority());
    const Collection& g = as_collection(out);
    CHECK(g.rows == 2);
    CHECK(g.cols == 2);
}

TEST_CASE("guard errors abort the pass") {
    EvalContext ctx;
    Value bad = make_trans(
        ctx, "trans [ x/(1 / (x - x) = 0) => [x] ; x => [x] ]");
    CHECK_THROWS_AS(apply_transformation(ctx, as_trans(bad),
                                         v_coll(int_seq({1, 2})),
                                         Strategy::priority()),
                    DivisionByZero);
}

TEST_CASE("sort fixpoint matches the reference sort on random sequences") {
    std::mt19937_64 rng(59);
    EvalContext ctx;
    Value sort = make_trans(
        ctx, "trans [ x, y/(y < x) => y :: x :: empty_seq ; x => [x] ]");
    for (int i = 0; i < 100; i++) {
        std::size_t n = rng() % 21;
        std::vector<long long> xs;
        for (std::size_t k = 0; k < n; k++)
            xs.push_back(static_cast<long long>(rng() % 50));
        Value cur = v_coll(int_seq(xs));
        for (;;) {
            Value next = apply_transformation(ctx, as_trans(sort), cur,
                                              Strategy::priority());
            if (value_equal(cur, next)) break;
            cur = next;
        }
        std::vector<long long> expected = xs;
        std::sort(expected.begin(), expected.end());
        CHECK(value_equal(cur, v_coll(int_seq(expected))));
    }
}

TEST_CASE("selections are disjoint, total and maximal against brute force") {
    std::mt19937_64 rng(61);
    EvalContext ctx;
    int checked = 0;
    for (int i = 0; i < 300; i++) {
        Collection c = random_collection(rng);
        bool allow_star = c.items.size() <= 6;
        Pattern pat = random_pattern(rng, c.topo, allow_star);
        std::vector<Rule> rules;
        rules.push_back(Rule{pat, parse_expression("[0]")});
        rules.push_back(
            Rule{parse_pattern("default_var"), parse_expression("[0]")});
        Value coll = v_coll(c);
        MatchSelection sel = select_occurrences(ctx, coll, rules, Env{},
                                                Strategy::priority());
        CHECK(selection_disjoint_and_total(c, sel));
        CHECK(selection_maximal(ctx, coll, rules, Env{}.bind("self", coll),
                                sel));
        checked++;
    }
    CHECK(checked == 300);
}

TEST_CASE("random strategy keeps the selection guarantees") {
    std::mt19937_64 rng(67);
    EvalContext ctx;
    for (int round = 0; round < 40; round++) {
        Collection c = random_collection(rng);
        Pattern pat = random_pattern(rng, c.topo, false);
        std::vector<Rule> rules;
        rules.push_back(Rule{pat, parse_expression("[0]")});
        rules.push_back(
            Rule{parse_pattern("default_var"), parse_expression("[0]")});
        Value coll = v_coll(c);
        std::uint64_t seed = rng();
        MatchSelection sel = select_occurrences(ctx, coll, rules, Env{},
                                                Strategy::random(seed));
        CHECK(selection_disjoint_and_total(c, sel));
        CHECK(selection_maximal(ctx, coll, rules, Env{}.bind("self", coll),
                                sel));

        // same seed, same selection
        MatchSelection sel2 = select_occurrences(ctx, coll, rules, Env{},
                                                 Strategy::random(seed));
        REQUIRE(sel.occurrences.size() == sel2.occurrences.size());
        for (std::size_t k = 0; k < sel.occurrences.size(); k++)
            CHECK(sel.occurrences[k].path == sel2.occurrences[k].path);
    }
}

TEST_CASE("grid shape is preserved by every pass") {
    std::mt19937_64 rng(71);
    EvalContext ctx;
    Value swap = make_trans(
        ctx, "trans [ x, y/(y < x) => y :: x :: empty_seq ; x => [x] ]");
    for (int i = 0; i < 50; i++) {
        std::size_t rows = rng() % 3 + 1, cols = rng() % 3 + 1;
        Collection g;
        g.topo = Topo::Grid;
        g.rows = rows;
        g.cols = cols;
        for (std::size_t k = 0; k < rows * cols; k++)
            g.items.push_back(v_int(static_cast<long long>(rng() % 5)));
        Value out = apply_transformation(ctx, as_trans(swap), v_coll(g),
                                         Strategy::priority());
        const Collection& o = as_collection(out);
        CHECK(o.rows == rows);
        CHECK(o.cols == cols);
    }
}
