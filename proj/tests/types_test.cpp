#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tml/types.hpp"

using namespace tml;

namespace {

Topology seq_topo() { return Topology::make(BaseTopo::Seq); }

}  // namespace

TEST_CASE("free type variables") {
    // [a]t contributes only a to the type variables
    Type coll = t_coll(t_var(0), Topology::var(0));
    CHECK(free_type_vars(coll) == std::set<int>{0});
    CHECK(free_type_vars(t_int()).empty());

    // forall a1 t1. [a1]t1 -> [a2]t2 has free tvar a2 and free rvar t2
    TypeScheme s = make_scheme(
        {0}, {0},
        t_arrow(t_coll(t_var(0), Topology::var(0)),
                t_coll(t_var(1), Topology::var(1))));
    CHECK(free_type_vars(s) == std::set<int>{1});
    CHECK(free_topo_vars(s) == std::set<int>{1});
}

TEST_CASE("free topology variables") {
    Type nested = t_coll(t_coll(t_int(), Topology::var(0)), Topology::var(1));
    CHECK(free_topo_vars(nested) == std::set<int>{0, 1});
    CHECK(free_topo_vars(t_arrow(t_int(), t_int())).empty());
    // base topologies contribute nothing
    CHECK(free_topo_vars(t_coll(t_var(0), seq_topo())).empty());
}

TEST_CASE("substitution application") {
    Substitution s;
    s.bind_t(0, t_int());
    s.bind_r(0, seq_topo());
    Type t = t_coll(t_var(0), Topology::var(0));
    CHECK(type_equal(s(t), t_coll(t_int(), seq_topo())));

    Substitution empty;
    CHECK(type_equal(empty(t), t));

    // composition law: ({b <- bool} after {a <- b}) maps a to bool
    Substitution first = Substitution::single_t(0, t_var(1));
    Substitution second = Substitution::single_t(1, t_bool());
    Substitution both = Substitution::compose(second, first);
    CHECK(type_equal(both(t_var(0)), t_bool()));
    CHECK(type_equal(both(t_var(1)), t_bool()));
}

TEST_CASE("substitution composition is associative, empty is identity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; i++) {
        Type t = testing::random_type(rng);
        Substitution a = testing::random_idempotent_subst(rng);
        Substitution b = testing::random_idempotent_subst(rng);
        Substitution c = testing::random_idempotent_subst(rng);
        Type lhs = Substitution::compose(Substitution::compose(a, b), c)(t);
        Type rhs = Substitution::compose(a, Substitution::compose(b, c))(t);
        CHECK(type_equal(lhs, rhs));
        CHECK(type_equal(Substitution::compose(a, Substitution())(t), a(t)));
        CHECK(type_equal(Substitution::compose(Substitution(), a)(t), a(t)));
        // compose really is "apply b, then a"
        CHECK(type_equal(Substitution::compose(a, b)(t), a(b(t))));
    }
}

TEST_CASE("generalize quantifies what the environment leaves free") {
    Type body = t_arrow(t_coll(t_var(0), Topology::var(0)),
                        t_coll(t_var(0), Topology::var(0)));
    TypeScheme s = generalize(body, TypeEnv{});
    CHECK(s.tvars == std::vector<int>{0});
    CHECK(s.rvars == std::vector<int>{0});

    TypeEnv env = TypeEnv{}.bind("y", scheme_of(t_var(0)));
    TypeScheme s2 = generalize(
        t_arrow(t_coll(t_var(0), Topology::var(0)), t_int()), env);
    CHECK(s2.tvars.empty());  // a is free in the environment
    CHECK(s2.rvars == std::vector<int>{0});

    TypeScheme s3 = generalize(t_int(), TypeEnv{});
    CHECK(s3.tvars.empty());
    CHECK(s3.rvars.empty());
}

TEST_CASE("instantiate replaces quantified variables with fresh ones") {
    // forall a t. a -> [a]t -> [a]t
    TypeScheme cons_scheme = make_scheme(
        {0}, {0},
        t_arrow(t_var(0), t_arrow(t_coll(t_var(0), Topology::var(0)),
                                  t_coll(t_var(0), Topology::var(0)))));
    FreshSupply supply;
    supply.next_tvar = 50;
    supply.next_rvar = 50;
    Type inst = instantiate(cons_scheme, supply);
    CHECK(alpha_equal(inst, cons_scheme.body));
    for (int id : free_type_vars(inst)) CHECK(id >= 50);
    for (int id : free_topo_vars(inst)) CHECK(id >= 50);

    Type inst2 = instantiate(cons_scheme, supply);
    for (int id : free_type_vars(inst)) CHECK(!free_type_vars(inst2).count(id));

    CHECK(type_equal(instantiate(scheme_of(t_int()), supply), t_int()));
}

TEST_CASE("generalize then instantiate is alpha-equivalent to the original") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; i++) {
        Type t = testing::random_type(rng);
        TypeScheme s = generalize(t, TypeEnv{});
        FreshSupply supply;
        supply.next_tvar = 100;
        supply.next_rvar = 100;
        CHECK(alpha_equal(instantiate(s, supply), t));
    }
}

TEST_CASE("substitution leaves no stale variables behind") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; i++) {
        Type t = testing::random_type(rng);
        Substitution s = testing::random_idempotent_subst(rng);
        Type applied = s(t);
        for (const auto& [id, _] : s.tmap())
            CHECK(!free_type_vars(applied).count(id));
        for (const auto& [id, _] : s.rmap())
            CHECK(!free_topo_vars(applied).count(id));
    }
}

TEST_CASE("alpha equivalence by canonical renaming") {
    Type a = t_arrow(t_coll(t_var(3), Topology::var(7)),
                     t_coll(t_var(3), Topology::var(7)));
    Type b = t_arrow(t_coll(t_var(0), Topology::var(1)),
                     t_coll(t_var(0), Topology::var(1)));
    CHECK(alpha_equal(a, b));
    Type c = t_arrow(t_coll(t_var(0), Topology::var(0)),
                     t_coll(t_var(1), Topology::var(0)));
    CHECK(!alpha_equal(a, c));
    // the two sorts rename independently
    CHECK(alpha_equal(t_coll(t_var(9), Topology::var(2)),
                      t_coll(t_var(0), Topology::var(0))));
}

TEST_CASE("type printing is bit-exact") {
    CHECK(print_type(t_arrow(t_coll(t_int(), seq_topo()),
                             t_coll(t_int(), seq_topo()))) ==
          "[int]seq -> [int]seq");
    CHECK(print_type(t_arrow(t_coll(t_var(4), Topology::var(9)),
                             t_coll(t_var(4), Topology::var(9)))) ==
          "['a]!t -> ['a]!t");
    Type map_ty = t_arrow(
        t_arrow(t_var(0), t_var(1)),
        t_arrow(t_coll(t_var(0), Topology::var(0)),
                t_coll(t_var(1), Topology::var(0))));
    CHECK(print_type(map_ty) == "('a -> 'b) -> ['a]!t -> ['b]!t");
    CHECK(print_type(t_product(t_int(), t_bool())) == "int * bool");
    CHECK(print_type(t_arrow(t_product(t_int(), t_bool()), t_string())) ==
          "int * bool -> string");
    CHECK(print_type(t_coll(t_arrow(t_int(), t_int()), seq_topo())) ==
          "[int -> int]seq");
    CHECK(print_type(t_coll(t_coll(t_var(0), seq_topo()),
                            Topology::make(BaseTopo::Grid))) ==
          "[['a]seq]grid");
}
