#include "tml/infer.hpp"

#include <set>

#include "tml/unify.hpp"

namespace tml {

// ---------------------------------------------------------------------------
// Constant table
// ---------------------------------------------------------------------------

namespace {

// Scheme builders; ids are local to each scheme.
Type va() { return t_var(0); }
Topology rt() { return Topology::var(0); }

TypeScheme poly_at(Type body) { return make_scheme({0, 1}, {0}, body); }
TypeScheme mono(Type body) { return scheme_of(body); }

Type arrow2(Type a, Type b, Type c) {
    return t_arrow(std::move(a), t_arrow(std::move(b), std::move(c)));
}

}  // namespace

ConstantTable::ConstantTable() {
    const Type i = t_int();
    const Type f = t_float();
    const Type b = t_bool();

    // Collection constructors and destructors.
    map_["::"] = poly_at(arrow2(va(), t_coll(va(), rt()), t_coll(va(), rt())));
    map_["oneof"] = poly_at(t_arrow(t_coll(va(), rt()), va()));
    map_["rest"] =
        poly_at(t_arrow(t_coll(va(), rt()), t_coll(va(), rt())));
    map_["size"] = poly_at(t_arrow(t_coll(va(), rt()), i));
    map_["empty_seq"] =
        make_scheme({0}, {}, t_coll(va(), Topology::make(BaseTopo::Seq)));
    map_["empty_set"] =
        make_scheme({0}, {}, t_coll(va(), Topology::make(BaseTopo::Set)));
    map_["empty_bag"] =
        make_scheme({0}, {}, t_coll(va(), Topology::make(BaseTopo::Bag)));
    map_["fixpoint"] = poly_at(
        arrow2(t_arrow(t_coll(va(), rt()), t_coll(va(), rt())),
               t_coll(va(), rt()), t_coll(va(), rt())));

    // Neighborhood operators. The seq pair walks sequences, the four
    // compass ones walk grids; is_* tests for the boundary.
    const Topology seq = Topology::make(BaseTopo::Seq);
    const Topology grid = Topology::make(BaseTopo::Grid);
    for (const char* name : {"left", "right"})
        map_[name] = make_scheme({0}, {},
                                 arrow2(va(), t_coll(va(), seq), va()));
    for (const char* name : {"is_left", "is_right"})
        map_[name] =
            make_scheme({0}, {}, arrow2(va(), t_coll(va(), seq), b));
    for (const char* name : {"north", "south", "east", "west"})
        map_[name] = make_scheme({0}, {},
                                 arrow2(va(), t_coll(va(), grid), va()));
    for (const char* name : {"is_north", "is_south", "is_east", "is_west"})
        map_[name] =
            make_scheme({0}, {}, arrow2(va(), t_coll(va(), grid), b));

    // Grid construction (grids have no literal syntax).
    map_["grid_from_rows"] = make_scheme(
        {0}, {}, t_arrow(t_coll(t_coll(va(), seq), seq), t_coll(va(), grid)));
    map_["rows"] = make_scheme(
        {0}, {}, t_arrow(t_coll(va(), grid), t_coll(t_coll(va(), seq), seq)));

    // Booleans and comparisons. `=` is polymorphic; the runtime rejects
    // comparisons of functions.
    map_["not"] = mono(t_arrow(b, b));
    map_["&&"] = mono(arrow2(b, b, b));
    map_["||"] = mono(arrow2(b, b, b));
    map_["="] = make_scheme({0}, {}, arrow2(va(), va(), b));
    map_["<"] = mono(arrow2(i, i, b));
    map_[">"] = mono(arrow2(i, i, b));

    // Arithmetic is monomorphic; float arithmetic uses the dotted names.
    for (const char* name : {"+", "-", "*", "/", "mod"})
        map_[name] = mono(arrow2(i, i, i));
    for (const char* name : {"+.", "-.", "*.", "/."})
        map_[name] = mono(arrow2(f, f, f));
}

const ConstantTable& ConstantTable::instance() {
    static const ConstantTable table;
    return table;
}

const TypeScheme* ConstantTable::lookup(const std::string& name) const {
    auto it = map_.find(name);
    return it != map_.end() ? &it->second : nullptr;
}

const TypeScheme& tc_lookup(const std::string& name) {
    const TypeScheme* s = ConstantTable::instance().lookup(name);
    if (!s) throw UnknownConstant("unknown constant '" + name + "'");
    return *s;
}

// ---------------------------------------------------------------------------
// Algorithm W
// ---------------------------------------------------------------------------

namespace {

// Unification failures keep their class but gain the location of the
// offending subexpression.
template <typename F>
auto with_loc(SourceLoc loc, F&& f) {
    try {
        return f();
    } catch (const UnifyMismatch& e) {
        throw UnifyMismatch(e.what(), e.loc().known() ? e.loc() : loc);
    } catch (const OccursCheckError& e) {
        throw OccursCheckError(e.what(), e.loc().known() ? e.loc() : loc);
    } catch (const TopoMismatch& e) {
        throw TopoMismatch(e.what(), e.loc().known() ? e.loc() : loc);
    }
}

void unify_in(InferState& st, const Type& a, const Type& b, SourceLoc loc) {
    with_loc(loc, [&] {
        st.subst = Substitution::compose(mgu(st.subst(a), st.subst(b)),
                                         st.subst);
        return 0;
    });
}

void unify_topo_in(InferState& st, const Topology& r, BaseTopo base,
                   SourceLoc loc) {
    with_loc(loc, [&] {
        st.subst = Substitution::compose(
            mgu_topo(st.subst(r), Topology::make(base)), st.subst);
        return 0;
    });
}

Type infer_trans(const TypeEnv& env, const TransE& tr, InferState& st) {
    Type alpha = t_var(st.supply.fresh_tvar());
    Type beta = t_var(st.supply.fresh_tvar());
    Topology theta = Topology::var(st.supply.fresh_rvar());
    Type self_ty = t_coll(alpha, theta);
    TypeEnv base = env.bind("self", scheme_of(self_ty));

    // b(q, alpha): a plain or guarded variable binds at the content type,
    // a star binds at a sequence of it.
    auto binding_type = [&](const PatElem& e) {
        return e.kind == ElemKind::Star
                   ? t_coll(alpha, Topology::make(BaseTopo::Seq))
                   : alpha;
    };

    for (const Rule& rule : *tr.rules) {
        TypeEnv rule_env = base;
        for (const PatElem& e : rule.pattern.elems) {
            if (e.link == LinkKind::Dir)
                unify_topo_in(st, theta,
                              direction_on_seq(e.dir) ? BaseTopo::Seq
                                                      : BaseTopo::Grid,
                              e.loc);
            rule_env = rule_env.bind(e.name, scheme_of(binding_type(e)));
            // A guard sees self and the pattern variables bound so far,
            // including its own element.
            if (e.guard) {
                Type g = infer_w(rule_env, e.guard, st);
                unify_in(st, g, t_bool(), e.guard->loc);
            }
        }
        Type body = infer_w(rule_env, rule.body, st);
        unify_in(st, body, t_coll(beta, Topology::make(BaseTopo::Seq)),
                 rule.body->loc);
    }
    return t_arrow(self_ty, t_coll(beta, theta));
}

}  // namespace

Type infer_w(const TypeEnv& env, const Expr& e, InferState& st) {
    struct V {
        const TypeEnv& env;
        const Expr& e;
        InferState& st;

        Type operator()(const VarE& x) const {
            if (const TypeScheme* s = env.lookup(x.name))
                return instantiate(*s, st.supply);
            if (const TypeScheme* s = ConstantTable::instance().lookup(x.name))
                return instantiate(*s, st.supply);
            throw UnboundIdentifier("unbound identifier '" + x.name + "'",
                                    e->loc);
        }
        Type operator()(const LitE& l) const {
            if (std::holds_alternative<long long>(l.value)) return t_int();
            if (std::holds_alternative<double>(l.value)) return t_float();
            if (std::holds_alternative<bool>(l.value)) return t_bool();
            return t_string();
        }
        Type operator()(const PairE& p) const {
            Type a = infer_w(env, p.first, st);
            Type b = infer_w(env, p.second, st);
            return t_product(a, b);
        }
        Type operator()(const FunE& f) const {
            Type a = t_var(st.supply.fresh_tvar());
            Type body = infer_w(env.bind(f.param, scheme_of(a)), f.body, st);
            return t_arrow(a, body);
        }
        Type operator()(const AppE& a) const {
            Type t1 = infer_w(env, a.fn, st);
            Type t2 = infer_w(env, a.arg, st);
            Type res = t_var(st.supply.fresh_tvar());
            unify_in(st, t1, t_arrow(t2, res), e->loc);
            return res;
        }
        Type operator()(const LetE& l) const {
            Type t1 = infer_w(env, l.bound, st);
            TypeScheme sigma =
                generalize(st.subst(t1), apply_subst(st.subst, env));
            return infer_w(env.bind(l.name, std::move(sigma)), l.body, st);
        }
        Type operator()(const TransE& tr) const {
            return infer_trans(env, tr, st);
        }
    };
    return std::visit(V{env, e, st}, e->v);
}

Type infer_type(const TypeEnv& env, const Expr& e, FreshSupply& supply) {
    InferState st;
    st.supply = supply;
    Type t = infer_w(env, e, st);
    supply = st.supply;
    return st.subst(t);
}

Type infer_type(const TypeEnv& env, const Expr& e) {
    FreshSupply supply;
    return infer_type(env, e, supply);
}

// ---------------------------------------------------------------------------
// Verification oracle
// ---------------------------------------------------------------------------

namespace {

struct MatchState {
    std::set<int> bindable_t, bindable_r;
    std::map<int, Type> tbind;
    std::map<int, Topology> rbind;
};

bool match_topo(const Topology& pat, const Topology& target, MatchState& ms) {
    if (pat.is_var) {
        if (ms.bindable_r.count(pat.id)) {
            auto [it, inserted] = ms.rbind.emplace(pat.id, target);
            return inserted ? true : it->second == target;
        }
        return target == pat;  // free variable: must match itself
    }
    return pat == target;
}

bool match_type(const Type& pat, const Type& target, MatchState& ms) {
    if (auto* v = std::get_if<TVarT>(&pat->v)) {
        if (ms.bindable_t.count(v->id)) {
            auto [it, inserted] = ms.tbind.emplace(v->id, target);
            return inserted ? true : type_equal(it->second, target);
        }
        return type_equal(pat, target);
    }
    if (pat->v.index() != target->v.index()) return false;
    if (auto* b = std::get_if<BaseType>(&pat->v))
        return *b == std::get<BaseType>(target->v);
    if (auto* a = std::get_if<ArrowT>(&pat->v)) {
        const auto& t = std::get<ArrowT>(target->v);
        return match_type(a->from, t.from, ms) && match_type(a->to, t.to, ms);
    }
    if (auto* p = std::get_if<ProductT>(&pat->v)) {
        const auto& t = std::get<ProductT>(target->v);
        return match_type(p->first, t.first, ms) &&
               match_type(p->second, t.second, ms);
    }
    const auto& c = std::get<CollT>(pat->v);
    const auto& t = std::get<CollT>(target->v);
    return match_topo(c.topo, t.topo, ms) &&
           match_type(c.content, t.content, ms);
}

}  // namespace

bool scheme_admits(const TypeScheme& s, const Type& claimed) {
    MatchState ms;
    ms.bindable_t.insert(s.tvars.begin(), s.tvars.end());
    ms.bindable_r.insert(s.rvars.begin(), s.rvars.end());
    return match_type(s.body, claimed, ms);
}

bool check_type(const TypeEnv& env, const Expr& e, const Type& claimed) {
    InferState st;
    Type t = infer_w(env, e, st);
    TypeScheme sigma = generalize(st.subst(t), apply_subst(st.subst, env));
    return scheme_admits(sigma, claimed);
}

// ---------------------------------------------------------------------------
// Positional-operator restrictions
// ---------------------------------------------------------------------------

bool is_positional_op(const std::string& name) {
    static const std::set<std::string> ops = {
        "left",     "right",    "north",    "south",    "east",    "west",
        "is_left",  "is_right", "is_north", "is_south", "is_east", "is_west"};
    return ops.count(name) > 0;
}

namespace {

enum class BindKind { Ordinary, PatternVar };

using ScopeMap = std::map<std::string, BindKind>;

void check_restrictions(const Expr& e, const ScopeMap& scope) {
    struct V {
        const Expr& e;
        const ScopeMap& scope;

        bool shadowed(const std::string& name) const {
            return scope.count(name) > 0;
        }

        void operator()(const VarE& x) const {
            if (is_positional_op(x.name) && !shadowed(x.name))
                throw PositionalOpError(
                    "operator '" + x.name +
                        "' may only be applied inside a transformation to a "
                        "pattern variable and a collection",
                    e->loc);
        }
        void operator()(const LitE&) const {}
        void operator()(const PairE& p) const {
            check_restrictions(p.first, scope);
            check_restrictions(p.second, scope);
        }
        void operator()(const FunE& f) const {
            ScopeMap inner = scope;
            inner[f.param] = BindKind::Ordinary;
            check_restrictions(f.body, inner);
        }
        void operator()(const LetE& l) const {
            check_restrictions(l.bound, scope);
            ScopeMap inner = scope;
            inner[l.name] = BindKind::Ordinary;
            check_restrictions(l.body, inner);
        }
        void operator()(const AppE& a) const {
            if (auto* inner = std::get_if<AppE>(&a.fn->v)) {
                if (auto* op = std::get_if<VarE>(&inner->fn->v)) {
                    if (is_positional_op(op->name) && !shadowed(op->name)) {
                        auto* arg1 = std::get_if<VarE>(&inner->arg->v);
                        bool ok = arg1 && scope.count(arg1->name) &&
                                  scope.at(arg1->name) == BindKind::PatternVar;
                        if (!ok)
                            throw PositionalOpError(
                                "the first argument of '" + op->name +
                                    "' must be a pattern variable",
                                inner->arg->loc);
                        check_restrictions(a.arg, scope);
                        return;
                    }
                }
            }
            check_restrictions(a.fn, scope);
            check_restrictions(a.arg, scope);
        }
        void operator()(const TransE& tr) const {
            for (const Rule& rule : *tr.rules) {
                ScopeMap rule_scope = scope;
                for (const PatElem& el : rule.pattern.elems) {
                    rule_scope[el.name] = BindKind::PatternVar;
                    if (el.guard) check_restrictions(el.guard, rule_scope);
                }
                check_restrictions(rule.body, rule_scope);
            }
        }
    };
    std::visit(V{e, scope}, e->v);
}

}  // namespace

void check_positional_restrictions(const Expr& e) {
    check_restrictions(e, ScopeMap{});
}

}  // namespace tml
