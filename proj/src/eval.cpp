#include "tml/eval.hpp"

#include <map>

#include "tml/infer.hpp"

namespace tml {

namespace {

int builtin_arity(const std::string& name) {
    static const std::map<std::string, int> arity = {
        {"::", 2},      {"oneof", 1},    {"rest", 1},     {"size", 1},
        {"fixpoint", 2}, {"left", 2},     {"right", 2},    {"north", 2},
        {"south", 2},   {"east", 2},     {"west", 2},     {"is_left", 2},
        {"is_right", 2}, {"is_north", 2}, {"is_south", 2}, {"is_east", 2},
        {"is_west", 2}, {"grid_from_rows", 1}, {"rows", 1}, {"not", 1},
        {"&&", 2},      {"||", 2},       {"=", 2},        {"<", 2},
        {">", 2},       {"+", 2},        {"-", 2},        {"*", 2},
        {"/", 2},       {"mod", 2},      {"+.", 2},       {"-.", 2},
        {"*.", 2},      {"/.", 2},
    };
    auto it = arity.find(name);
    return it != arity.end() ? it->second : 0;
}

long long as_int(const Value& v) {
    if (auto* i = std::get_if<long long>(&v.node->v)) return *i;
    throw EvalError("expected an integer value");
}
double as_float(const Value& v) {
    if (auto* d = std::get_if<double>(&v.node->v)) return *d;
    throw EvalError("expected a float value");
}
bool as_bool(const Value& v) {
    if (auto* b = std::get_if<bool>(&v.node->v)) return *b;
    throw EvalError("expected a boolean value");
}

Direction direction_of_builtin(const std::string& name) {
    std::string_view n = name;
    if (n.substr(0, 3) == "is_") n = n.substr(3);
    return *direction_from_name(n);
}

Value positional_builtin(const std::string& name,
                         const std::vector<BuiltinArg>& args) {
    const BuiltinArg& subject = args[0];
    if (!subject.binding)
        throw PositionalArgError("the first argument of '" + name +
                                 "' must be a pattern variable");
    const PatternBinding& pb = *subject.binding;
    if (pb.path.size() != 1)
        throw PositionalArgError("the first argument of '" + name +
                                 "' must denote a single position");
    const Collection& coll = as_collection(args[1].value);
    if (&coll != pb.source)
        throw PositionalArgError(
            "'" + name +
            "' applied to a collection other than the pattern variable's "
            "source");
    Direction d = direction_of_builtin(name);
    auto step = direction_step(coll, pb.path[0], d);
    if (name.substr(0, 3) == "is_") return v_bool(!step.has_value());
    if (!step)
        throw NoNeighbor("no '" + name + "' neighbor at this position");
    return coll.at(*step);
}

Value fixpoint(EvalContext& ctx, const Value& fn, const Value& start) {
    Value cur = start;
    for (long long step = 0; step < ctx.max_fixpoint_steps; step++) {
        Value next = apply_value(ctx, fn, cur);
        if (value_equal(cur, next)) return next;
        cur = std::move(next);
    }
    throw FixpointDivergence(
        "fixpoint did not converge within " +
        std::to_string(ctx.max_fixpoint_steps) + " steps");
}

Value grid_from_rows(const Value& rows_value) {
    const Collection& rows = as_collection(rows_value);
    Collection g;
    g.topo = Topo::Grid;
    g.rows = rows.items.size();
    g.cols = 0;
    for (std::size_t r = 0; r < rows.items.size(); r++) {
        const Collection& row = as_collection(rows.items[r]);
        if (r == 0) g.cols = row.items.size();
        if (row.items.size() != g.cols)
            throw StructuralError(
                "grid_from_rows: rows have unequal lengths");
        for (const Value& v : row.items) g.items.push_back(v);
    }
    return v_coll(std::move(g));
}

Value rows_of_grid(const Value& grid_value) {
    const Collection& g = as_collection(grid_value);
    if (g.topo != Topo::Grid) throw EvalError("'rows' expects a grid");
    Collection out;
    out.topo = Topo::Seq;
    for (std::size_t r = 0; r < g.rows; r++) {
        Collection row;
        row.topo = Topo::Seq;
        for (std::size_t c = 0; c < g.cols; c++)
            row.items.push_back(g.items[r * g.cols + c]);
        out.items.push_back(v_coll(std::move(row)));
    }
    return v_coll(std::move(out));
}

Value invoke_builtin(EvalContext& ctx, const std::string& name,
                     const std::vector<BuiltinArg>& args) {
    if (is_positional_op(name)) return positional_builtin(name, args);

    auto arg = [&](std::size_t i) -> const Value& { return args[i].value; };

    if (name == "::") return v_coll(cons(arg(0), as_collection(arg(1))));
    if (name == "oneof") return oneof(as_collection(arg(0)));
    if (name == "rest") return v_coll(rest(as_collection(arg(0))));
    if (name == "size")
        return v_int(static_cast<long long>(coll_size(as_collection(arg(0)))));
    if (name == "fixpoint") return fixpoint(ctx, arg(0), arg(1));
    if (name == "grid_from_rows") return grid_from_rows(arg(0));
    if (name == "rows") return rows_of_grid(arg(0));

    if (name == "not") return v_bool(!as_bool(arg(0)));
    if (name == "&&") return v_bool(as_bool(arg(0)) && as_bool(arg(1)));
    if (name == "||") return v_bool(as_bool(arg(0)) || as_bool(arg(1)));
    if (name == "=") return v_bool(value_equal(arg(0), arg(1)));
    if (name == "<") return v_bool(as_int(arg(0)) < as_int(arg(1)));
    if (name == ">") return v_bool(as_int(arg(0)) > as_int(arg(1)));

    if (name == "+") return v_int(as_int(arg(0)) + as_int(arg(1)));
    if (name == "-") return v_int(as_int(arg(0)) - as_int(arg(1)));
    if (name == "*") return v_int(as_int(arg(0)) * as_int(arg(1)));
    if (name == "/") {
        long long d = as_int(arg(1));
        if (d == 0) throw DivisionByZero("division by zero");
        return v_int(as_int(arg(0)) / d);
    }
    if (name == "mod") {
        long long d = as_int(arg(1));
        if (d == 0) throw DivisionByZero("division by zero in 'mod'");
        return v_int(as_int(arg(0)) % d);
    }
    if (name == "+.") return v_float(as_float(arg(0)) + as_float(arg(1)));
    if (name == "-.") return v_float(as_float(arg(0)) - as_float(arg(1)));
    if (name == "*.") return v_float(as_float(arg(0)) * as_float(arg(1)));
    if (name == "/.") return v_float(as_float(arg(0)) / as_float(arg(1)));

    throw EvalError("unknown builtin '" + name + "'");
}

Value apply_builtin_arg(EvalContext& ctx, const BuiltinV& b, BuiltinArg arg) {
    std::vector<BuiltinArg> args = b.args;
    args.push_back(std::move(arg));
    if (static_cast<int>(args.size()) == builtin_arity(b.name))
        return invoke_builtin(ctx, b.name, args);
    return v_builtin(b.name, std::move(args));
}

}  // namespace

std::optional<Value> builtin_constant(const std::string& name) {
    auto empty = [](Topo t) {
        Collection c;
        c.topo = t;
        return v_coll(std::move(c));
    };
    if (name == "empty_seq") return empty(Topo::Seq);
    if (name == "empty_set") return empty(Topo::Set);
    if (name == "empty_bag") return empty(Topo::Bag);
    if (builtin_arity(name) > 0) return v_builtin(name);
    return std::nullopt;
}

Value apply_value(EvalContext& ctx, const Value& fn, const Value& arg) {
    if (auto* c = std::get_if<ClosureV>(&fn.node->v))
        return eval(ctx, c->env.bind(c->param, arg), c->body);
    if (auto* t = std::get_if<TransV>(&fn.node->v)) {
        if (!is_collection(arg))
            throw EvalError("a transformation expects a collection argument");
        return apply_transformation(ctx, *t, arg, ctx.pass_strategy());
    }
    if (auto* b = std::get_if<BuiltinV>(&fn.node->v))
        return apply_builtin_arg(ctx, *b, BuiltinArg{arg, std::nullopt});
    throw EvalError("value is not a function");
}

Value eval(EvalContext& ctx, const Env& env, const Expr& e) {
    struct V {
        EvalContext& ctx;
        const Env& env;
        const Expr& e;

        Value operator()(const VarE& x) const {
            if (const Env::Entry* entry = env.lookup(x.name))
                return entry->value;
            if (auto v = builtin_constant(x.name)) return *v;
            throw UnboundIdentifier("unbound identifier '" + x.name + "'",
                                    e->loc);
        }
        Value operator()(const LitE& l) const {
            if (auto* i = std::get_if<long long>(&l.value)) return v_int(*i);
            if (auto* d = std::get_if<double>(&l.value)) return v_float(*d);
            if (auto* b = std::get_if<bool>(&l.value)) return v_bool(*b);
            return v_string(std::get<std::string>(l.value));
        }
        Value operator()(const PairE& p) const {
            Value first = eval(ctx, env, p.first);
            Value second = eval(ctx, env, p.second);
            return v_pair(std::move(first), std::move(second));
        }
        Value operator()(const FunE& f) const {
            return v_closure(f.param, f.body, env);
        }
        Value operator()(const LetE& l) const {
            Value bound = eval(ctx, env, l.bound);
            return eval(ctx, env.bind(l.name, std::move(bound)), l.body);
        }
        Value operator()(const TransE& t) const {
            return v_trans(t.rules, env);
        }
        Value operator()(const AppE& a) const {
            Value fn = eval(ctx, env, a.fn);
            // A neighborhood operator consumes its first argument as a
            // pattern-variable binding, position included.
            if (auto* b = std::get_if<BuiltinV>(&fn.node->v)) {
                if (is_positional_op(b->name) && b->args.empty()) {
                    auto* var = std::get_if<VarE>(&a.arg->v);
                    const Env::Entry* entry =
                        var ? env.lookup(var->name) : nullptr;
                    if (!entry || !entry->binding)
                        throw PositionalArgError(
                            "the first argument of '" + b->name +
                                "' must be a pattern variable",
                            a.arg->loc);
                    return v_builtin(
                        b->name, {BuiltinArg{entry->value, entry->binding}});
                }
            }
            Value arg = eval(ctx, env, a.arg);
            return apply_value(ctx, fn, std::move(arg));
        }
    };
    return std::visit(V{ctx, env, e}, e->v);
}

}  // namespace tml
