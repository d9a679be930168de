#include "tml/collections.hpp"

#include <algorithm>
#include <cstring>

namespace tml {

const char* topo_name(Topo t) {
    switch (t) {
        case Topo::Seq: return "seq";
        case Topo::Set: return "set";
        case Topo::Bag: return "bag";
        case Topo::Grid: return "grid";
    }
    return "?";
}

bool Collection::valid(Position p) const {
    if (topo == Topo::Grid) return p.row < rows && p.col < cols;
    return p.row < items.size() && p.col == 0;
}

const Value& Collection::at(Position p) const {
    if (!valid(p))
        throw InvalidPosition("invalid position in " +
                              std::string(topo_name(topo)));
    if (topo == Topo::Grid) return items[p.row * cols + p.col];
    return items[p.row];
}

std::vector<Position> Collection::positions() const {
    std::vector<Position> out;
    if (topo == Topo::Grid) {
        out.reserve(rows * cols);
        for (std::size_t r = 0; r < rows; r++)
            for (std::size_t c = 0; c < cols; c++) out.push_back({r, c});
    } else {
        out.reserve(items.size());
        for (std::size_t i = 0; i < items.size(); i++) out.push_back({i, 0});
    }
    return out;
}

Env Env::bind(std::string name, Value v) const {
    Env out;
    out.head_ = std::make_shared<const Node>(
        Node{Entry{std::move(name), std::move(v), std::nullopt}, head_});
    return out;
}

Env Env::bind_pattern(std::string name, Value v, PatternBinding b) const {
    Env out;
    out.head_ = std::make_shared<const Node>(
        Node{Entry{std::move(name), std::move(v), std::move(b)}, head_});
    return out;
}

const Env::Entry* Env::lookup(std::string_view name) const {
    for (const Node* n = head_.get(); n; n = n->next.get())
        if (n->entry.name == name) return &n->entry;
    return nullptr;
}

Value v_int(long long i) {
    return Value{std::make_shared<ValueNode>(ValueNode{i})};
}
Value v_float(double d) {
    return Value{std::make_shared<ValueNode>(ValueNode{d})};
}
Value v_bool(bool b) {
    return Value{std::make_shared<ValueNode>(ValueNode{b})};
}
Value v_string(std::string s) {
    return Value{std::make_shared<ValueNode>(ValueNode{std::move(s)})};
}
Value v_pair(Value first, Value second) {
    return Value{std::make_shared<ValueNode>(
        ValueNode{PairV{std::move(first), std::move(second)}})};
}
Value v_coll(Collection c) {
    return Value{std::make_shared<ValueNode>(ValueNode{std::move(c)})};
}
Value v_closure(std::string param, Expr body, Env env) {
    return Value{std::make_shared<ValueNode>(
        ValueNode{ClosureV{std::move(param), std::move(body), std::move(env)}})};
}
Value v_trans(std::shared_ptr<const std::vector<Rule>> rules, Env env) {
    return Value{std::make_shared<ValueNode>(
        ValueNode{TransV{std::move(rules), std::move(env)}})};
}
Value v_builtin(std::string name, std::vector<BuiltinArg> args) {
    return Value{std::make_shared<ValueNode>(
        ValueNode{BuiltinV{std::move(name), std::move(args)}})};
}

const Collection& as_collection(const Value& v) {
    if (auto* c = std::get_if<Collection>(&v.node->v)) return *c;
    throw EvalError("expected a collection value");
}

bool is_collection(const Value& v) {
    return std::holds_alternative<Collection>(v.node->v);
}

std::vector<Position> neighbors(const Collection& c, Position p) {
    if (!c.valid(p))
        throw InvalidPosition("invalid position in " +
                              std::string(topo_name(c.topo)));
    std::vector<Position> out;
    switch (c.topo) {
        case Topo::Seq:
            if (p.row > 0) out.push_back({p.row - 1, 0});
            if (p.row + 1 < c.items.size()) out.push_back({p.row + 1, 0});
            break;
        case Topo::Set:
        case Topo::Bag:
            for (std::size_t i = 0; i < c.items.size(); i++)
                if (i != p.row) out.push_back({i, 0});
            break;
        case Topo::Grid:
            if (p.row > 0) out.push_back({p.row - 1, p.col});
            if (p.col > 0) out.push_back({p.row, p.col - 1});
            if (p.col + 1 < c.cols) out.push_back({p.row, p.col + 1});
            if (p.row + 1 < c.rows) out.push_back({p.row + 1, p.col});
            break;
    }
    return out;
}

std::optional<Position> direction_step(const Collection& c, Position p,
                                       Direction d) {
    if (!c.valid(p))
        throw InvalidPosition("invalid position in " +
                              std::string(topo_name(c.topo)));
    bool seq_dir = direction_on_seq(d);
    if (c.topo == Topo::Seq && !seq_dir)
        throw DirectionTopologyMismatch(
            std::string("direction '") + direction_name(d) +
            "' does not apply to a sequence");
    if (c.topo == Topo::Grid && seq_dir)
        throw DirectionTopologyMismatch(std::string("direction '") +
                                        direction_name(d) +
                                        "' does not apply to a grid");
    if (c.topo == Topo::Set || c.topo == Topo::Bag)
        throw DirectionTopologyMismatch(
            std::string("direction '") + direction_name(d) +
            "' does not apply to a " + topo_name(c.topo));
    switch (d) {
        case Direction::Left:
            if (p.row == 0) return std::nullopt;
            return Position{p.row - 1, 0};
        case Direction::Right:
            if (p.row + 1 >= c.items.size()) return std::nullopt;
            return Position{p.row + 1, 0};
        case Direction::North:
            if (p.row == 0) return std::nullopt;
            return Position{p.row - 1, p.col};
        case Direction::South:
            if (p.row + 1 >= c.rows) return std::nullopt;
            return Position{p.row + 1, p.col};
        case Direction::East:
            if (p.col + 1 >= c.cols) return std::nullopt;
            return Position{p.row, p.col + 1};
        case Direction::West:
            if (p.col == 0) return std::nullopt;
            return Position{p.row, p.col - 1};
    }
    return std::nullopt;
}

Collection cons(const Value& v, const Collection& c) {
    if (c.topo == Topo::Grid)
        throw GridUnsupportedOp("'::' is not supported on grids");
    Collection out = c;
    switch (c.topo) {
        case Topo::Seq:
            out.items.insert(out.items.begin(), v);
            break;
        case Topo::Set: {
            for (const auto& e : c.items)
                if (value_equal(e, v)) return out;  // already present
            out.items.push_back(v);
            break;
        }
        case Topo::Bag: {
            // Keep equal values grouped at their first insertion point.
            for (std::size_t i = 0; i < out.items.size(); i++) {
                if (value_equal(out.items[i], v)) {
                    out.items.insert(out.items.begin() + i, v);
                    return out;
                }
            }
            out.items.push_back(v);
            break;
        }
        case Topo::Grid:
            break;
    }
    return out;
}

Value oneof(const Collection& c) {
    if (c.topo == Topo::Grid)
        throw GridUnsupportedOp("'oneof' is not supported on grids");
    if (c.items.empty())
        throw EmptyCollectionError("'oneof' applied to an empty collection");
    return c.items.front();
}

Collection rest(const Collection& c) {
    if (c.topo == Topo::Grid)
        throw GridUnsupportedOp("'rest' is not supported on grids");
    if (c.items.empty())
        throw EmptyCollectionError("'rest' applied to an empty collection");
    Collection out = c;
    out.items.erase(out.items.begin());
    return out;
}

std::size_t coll_size(const Collection& c) { return c.items.size(); }

// ---------------------------------------------------------------------------
// Equality and ordering
// ---------------------------------------------------------------------------

namespace {

int cmp3(long long a, long long b) { return a < b ? -1 : a > b ? 1 : 0; }

// IEEE total order via the sign-flipped bit pattern; equal iff bitwise
// equal, which is what guard equality wants.
int cmp_double(double a, double b) {
    std::uint64_t ua, ub;
    std::memcpy(&ua, &a, 8);
    std::memcpy(&ub, &b, 8);
    auto key = [](std::uint64_t u) -> std::uint64_t {
        return (u & 0x8000000000000000ull) ? ~u : u | 0x8000000000000000ull;
    };
    std::uint64_t ka = key(ua), kb = key(ub);
    return ka < kb ? -1 : ka > kb ? 1 : 0;
}

std::vector<Value> sorted_items(const std::vector<Value>& items) {
    std::vector<Value> s = items;
    std::sort(s.begin(), s.end(), [](const Value& a, const Value& b) {
        return value_compare(a, b) < 0;
    });
    return s;
}

}  // namespace

int value_compare(const Value& a, const Value& b) {
    const auto& va = a.node->v;
    const auto& vb = b.node->v;
    if (std::holds_alternative<ClosureV>(va) ||
        std::holds_alternative<ClosureV>(vb) ||
        std::holds_alternative<TransV>(va) ||
        std::holds_alternative<TransV>(vb) ||
        std::holds_alternative<BuiltinV>(va) ||
        std::holds_alternative<BuiltinV>(vb))
        throw IncomparableValue("functions cannot be compared");
    if (va.index() != vb.index())
        return cmp3(static_cast<long long>(va.index()),
                    static_cast<long long>(vb.index()));
    if (auto* ia = std::get_if<long long>(&va))
        return cmp3(*ia, std::get<long long>(vb));
    if (auto* da = std::get_if<double>(&va))
        return cmp_double(*da, std::get<double>(vb));
    if (auto* ba = std::get_if<bool>(&va))
        return cmp3(*ba, std::get<bool>(vb));
    if (auto* sa = std::get_if<std::string>(&va))
        return sa->compare(std::get<std::string>(vb)) < 0
                   ? -1
                   : (*sa == std::get<std::string>(vb) ? 0 : 1);
    if (auto* pa = std::get_if<PairV>(&va)) {
        const auto& pb = std::get<PairV>(vb);
        int c = value_compare(pa->first, pb.first);
        return c != 0 ? c : value_compare(pa->second, pb.second);
    }
    const auto& ca = std::get<Collection>(va);
    const auto& cb = std::get<Collection>(vb);
    if (ca.topo != cb.topo)
        return cmp3(static_cast<long long>(ca.topo),
                    static_cast<long long>(cb.topo));
    if (ca.topo == Topo::Grid) {
        if (int c = cmp3(static_cast<long long>(ca.rows),
                         static_cast<long long>(cb.rows)))
            return c;
        if (int c = cmp3(static_cast<long long>(ca.cols),
                         static_cast<long long>(cb.cols)))
            return c;
    }
    if (int c = cmp3(static_cast<long long>(ca.items.size()),
                     static_cast<long long>(cb.items.size())))
        return c;
    bool unordered = ca.topo == Topo::Set || ca.topo == Topo::Bag;
    std::vector<Value> ia = unordered ? sorted_items(ca.items) : ca.items;
    std::vector<Value> ib = unordered ? sorted_items(cb.items) : cb.items;
    for (std::size_t i = 0; i < ia.size(); i++)
        if (int c = value_compare(ia[i], ib[i])) return c;
    return 0;
}

bool value_equal(const Value& a, const Value& b) {
    return value_compare(a, b) == 0;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string print_value(const Value& v) {
    struct V {
        std::string operator()(long long i) const { return std::to_string(i); }
        std::string operator()(double d) const {
            return format_float_literal(d);
        }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const {
            return quote_string_literal(s);
        }
        std::string operator()(const PairV& p) const {
            return "(" + print_value(p.first) + ", " + print_value(p.second) +
                   ")";
        }
        std::string operator()(const ClosureV&) const { return "<fun>"; }
        std::string operator()(const TransV&) const { return "<trans>"; }
        std::string operator()(const BuiltinV&) const { return "<fun>"; }
        std::string operator()(const Collection& c) const {
            switch (c.topo) {
                case Topo::Seq: {
                    if (c.items.empty()) return "empty_seq";
                    std::string out = "(";
                    for (const auto& e : c.items)
                        out += print_value(e) + "::";
                    out += "empty_seq)";
                    return out;
                }
                case Topo::Set:
                case Topo::Bag: {
                    std::string out = "{";
                    bool first = true;
                    for (const auto& e : c.items) {
                        if (!first) out += ", ";
                        first = false;
                        out += print_value(e);
                    }
                    out += "}";
                    out += c.topo == Topo::Set ? "set" : "bag";
                    return out;
                }
                case Topo::Grid: {
                    std::string out = "grid(" + std::to_string(c.rows) +
                                      " x " + std::to_string(c.cols) + ")[ ";
                    for (std::size_t r = 0; r < c.rows; r++) {
                        if (r > 0) out += " ";
                        out += "[";
                        for (std::size_t col = 0; col < c.cols; col++) {
                            if (col > 0) out += " ";
                            out += print_value(c.items[r * c.cols + col]);
                        }
                        out += "]";
                    }
                    out += " ]";
                    return out;
                }
            }
            return "?";
        }
    };
    return std::visit(V{}, v.node->v);
}

}  // namespace tml
