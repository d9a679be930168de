#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tml/syntax.hpp"

namespace tml {

enum class Topo { Seq, Set, Bag, Grid };
const char* topo_name(Topo t);

// A position inside a collection. Sequences, sets and bags use row as a
// flat index; grids use (row, col). Positions order row-major, which is
// the canonical scanning order everywhere.
struct Position {
    std::size_t row = 0;
    std::size_t col = 0;
    auto operator<=>(const Position&) const = default;
};

struct ValueNode;

struct Value {
    std::shared_ptr<const ValueNode> node;
};

// Positions + content + neighborhood, one of seq/set/bag/grid.
//  - seq: items in sequence order.
//  - set: duplicate-free items in insertion order.
//  - bag: items in insertion order, equal values grouped at the first
//    insertion point; each instance is its own position.
//  - grid: dense row-major items, rows x cols.
struct Collection {
    Topo topo = Topo::Seq;
    std::size_t rows = 0, cols = 0;  // grid only
    std::vector<Value> items;

    std::size_t size() const { return items.size(); }
    bool valid(Position p) const;
    const Value& at(Position p) const;  // throws InvalidPosition
    std::vector<Position> positions() const;
};

struct PairV {
    Value first, second;
};

// Runtime environment: a persistent chain of bindings. Entries made for
// pattern variables additionally carry the matched position(s) and the
// collection they came from, which the neighborhood operators consult.
struct PatternBinding {
    std::vector<Position> path;
    const Collection* source = nullptr;
};

class Env {
public:
    struct Entry {
        std::string name;
        Value value;
        std::optional<PatternBinding> binding;
    };

    Env() = default;
    Env bind(std::string name, Value v) const;
    Env bind_pattern(std::string name, Value v, PatternBinding b) const;
    const Entry* lookup(std::string_view name) const;

private:
    struct Node {
        Entry entry;
        std::shared_ptr<const Node> next;
    };
    std::shared_ptr<const Node> head_;
};

struct ClosureV {
    std::string param;
    Expr body;
    Env env;
};

struct TransV {
    std::shared_ptr<const std::vector<Rule>> rules;
    Env env;
};

struct BuiltinArg {
    Value value;
    std::optional<PatternBinding> binding;
};

// A partially applied builtin constant.
struct BuiltinV {
    std::string name;
    std::vector<BuiltinArg> args;
};

struct ValueNode {
    std::variant<long long, double, bool, std::string, PairV, ClosureV, TransV,
                 BuiltinV, Collection>
        v;
};

Value v_int(long long i);
Value v_float(double d);
Value v_bool(bool b);
Value v_string(std::string s);
Value v_pair(Value first, Value second);
Value v_coll(Collection c);
Value v_closure(std::string param, Expr body, Env env);
Value v_trans(std::shared_ptr<const std::vector<Rule>> rules, Env env);
Value v_builtin(std::string name, std::vector<BuiltinArg> args = {});

const Collection& as_collection(const Value& v);  // throws EvalError
bool is_collection(const Value& v);

// Neighborhood relation: adjacent indices on a seq, everything else on a
// set or bag, the Von Neumann four on a grid. Returned in canonical
// position order.
std::vector<Position> neighbors(const Collection& c, Position p);

// One step along a direction; absent at the boundary. left/right require
// a seq, north/south/east/west a grid (row 0 is the top row, so north
// decreases the row index).
std::optional<Position> direction_step(const Collection& c, Position p,
                                       Direction d);

Collection cons(const Value& v, const Collection& c);
Value oneof(const Collection& c);
Collection rest(const Collection& c);
std::size_t coll_size(const Collection& c);

// Structural equality: base values by value (floats bitwise), pairs
// componentwise, seqs ordered, sets as sets, bags as multisets, grids by
// dimensions and elements. Comparing functions raises IncomparableValue.
bool value_equal(const Value& a, const Value& b);
// Total order consistent with value_equal; used to sort multisets.
int value_compare(const Value& a, const Value& b);

std::string print_value(const Value& v);

}  // namespace tml
