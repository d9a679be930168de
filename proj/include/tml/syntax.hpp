#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tml/errors.hpp"

namespace tml {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

using Literal = std::variant<long long, double, bool, std::string>;

enum class Direction { Left, Right, North, South, East, West };

const char* direction_name(Direction d);
std::optional<Direction> direction_from_name(std::string_view name);
// left/right walk a sequence, the other four walk a grid.
bool direction_on_seq(Direction d);

enum class LinkKind { None, Comma, Dir };
enum class ElemKind { Plain, Guarded, Star };

// One elementary pattern together with the link that joins it to the
// previous element. The first element of a pattern has link == None.
struct PatElem {
    LinkKind link = LinkKind::None;
    Direction dir = Direction::Left;  // meaningful when link == Dir
    ElemKind kind = ElemKind::Plain;
    std::string name;
    Expr guard;  // non-null iff kind == Guarded
    SourceLoc loc;
};

struct Pattern {
    std::vector<PatElem> elems;
};

struct Rule {
    Pattern pattern;
    Expr body;
};

struct VarE {
    std::string name;
};
struct LitE {
    Literal value;
};
struct PairE {
    Expr first, second;
};
struct FunE {
    std::string param;
    Expr body;
};
struct AppE {
    Expr fn, arg;
};
struct LetE {
    std::string name;
    Expr bound, body;
};
struct TransE {
    std::shared_ptr<const std::vector<Rule>> rules;
};

struct ExprNode {
    SourceLoc loc;
    std::variant<VarE, LitE, PairE, FunE, AppE, LetE, TransE> v;
};

Expr e_var(std::string name, SourceLoc loc = {});
Expr e_lit(Literal value, SourceLoc loc = {});
Expr e_pair(Expr first, Expr second, SourceLoc loc = {});
Expr e_fun(std::string param, Expr body, SourceLoc loc = {});
Expr e_app(Expr fn, Expr arg, SourceLoc loc = {});
Expr e_let(std::string name, Expr bound, Expr body, SourceLoc loc = {});
Expr e_trans(std::vector<Rule> rules, SourceLoc loc = {});

// A top-level program item: `let <id> = <expr>;;` or `<expr>;;`.
struct Item {
    std::optional<std::string> name;
    Expr expr;
    SourceLoc loc;
};

std::vector<Item> parse_program(std::string_view source);
Expr parse_expression(std::string_view source);
Pattern parse_pattern(std::string_view source);

std::string print_expr(const Expr& e);
std::string print_pattern(const Pattern& p);

bool is_reserved_word(std::string_view s);

// Shared literal formatting (used by the value printer as well).
// Floats render with the shortest round-trip digits and always carry a
// '.' or exponent so they re-parse as floats.
std::string format_float_literal(double d);
std::string quote_string_literal(const std::string& s);

}  // namespace tml
