#include "tml/syntax.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace tml {

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::Left: return "left";
        case Direction::Right: return "right";
        case Direction::North: return "north";
        case Direction::South: return "south";
        case Direction::East: return "east";
        case Direction::West: return "west";
    }
    return "?";
}

std::optional<Direction> direction_from_name(std::string_view name) {
    if (name == "left") return Direction::Left;
    if (name == "right") return Direction::Right;
    if (name == "north") return Direction::North;
    if (name == "south") return Direction::South;
    if (name == "east") return Direction::East;
    if (name == "west") return Direction::West;
    return std::nullopt;
}

bool direction_on_seq(Direction d) {
    return d == Direction::Left || d == Direction::Right;
}

bool is_reserved_word(std::string_view s) {
    return s == "fun" || s == "let" || s == "in" || s == "trans" ||
           s == "as" || s == "mod" || s == "true" || s == "false" ||
           s == "self";
}

Expr e_var(std::string name, SourceLoc loc) {
    return std::make_shared<ExprNode>(ExprNode{loc, VarE{std::move(name)}});
}
Expr e_lit(Literal value, SourceLoc loc) {
    return std::make_shared<ExprNode>(ExprNode{loc, LitE{std::move(value)}});
}
Expr e_pair(Expr first, Expr second, SourceLoc loc) {
    return std::make_shared<ExprNode>(
        ExprNode{loc, PairE{std::move(first), std::move(second)}});
}
Expr e_fun(std::string param, Expr body, SourceLoc loc) {
    return std::make_shared<ExprNode>(
        ExprNode{loc, FunE{std::move(param), std::move(body)}});
}
Expr e_app(Expr fn, Expr arg, SourceLoc loc) {
    return std::make_shared<ExprNode>(
        ExprNode{loc, AppE{std::move(fn), std::move(arg)}});
}
Expr e_let(std::string name, Expr bound, Expr body, SourceLoc loc) {
    return std::make_shared<ExprNode>(ExprNode{
        loc, LetE{std::move(name), std::move(bound), std::move(body)}});
}
Expr e_trans(std::vector<Rule> rules, SourceLoc loc) {
    auto shared =
        std::make_shared<const std::vector<Rule>>(std::move(rules));
    return std::make_shared<ExprNode>(ExprNode{loc, TransE{std::move(shared)}});
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
    Ident,
    Int,
    Float,
    Str,
    True,
    False,
    KwFun,
    KwLet,
    KwIn,
    KwTrans,
    KwAs,
    KwMod,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    SemiSemi,
    Slash,
    Star,
    Plus,
    Minus,
    PlusDot,
    MinusDot,
    StarDot,
    SlashDot,
    Lt,
    Gt,
    Eq,
    FatArrow,
    Arrow,
    ColonColon,
    AndAnd,
    OrOr,
    DirLink,  // |name>
    Eof,
};

struct Token {
    Tok kind = Tok::Eof;
    std::string text;  // identifier / direction name / string contents
    long long int_value = 0;
    double float_value = 0;
    SourceLoc loc;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            Token t = next();
            bool done = t.kind == Tok::Eof;
            out.push_back(std::move(t));
            if (done) break;
        }
        return out;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& msg, SourceLoc loc) {
        throw ParseError(msg, loc);
    }

    SourceLoc here() const { return SourceLoc{line_, col_}; }

    bool eof() const { return pos_ >= src_.size(); }
    char peek(std::size_t off = 0) const {
        return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
    }
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        return c;
    }

    void skip_ws_and_comments() {
        for (;;) {
            while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
                advance();
            if (peek() == '(' && peek(1) == '*') {
                SourceLoc start = here();
                advance();
                advance();
                int depth = 1;
                while (depth > 0) {
                    if (eof()) fail("unterminated comment", start);
                    if (peek() == '(' && peek(1) == '*') {
                        advance();
                        advance();
                        depth++;
                    } else if (peek() == '*' && peek(1) == ')') {
                        advance();
                        advance();
                        depth--;
                    } else {
                        advance();
                    }
                }
                continue;
            }
            break;
        }
    }

    Token make(Tok kind, SourceLoc loc, std::string text = {}) {
        Token t;
        t.kind = kind;
        t.text = std::move(text);
        t.loc = loc;
        return t;
    }

    Token next() {
        skip_ws_and_comments();
        SourceLoc loc = here();
        if (eof()) return make(Tok::Eof, loc);
        char c = peek();

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return ident(loc);
        if (std::isdigit(static_cast<unsigned char>(c))) return number(loc);
        if (c == '"') return string_lit(loc);

        advance();
        switch (c) {
            case '(': return make(Tok::LParen, loc);
            case ')': return make(Tok::RParen, loc);
            case '[': return make(Tok::LBracket, loc);
            case ']': return make(Tok::RBracket, loc);
            case ',': return make(Tok::Comma, loc);
            case ';':
                if (peek() == ';') {
                    advance();
                    return make(Tok::SemiSemi, loc);
                }
                return make(Tok::Semi, loc);
            case '/':
                if (peek() == '.') {
                    advance();
                    return make(Tok::SlashDot, loc);
                }
                return make(Tok::Slash, loc);
            case '*':
                if (peek() == '.') {
                    advance();
                    return make(Tok::StarDot, loc);
                }
                return make(Tok::Star, loc);
            case '+':
                if (peek() == '.') {
                    advance();
                    return make(Tok::PlusDot, loc);
                }
                return make(Tok::Plus, loc);
            case '-':
                if (peek() == '>') {
                    advance();
                    return make(Tok::Arrow, loc);
                }
                if (peek() == '.') {
                    advance();
                    return make(Tok::MinusDot, loc);
                }
                return make(Tok::Minus, loc);
            case '<': return make(Tok::Lt, loc);
            case '>': return make(Tok::Gt, loc);
            case '=':
                if (peek() == '>') {
                    advance();
                    return make(Tok::FatArrow, loc);
                }
                return make(Tok::Eq, loc);
            case ':':
                if (peek() == ':') {
                    advance();
                    return make(Tok::ColonColon, loc);
                }
                fail("unexpected character ':'", loc);
            case '&':
                if (peek() == '&') {
                    advance();
                    return make(Tok::AndAnd, loc);
                }
                fail("unexpected character '&'", loc);
            case '|': {
                if (peek() == '|') {
                    advance();
                    return make(Tok::OrOr, loc);
                }
                // direction link |name>
                std::string name;
                while (std::isalpha(static_cast<unsigned char>(peek())) ||
                       peek() == '_')
                    name += advance();
                if (name.empty())
                    fail("expected a direction name after '|'", loc);
                if (peek() != '>')
                    fail("expected '>' to close direction '|" + name + "'",
                         loc);
                advance();
                return make(Tok::DirLink, loc, std::move(name));
            }
            default:
                fail(std::string("unexpected character '") + c + "'", loc);
        }
    }

    Token ident(SourceLoc loc) {
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) ||
               peek() == '_' || peek() == '\'')
            s += advance();
        if (s == "fun") return make(Tok::KwFun, loc);
        if (s == "let") return make(Tok::KwLet, loc);
        if (s == "in") return make(Tok::KwIn, loc);
        if (s == "trans") return make(Tok::KwTrans, loc);
        if (s == "as") return make(Tok::KwAs, loc);
        if (s == "mod") return make(Tok::KwMod, loc);
        if (s == "true") return make(Tok::True, loc);
        if (s == "false") return make(Tok::False, loc);
        return make(Tok::Ident, loc, std::move(s));
    }

    Token number(SourceLoc loc) {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            s += advance();
        if (peek() == '.' && peek(1) != '.') {
            s += advance();
            while (std::isdigit(static_cast<unsigned char>(peek())))
                s += advance();
            Token t = make(Tok::Float, loc);
            t.float_value = std::strtod(s.c_str(), nullptr);
            return t;
        }
        Token t = make(Tok::Int, loc);
        t.int_value = std::strtoll(s.c_str(), nullptr, 10);
        return t;
    }

    Token string_lit(SourceLoc loc) {
        advance();  // opening quote
        std::string s;
        for (;;) {
            if (eof()) fail("unterminated string literal", loc);
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) fail("unterminated string literal", loc);
                char e = advance();
                switch (e) {
                    case 'n': s += '\n'; break;
                    case 't': s += '\t'; break;
                    case '\\': s += '\\'; break;
                    case '"': s += '"'; break;
                    default:
                        fail(std::string("unknown escape '\\") + e + "'", loc);
                }
            } else {
                s += c;
            }
        }
        return make(Tok::Str, loc, std::move(s));
    }
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

    std::vector<Item> program() {
        std::vector<Item> items;
        while (peek().kind != Tok::Eof) items.push_back(item());
        return items;
    }

    Expr expression_only() {
        Expr e = expr();
        expect(Tok::Eof, "end of input");
        return e;
    }

    Pattern pattern_only() {
        rule_depth_++;  // standalone patterns may use self in guards
        Pattern p = pattern();
        rule_depth_--;
        expect(Tok::Eof, "end of input");
        return p;
    }

private:
    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    int rule_depth_ = 0;  // > 0 while parsing a rule guard or body

    const Token& peek(std::size_t off = 0) const {
        std::size_t i = idx_ + off;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& advance() { return toks_[idx_ < toks_.size() - 1 ? idx_++ : idx_]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            advance();
            return true;
        }
        return false;
    }
    const Token& expect(Tok k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError("expected " + what, peek().loc);
        return toks_[idx_++];
    }

    std::string binder_name(const Token& t) {
        if (t.kind != Tok::Ident)
            throw ParseError("expected an identifier", t.loc);
        if (t.text == "self")
            throw ParseError("'self' is a reserved word and cannot be bound",
                             t.loc);
        return t.text;
    }

    Item item() {
        SourceLoc loc = peek().loc;
        if (peek().kind == Tok::KwLet) {
            advance();
            std::string name = binder_name(expect(Tok::Ident, "an identifier"));
            expect(Tok::Eq, "'='");
            Expr bound = expr();
            if (accept(Tok::KwIn)) {
                Expr body = expr();
                expect(Tok::SemiSemi, "';;'");
                return Item{std::nullopt, e_let(name, bound, body, loc), loc};
            }
            expect(Tok::SemiSemi, "';;'");
            return Item{name, bound, loc};
        }
        Expr e = expr();
        expect(Tok::SemiSemi, "';;'");
        return Item{std::nullopt, e, loc};
    }

    Expr expr() {
        SourceLoc loc = peek().loc;
        if (accept(Tok::KwFun)) {
            std::string param = binder_name(expect(Tok::Ident, "a parameter name"));
            expect(Tok::Arrow, "'->'");
            return e_fun(param, expr(), loc);
        }
        if (accept(Tok::KwLet)) {
            std::string name = binder_name(expect(Tok::Ident, "an identifier"));
            expect(Tok::Eq, "'='");
            Expr bound = expr();
            expect(Tok::KwIn, "'in'");
            return e_let(name, bound, expr(), loc);
        }
        return or_expr();
    }

    Expr infix(const char* op, Expr l, Expr r, SourceLoc loc) {
        return e_app(e_app(e_var(op, loc), std::move(l), loc), std::move(r),
                     loc);
    }

    Expr or_expr() {
        Expr l = and_expr();
        while (peek().kind == Tok::OrOr) {
            SourceLoc loc = advance().loc;
            l = infix("||", l, and_expr(), loc);
        }
        return l;
    }

    Expr and_expr() {
        Expr l = cmp_expr();
        while (peek().kind == Tok::AndAnd) {
            SourceLoc loc = advance().loc;
            l = infix("&&", l, cmp_expr(), loc);
        }
        return l;
    }

    Expr cmp_expr() {
        Expr l = cons_expr();
        for (;;) {
            const char* op = nullptr;
            switch (peek().kind) {
                case Tok::Eq: op = "="; break;
                case Tok::Lt: op = "<"; break;
                case Tok::Gt: op = ">"; break;
                default: return l;
            }
            SourceLoc loc = advance().loc;
            l = infix(op, l, cons_expr(), loc);
        }
    }

    Expr cons_expr() {
        Expr l = add_expr();
        if (peek().kind == Tok::ColonColon) {
            SourceLoc loc = advance().loc;
            return infix("::", l, cons_expr(), loc);  // right-associative
        }
        return l;
    }

    Expr add_expr() {
        Expr l = mul_expr();
        for (;;) {
            const char* op = nullptr;
            switch (peek().kind) {
                case Tok::Plus: op = "+"; break;
                case Tok::Minus: op = "-"; break;
                case Tok::PlusDot: op = "+."; break;
                case Tok::MinusDot: op = "-."; break;
                default: return l;
            }
            SourceLoc loc = advance().loc;
            l = infix(op, l, mul_expr(), loc);
        }
    }

    Expr mul_expr() {
        Expr l = app_expr();
        for (;;) {
            const char* op = nullptr;
            switch (peek().kind) {
                case Tok::Star: op = "*"; break;
                case Tok::Slash: op = "/"; break;
                case Tok::KwMod: op = "mod"; break;
                case Tok::StarDot: op = "*."; break;
                case Tok::SlashDot: op = "/."; break;
                default: return l;
            }
            SourceLoc loc = advance().loc;
            l = infix(op, l, app_expr(), loc);
        }
    }

    bool atom_start() const {
        switch (peek().kind) {
            case Tok::Ident:
            case Tok::Int:
            case Tok::Float:
            case Tok::Str:
            case Tok::True:
            case Tok::False:
            case Tok::LParen:
            case Tok::LBracket:
            case Tok::KwTrans:
                return true;
            default:
                return false;
        }
    }

    Expr app_expr() {
        Expr f = atom();
        while (atom_start()) f = e_app(f, atom(), f->loc);
        return f;
    }

    Expr atom() {
        const Token& t = peek();
        SourceLoc loc = t.loc;
        switch (t.kind) {
            case Tok::Ident: {
                advance();
                if (t.text == "self" && rule_depth_ == 0)
                    throw ParseError(
                        "'self' may only appear inside a transformation rule",
                        loc);
                return e_var(t.text, loc);
            }
            case Tok::Int:
                advance();
                return e_lit(Literal(t.int_value), loc);
            case Tok::Float:
                advance();
                return e_lit(Literal(t.float_value), loc);
            case Tok::Str:
                advance();
                return e_lit(Literal(t.text), loc);
            case Tok::True:
                advance();
                return e_lit(Literal(true), loc);
            case Tok::False:
                advance();
                return e_lit(Literal(false), loc);
            case Tok::LParen: {
                advance();
                Expr e = expr();
                if (accept(Tok::Comma)) {
                    Expr snd = expr();
                    expect(Tok::RParen, "')'");
                    return e_pair(e, snd, loc);
                }
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::LBracket: {
                // [e] is sugar for e :: empty_seq
                advance();
                Expr e = expr();
                expect(Tok::RBracket, "']'");
                return infix("::", e, e_var("empty_seq", loc), loc);
            }
            case Tok::KwTrans:
                return trans();
            default:
                throw ParseError("expected an expression", loc);
        }
    }

    Expr trans() {
        SourceLoc loc = expect(Tok::KwTrans, "'trans'").loc;
        expect(Tok::LBracket, "'['");
        std::vector<Rule> rules;
        rules.push_back(rule());
        while (accept(Tok::Semi)) rules.push_back(rule());
        expect(Tok::RBracket, "']'");
        const Pattern& last = rules.back().pattern;
        if (last.elems.size() != 1 || last.elems[0].kind != ElemKind::Plain)
            throw ParseError(
                "the last rule of a transformation must be a single bare "
                "variable",
                last.elems.empty() ? loc : last.elems[0].loc);
        return e_trans(std::move(rules), loc);
    }

    Rule rule() {
        rule_depth_++;
        Pattern p = pattern();
        expect(Tok::FatArrow, "'=>'");
        Expr body = expr();
        rule_depth_--;
        return Rule{std::move(p), std::move(body)};
    }

    Pattern pattern() {
        Pattern p;
        p.elems.push_back(elem(LinkKind::None, Direction::Left));
        for (;;) {
            if (accept(Tok::Comma)) {
                p.elems.push_back(elem(LinkKind::Comma, Direction::Left));
            } else if (peek().kind == Tok::DirLink) {
                Token t = advance();
                auto d = direction_from_name(t.text);
                if (!d)
                    throw ParseError("unknown direction '" + t.text + "'",
                                     t.loc);
                p.elems.push_back(elem(LinkKind::Dir, *d));
            } else {
                break;
            }
        }
        std::set<std::string> seen;
        for (const auto& e : p.elems) {
            if (!seen.insert(e.name).second)
                throw ParseError("pattern variable '" + e.name +
                                     "' is bound twice in one pattern",
                                 e.loc);
        }
        return p;
    }

    PatElem elem(LinkKind link, Direction dir) {
        PatElem e;
        e.link = link;
        e.dir = dir;
        e.loc = peek().loc;
        if (accept(Tok::Star)) {
            expect(Tok::KwAs, "'as'");
            e.kind = ElemKind::Star;
            e.name = binder_name(expect(Tok::Ident, "an identifier"));
            if (peek().kind == Tok::Slash)
                throw ParseError("a star pattern cannot carry a guard",
                                 peek().loc);
            return e;
        }
        e.name = binder_name(expect(Tok::Ident, "a pattern variable"));
        if (accept(Tok::Slash)) {
            e.kind = ElemKind::Guarded;
            e.guard = expr();
        }
        return e;
    }
};

}  // namespace

std::vector<Item> parse_program(std::string_view source) {
    return Parser(source).program();
}

Expr parse_expression(std::string_view source) {
    return Parser(source).expression_only();
}

Pattern parse_pattern(std::string_view source) {
    return Parser(source).pattern_only();
}

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

std::string format_float_literal(double d) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), d);
    std::string s(buf, r.ptr);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos &&
        s.find("nan") == std::string::npos)
        s += ".";
    return s;
}

std::string quote_string_literal(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            default: out += c;
        }
    }
    out += "\"";
    return out;
}

namespace {

// Precedence levels for printing; higher binds tighter.
enum Prec {
    PrecBottom = 0,  // fun, let
    PrecOr = 1,
    PrecAnd = 2,
    PrecCmp = 3,
    PrecCons = 4,
    PrecAdd = 5,
    PrecMul = 6,
    PrecApp = 7,
    PrecAtom = 8,
};

struct InfixInfo {
    int prec;
    bool right_assoc;
};

const std::map<std::string, InfixInfo>& infix_table() {
    static const std::map<std::string, InfixInfo> table = {
        {"||", {PrecOr, false}},  {"&&", {PrecAnd, false}},
        {"=", {PrecCmp, false}},  {"<", {PrecCmp, false}},
        {">", {PrecCmp, false}},  {"::", {PrecCons, true}},
        {"+", {PrecAdd, false}},  {"-", {PrecAdd, false}},
        {"+.", {PrecAdd, false}}, {"-.", {PrecAdd, false}},
        {"*", {PrecMul, false}},  {"/", {PrecMul, false}},
        {"mod", {PrecMul, false}}, {"*.", {PrecMul, false}},
        {"/.", {PrecMul, false}},
    };
    return table;
}

std::string print_lit(const Literal& l) {
    if (auto* i = std::get_if<long long>(&l)) return std::to_string(*i);
    if (auto* d = std::get_if<double>(&l)) return format_float_literal(*d);
    if (auto* b = std::get_if<bool>(&l)) return *b ? "true" : "false";
    return quote_string_literal(std::get<std::string>(l));
}

void print_rec(const Expr& e, int min_prec, std::string& out);

void print_pattern_rec(const Pattern& p, std::string& out) {
    bool first = true;
    for (const auto& el : p.elems) {
        if (!first) {
            if (el.link == LinkKind::Comma)
                out += ", ";
            else
                out += std::string(" |") + direction_name(el.dir) + "> ";
        }
        first = false;
        switch (el.kind) {
            case ElemKind::Plain: out += el.name; break;
            case ElemKind::Guarded:
                out += el.name;
                out += "/(";
                print_rec(el.guard, PrecBottom, out);
                out += ")";
                break;
            case ElemKind::Star:
                out += "* as ";
                out += el.name;
                break;
        }
    }
}

void print_rec(const Expr& e, int min_prec, std::string& out) {
    struct V {
        int min_prec;
        std::string& out;

        void paren_open(int node_prec) {
            if (node_prec < min_prec) out += "(";
        }
        void paren_close(int node_prec) {
            if (node_prec < min_prec) out += ")";
        }

        void operator()(const VarE& v) { out += v.name; }
        void operator()(const LitE& l) { out += print_lit(l.value); }
        void operator()(const PairE& p) {
            out += "(";
            print_rec(p.first, PrecBottom, out);
            out += ", ";
            print_rec(p.second, PrecBottom, out);
            out += ")";
        }
        void operator()(const FunE& f) {
            paren_open(PrecBottom);
            out += "fun " + f.param + " -> ";
            print_rec(f.body, PrecBottom, out);
            paren_close(PrecBottom);
        }
        void operator()(const LetE& l) {
            paren_open(PrecBottom);
            out += "let " + l.name + " = ";
            print_rec(l.bound, PrecBottom, out);
            out += " in ";
            print_rec(l.body, PrecBottom, out);
            paren_close(PrecBottom);
        }
        void operator()(const TransE& t) {
            out += "trans [ ";
            bool first = true;
            for (const auto& r : *t.rules) {
                if (!first) out += " ; ";
                first = false;
                print_pattern_rec(r.pattern, out);
                out += " => ";
                print_rec(r.body, PrecBottom, out);
            }
            out += " ]";
        }
        void operator()(const AppE& a) {
            // Binary applications of infix constants print infix.
            if (auto* inner = std::get_if<AppE>(&a.fn->v)) {
                if (auto* op = std::get_if<VarE>(&inner->fn->v)) {
                    auto it = infix_table().find(op->name);
                    if (it != infix_table().end()) {
                        const auto& info = it->second;
                        paren_open(info.prec);
                        int lmin = info.right_assoc ? info.prec + 1 : info.prec;
                        int rmin = info.right_assoc ? info.prec : info.prec + 1;
                        print_rec(inner->arg, lmin, out);
                        out += " " + op->name + " ";
                        print_rec(a.arg, rmin, out);
                        paren_close(info.prec);
                        return;
                    }
                }
            }
            paren_open(PrecApp);
            print_rec(a.fn, PrecApp, out);
            out += " ";
            print_rec(a.arg, PrecAtom, out);
            paren_close(PrecApp);
        }
    };
    std::visit(V{min_prec, out}, e->v);
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    print_rec(e, PrecBottom, out);
    return out;
}

std::string print_pattern(const Pattern& p) {
    std::string out;
    print_pattern_rec(p, out);
    return out;
}

}  // namespace tml
