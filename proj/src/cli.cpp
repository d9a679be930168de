#include "tml/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace tml {

Session::Session(const CliOptions& opts)
    : ctx_(opts.strategy, opts.max_steps) {}

Session::Result Session::process(const Item& item, bool evaluate) {
    check_positional_restrictions(item.expr);
    Type t = infer_type(tenv_, item.expr, supply_);
    Result res;
    res.name = item.name.value_or("-");
    res.type = t;
    if (evaluate) res.value = eval(ctx_, renv_, item.expr);
    if (item.name) {
        tenv_ = tenv_.bind(*item.name, generalize(t, tenv_));
        if (res.value) renv_ = renv_.bind(*item.name, *res.value);
    }
    return res;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void report(std::ostream& err, const char* kind, const Error& e) {
    err << kind;
    if (e.loc().known()) err << " at " << e.loc().str();
    err << ": " << e.what() << "\n";
}

}  // namespace

int cmd_run(const std::string& path, const CliOptions& opts, std::ostream& out,
            std::ostream& err) {
    try {
        std::vector<Item> items = parse_program(read_file(path));
        Session session(opts);
        for (const Item& item : items) {
            Session::Result r = session.process(item, /*evaluate=*/true);
            if (!item.name)
                out << "- : " << print_type(r.type) << " = "
                    << print_value(*r.value) << "\n";
        }
        return 0;
    } catch (const ParseError& e) {
        report(err, "syntax error", e);
        return 1;
    } catch (const TypeError& e) {
        report(err, "type error", e);
        return 1;
    } catch (const EvalError& e) {
        report(err, "runtime error", e);
        return 2;
    } catch (const Error& e) {
        report(err, "error", e);
        return 1;
    }
}

int cmd_type(const std::string& path, std::ostream& out, std::ostream& err) {
    try {
        std::vector<Item> items = parse_program(read_file(path));
        CliOptions opts;
        Session session(opts);
        for (const Item& item : items) {
            Session::Result r = session.process(item, /*evaluate=*/false);
            out << r.name << " : " << print_type(r.type) << "\n";
        }
        return 0;
    } catch (const ParseError& e) {
        report(err, "syntax error", e);
        return 1;
    } catch (const TypeError& e) {
        report(err, "type error", e);
        return 1;
    } catch (const Error& e) {
        report(err, "error", e);
        return 1;
    }
}

namespace {

constexpr const char* kPrompt = "tml> ";

// Reads one `;;`-terminated input (possibly spanning lines), or a single
// `:command` line. Returns false at end of input.
bool read_input(std::istream& in, std::ostream& out, std::string& text) {
    text.clear();
    std::string line;
    out << kPrompt << std::flush;
    while (std::getline(in, line)) {
        if (text.empty()) {
            std::string trimmed = line;
            trimmed.erase(0, trimmed.find_first_not_of(" \t"));
            if (!trimmed.empty() && trimmed[0] == ':' &&
                trimmed.find(";;") == std::string::npos) {
                text = trimmed;
                return true;
            }
        }
        text += line;
        text += "\n";
        if (text.find(";;") != std::string::npos) return true;
        out << "  ... " << std::flush;
    }
    return !text.empty();
}

struct ReplDriver {
    Session session;
    std::ostream& out;
    std::ostream& err;

    void show(const Session::Result& r) {
        if (r.name == "-")
            out << "- : " << print_type(r.type) << " = "
                << print_value(*r.value) << "\n";
        else
            out << r.name << " : " << print_type(r.type) << " = "
                << print_value(*r.value) << "\n";
    }

    void run_items(const std::string& source) {
        for (const Item& item : parse_program(source))
            show(session.process(item, /*evaluate=*/true));
    }

    void type_of(const std::string& source) {
        Expr e = parse_expression(source);
        Item item{std::nullopt, e, e->loc};
        Session::Result r = session.process(item, /*evaluate=*/false);
        out << print_type(r.type) << "\n";
    }

    // Returns false on :quit.
    bool handle(const std::string& text) {
        std::string s = text;
        s.erase(0, s.find_first_not_of(" \t\n"));
        if (s.empty()) return true;
        if (s[0] == ':') {
            if (s.rfind(":quit", 0) == 0 || s.rfind(":q", 0) == 0)
                return false;
            if (s.rfind(":load", 0) == 0) {
                std::string path = s.substr(5);
                path.erase(0, path.find_first_not_of(" \t"));
                path.erase(path.find_last_not_of(" \t\n") + 1);
                run_items(read_file(path));
                return true;
            }
            if (s.rfind(":t", 0) == 0) {
                std::string body = s.substr(2);
                auto end = body.find(";;");
                if (end != std::string::npos) body = body.substr(0, end);
                type_of(body);
                return true;
            }
            err << "unknown command (try :t <expr>;;, :load <file>, :quit)\n";
            return true;
        }
        run_items(s);
        return true;
    }
};

}  // namespace

int repl(std::istream& in, std::ostream& out, std::ostream& err,
         const CliOptions& opts) {
    ReplDriver driver{Session(opts), out, err};
    std::string text;
    while (read_input(in, out, text)) {
        try {
            if (!driver.handle(text)) break;
        } catch (const ParseError& e) {
            report(err, "syntax error", e);
        } catch (const TypeError& e) {
            report(err, "type error", e);
        } catch (const EvalError& e) {
            report(err, "runtime error", e);
        } catch (const Error& e) {
            report(err, "error", e);
        }
    }
    out << "\n";
    return 0;
}

}  // namespace tml
