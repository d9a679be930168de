#pragma once

#include <iosfwd>
#include <string>

#include "tml/eval.hpp"
#include "tml/infer.hpp"

namespace tml {

struct CliOptions {
    Strategy strategy = Strategy::priority();
    long long max_steps = 100000;
    bool type_only = false;
};

// Exit codes: 0 success, 1 parse/type error, 2 runtime error.
int cmd_run(const std::string& path, const CliOptions& opts, std::ostream& out,
            std::ostream& err);
int cmd_type(const std::string& path, std::ostream& out, std::ostream& err);
int repl(std::istream& in, std::ostream& out, std::ostream& err,
         const CliOptions& opts);

// Accumulated typing + runtime state across the items of a program or a
// REPL session. The two environments always bind the same identifiers.
class Session {
public:
    explicit Session(const CliOptions& opts);

    struct Result {
        std::string name;  // "-" for bare expressions
        Type type;
        std::optional<Value> value;  // absent when not evaluated
    };

    // Type-checks one item and, when evaluate is set, runs it; let items
    // extend the session environments.
    Result process(const Item& item, bool evaluate);

private:
    TypeEnv tenv_;
    Env renv_;
    FreshSupply supply_;
    EvalContext ctx_;
};

}  // namespace tml
