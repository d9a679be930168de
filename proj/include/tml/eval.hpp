#pragma once

#include <random>

#include "tml/collections.hpp"
#include "tml/transform.hpp"

namespace tml {

// Per-run evaluation context. Under the random strategy every
// transformation pass draws its own sub-seed from a master generator, so
// one --seed makes a whole run reproducible while successive passes
// shuffle differently.
struct EvalContext {
    Strategy strategy = Strategy::priority();
    long long max_fixpoint_steps = 100000;

    explicit EvalContext(Strategy s = Strategy::priority(),
                         long long max_steps = 100000)
        : strategy(s), max_fixpoint_steps(max_steps), seeder_(s.seed) {}

    Strategy pass_strategy() {
        if (strategy.kind == Strategy::Kind::Priority) return strategy;
        return Strategy::random(seeder_());
    }

private:
    std::mt19937_64 seeder_;
};

// Call-by-value, left-to-right evaluation.
Value eval(EvalContext& ctx, const Env& env, const Expr& e);

// Applies any function value (closure, transformation, builtin).
Value apply_value(EvalContext& ctx, const Value& fn, const Value& arg);

// Value of a builtin constant (empty collections evaluate directly;
// function constants evaluate to partially applicable builtins).
std::optional<Value> builtin_constant(const std::string& name);

}  // namespace tml
