#pragma once

#include "tml/syntax.hpp"
#include "tml/types.hpp"

namespace tml {

// Type schemes of the builtin constants.
class ConstantTable {
public:
    static const ConstantTable& instance();
    const TypeScheme* lookup(const std::string& name) const;
    const std::map<std::string, TypeScheme>& entries() const { return map_; }

private:
    ConstantTable();
    std::map<std::string, TypeScheme> map_;
};

const TypeScheme& tc_lookup(const std::string& name);  // throws UnknownConstant

struct InferState {
    Substitution subst;
    FreshSupply supply;
};

// Algorithm W. Returns the (not yet substitution-applied) type of e;
// apply state.subst to get the final type.
Type infer_w(const TypeEnv& env, const Expr& e, InferState& state);

// Convenience: runs W and applies the final substitution.
Type infer_type(const TypeEnv& env, const Expr& e, FreshSupply& supply);
Type infer_type(const TypeEnv& env, const Expr& e);

// Verification oracle: true iff `claimed` is an instance of the
// generalization of the inferred type of e.
bool check_type(const TypeEnv& env, const Expr& e, const Type& claimed);

// True iff `claimed` can be obtained by substituting the quantified
// variables of s (free variables must match exactly).
bool scheme_admits(const TypeScheme& s, const Type& claimed);

// Neighborhood operators (left, is_left, north, ...) may only be applied,
// inside a transformation, to a pattern variable and a collection. This
// is a syntactic restriction checked after parsing, not a typing rule.
void check_positional_restrictions(const Expr& e);
bool is_positional_op(const std::string& name);

}  // namespace tml
