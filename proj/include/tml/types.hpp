#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "tml/errors.hpp"

namespace tml {

enum class BaseType { Int, Float, Bool, String };
enum class BaseTopo { Bag, Set, Seq, Grid };

const char* base_type_name(BaseType b);
const char* base_topo_name(BaseTopo b);

// A topology is either a base topology or a topology variable. Topology
// variables live in a namespace separate from type variables.
struct Topology {
    bool is_var = false;
    int id = 0;
    BaseTopo base = BaseTopo::Seq;

    static Topology var(int id) { return Topology{true, id, BaseTopo::Seq}; }
    static Topology make(BaseTopo b) { return Topology{false, 0, b}; }

    bool operator==(const Topology& o) const {
        return is_var == o.is_var &&
               (is_var ? id == o.id : base == o.base);
    }
};

struct TypeNode;
using Type = std::shared_ptr<const TypeNode>;

struct TVarT {
    int id;
};
struct ArrowT {
    Type from, to;
};
struct ProductT {
    Type first, second;
};
struct CollT {
    Type content;
    Topology topo;
};

struct TypeNode {
    std::variant<BaseType, TVarT, ArrowT, ProductT, CollT> v;
};

Type t_base(BaseType b);
Type t_int();
Type t_float();
Type t_bool();
Type t_string();
Type t_var(int id);
Type t_arrow(Type from, Type to);
Type t_product(Type first, Type second);
Type t_coll(Type content, Topology topo);

bool type_equal(const Type& a, const Type& b);

// A type quantified over some type variables and some topology variables.
// Quantifier lists are kept sorted and restricted to ids occurring in body.
struct TypeScheme {
    std::vector<int> tvars;
    std::vector<int> rvars;
    Type body;
};

TypeScheme scheme_of(Type body);  // no quantified variables
TypeScheme make_scheme(std::vector<int> tvars, std::vector<int> rvars,
                       Type body);

// Simultaneous mapping from type variables to types and from topology
// variables to topologies. Kept idempotent under composition.
class Substitution {
public:
    Substitution() = default;

    static Substitution single_t(int id, Type t);
    static Substitution single_r(int id, Topology r);

    bool empty() const { return tmap_.empty() && rmap_.empty(); }

    Type operator()(const Type& t) const;
    Topology operator()(const Topology& r) const;
    TypeScheme operator()(const TypeScheme& s) const;

    // compose(after, before)(t) == after(before(t))
    static Substitution compose(const Substitution& after,
                                const Substitution& before);

    const std::map<int, Type>& tmap() const { return tmap_; }
    const std::map<int, Topology>& rmap() const { return rmap_; }

    void bind_t(int id, Type t) { tmap_[id] = std::move(t); }
    void bind_r(int id, Topology r) { rmap_[id] = r; }

private:
    std::map<int, Type> tmap_;
    std::map<int, Topology> rmap_;
};

class TypeEnv {
public:
    TypeEnv() = default;

    TypeEnv bind(const std::string& name, TypeScheme s) const;
    const TypeScheme* lookup(const std::string& name) const;
    const std::map<std::string, TypeScheme>& entries() const { return map_; }

private:
    std::map<std::string, TypeScheme> map_;
};

TypeEnv apply_subst(const Substitution& s, const TypeEnv& env);

std::set<int> free_type_vars(const Type& t);
std::set<int> free_type_vars(const TypeScheme& s);
std::set<int> free_type_vars(const TypeEnv& env);
std::set<int> free_topo_vars(const Type& t);
std::set<int> free_topo_vars(const TypeScheme& s);
std::set<int> free_topo_vars(const TypeEnv& env);

// Quantifies the variables free in t but not free in env.
TypeScheme generalize(const Type& t, const TypeEnv& env);

// Fresh-variable supply for one inference run.
struct FreshSupply {
    int next_tvar = 0;
    int next_rvar = 0;
    int fresh_tvar() { return next_tvar++; }
    int fresh_rvar() { return next_rvar++; }
};

// Replaces every quantified variable of s with a fresh one of its sort.
Type instantiate(const TypeScheme& s, FreshSupply& supply);

// Renames variables to 0,1,2,... by first occurrence (each sort
// independently); two types are alpha-equivalent iff their canonical
// forms are equal.
Type canonical_form(const Type& t);
bool alpha_equal(const Type& a, const Type& b);

// Pretty printing; variable names are assigned by first occurrence:
// type variables 'a,'b,..., topology variables !t,!u,...
std::string print_type(const Type& t);
// Prints a and b with one shared naming, for error messages.
std::pair<std::string, std::string> print_type_pair(const Type& a,
                                                    const Type& b);
std::string print_topology(const Topology& r);

}  // namespace tml
