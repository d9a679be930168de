#include "tml/types.hpp"

#include <algorithm>

namespace tml {

const char* base_type_name(BaseType b) {
    switch (b) {
        case BaseType::Int: return "int";
        case BaseType::Float: return "float";
        case BaseType::Bool: return "bool";
        case BaseType::String: return "string";
    }
    return "?";
}

const char* base_topo_name(BaseTopo b) {
    switch (b) {
        case BaseTopo::Bag: return "bag";
        case BaseTopo::Set: return "set";
        case BaseTopo::Seq: return "seq";
        case BaseTopo::Grid: return "grid";
    }
    return "?";
}

Type t_base(BaseType b) { return std::make_shared<TypeNode>(TypeNode{b}); }
Type t_int() { return t_base(BaseType::Int); }
Type t_float() { return t_base(BaseType::Float); }
Type t_bool() { return t_base(BaseType::Bool); }
Type t_string() { return t_base(BaseType::String); }
Type t_var(int id) { return std::make_shared<TypeNode>(TypeNode{TVarT{id}}); }
Type t_arrow(Type from, Type to) {
    return std::make_shared<TypeNode>(
        TypeNode{ArrowT{std::move(from), std::move(to)}});
}
Type t_product(Type first, Type second) {
    return std::make_shared<TypeNode>(
        TypeNode{ProductT{std::move(first), std::move(second)}});
}
Type t_coll(Type content, Topology topo) {
    return std::make_shared<TypeNode>(TypeNode{CollT{std::move(content), topo}});
}

bool type_equal(const Type& a, const Type& b) {
    if (a.get() == b.get()) return true;
    if (a->v.index() != b->v.index()) return false;
    struct V {
        const TypeNode& other;
        bool operator()(BaseType x) const {
            return x == std::get<BaseType>(other.v);
        }
        bool operator()(const TVarT& x) const {
            return x.id == std::get<TVarT>(other.v).id;
        }
        bool operator()(const ArrowT& x) const {
            const auto& o = std::get<ArrowT>(other.v);
            return type_equal(x.from, o.from) && type_equal(x.to, o.to);
        }
        bool operator()(const ProductT& x) const {
            const auto& o = std::get<ProductT>(other.v);
            return type_equal(x.first, o.first) &&
                   type_equal(x.second, o.second);
        }
        bool operator()(const CollT& x) const {
            const auto& o = std::get<CollT>(other.v);
            return x.topo == o.topo && type_equal(x.content, o.content);
        }
    };
    return std::visit(V{*b}, a->v);
}

TypeScheme scheme_of(Type body) { return TypeScheme{{}, {}, std::move(body)}; }

TypeScheme make_scheme(std::vector<int> tvars, std::vector<int> rvars,
                       Type body) {
    // Normalize: drop quantifiers that do not occur in the body.
    auto ft = free_type_vars(body);
    auto fr = free_topo_vars(body);
    TypeScheme s;
    for (int id : tvars)
        if (ft.count(id)) s.tvars.push_back(id);
    for (int id : rvars)
        if (fr.count(id)) s.rvars.push_back(id);
    std::sort(s.tvars.begin(), s.tvars.end());
    s.tvars.erase(std::unique(s.tvars.begin(), s.tvars.end()), s.tvars.end());
    std::sort(s.rvars.begin(), s.rvars.end());
    s.rvars.erase(std::unique(s.rvars.begin(), s.rvars.end()), s.rvars.end());
    s.body = std::move(body);
    return s;
}

// ---------------------------------------------------------------------------
// Substitution
// ---------------------------------------------------------------------------

Substitution Substitution::single_t(int id, Type t) {
    Substitution s;
    s.tmap_[id] = std::move(t);
    return s;
}

Substitution Substitution::single_r(int id, Topology r) {
    Substitution s;
    s.rmap_[id] = r;
    return s;
}

Topology Substitution::operator()(const Topology& r) const {
    if (r.is_var) {
        auto it = rmap_.find(r.id);
        if (it != rmap_.end()) return it->second;
    }
    return r;
}

Type Substitution::operator()(const Type& t) const {
    if (empty()) return t;
    struct V {
        const Substitution& s;
        const Type& self;
        Type operator()(BaseType) const { return self; }
        Type operator()(const TVarT& x) const {
            auto it = s.tmap_.find(x.id);
            return it != s.tmap_.end() ? it->second : self;
        }
        Type operator()(const ArrowT& x) const {
            return t_arrow(s(x.from), s(x.to));
        }
        Type operator()(const ProductT& x) const {
            return t_product(s(x.first), s(x.second));
        }
        Type operator()(const CollT& x) const {
            return t_coll(s(x.content), s(x.topo));
        }
    };
    return std::visit(V{*this, t}, t->v);
}

TypeScheme Substitution::operator()(const TypeScheme& s) const {
    // Quantified variables are untouchable; drop them from the mapping.
    Substitution trimmed = *this;
    for (int id : s.tvars) trimmed.tmap_.erase(id);
    for (int id : s.rvars) trimmed.rmap_.erase(id);
    TypeScheme out = s;
    out.body = trimmed(s.body);
    return out;
}

Substitution Substitution::compose(const Substitution& after,
                                   const Substitution& before) {
    Substitution out;
    for (const auto& [id, t] : before.tmap_) out.tmap_[id] = after(t);
    for (const auto& [id, r] : before.rmap_) out.rmap_[id] = after(r);
    for (const auto& [id, t] : after.tmap_)
        if (!out.tmap_.count(id)) out.tmap_[id] = t;
    for (const auto& [id, r] : after.rmap_)
        if (!out.rmap_.count(id)) out.rmap_[id] = r;
    // Drop identity bindings picked up along the way.
    for (auto it = out.tmap_.begin(); it != out.tmap_.end();) {
        auto* var = std::get_if<TVarT>(&it->second->v);
        it = (var && var->id == it->first) ? out.tmap_.erase(it)
                                           : std::next(it);
    }
    for (auto it = out.rmap_.begin(); it != out.rmap_.end();) {
        it = (it->second.is_var && it->second.id == it->first)
                 ? out.rmap_.erase(it)
                 : std::next(it);
    }
    return out;
}

TypeEnv TypeEnv::bind(const std::string& name, TypeScheme s) const {
    TypeEnv out = *this;
    out.map_[name] = std::move(s);
    return out;
}

const TypeScheme* TypeEnv::lookup(const std::string& name) const {
    auto it = map_.find(name);
    return it != map_.end() ? &it->second : nullptr;
}

TypeEnv apply_subst(const Substitution& s, const TypeEnv& env) {
    TypeEnv out;
    for (const auto& [name, scheme] : env.entries())
        out = out.bind(name, s(scheme));
    return out;
}

// ---------------------------------------------------------------------------
// Free variables
// ---------------------------------------------------------------------------

namespace {

void collect_tvars(const Type& t, std::set<int>& out) {
    struct V {
        std::set<int>& out;
        void operator()(BaseType) const {}
        void operator()(const TVarT& x) const { out.insert(x.id); }
        void operator()(const ArrowT& x) const {
            collect_tvars(x.from, out);
            collect_tvars(x.to, out);
        }
        void operator()(const ProductT& x) const {
            collect_tvars(x.first, out);
            collect_tvars(x.second, out);
        }
        void operator()(const CollT& x) const { collect_tvars(x.content, out); }
    };
    std::visit(V{out}, t->v);
}

void collect_rvars(const Type& t, std::set<int>& out) {
    struct V {
        std::set<int>& out;
        void operator()(BaseType) const {}
        void operator()(const TVarT&) const {}
        void operator()(const ArrowT& x) const {
            collect_rvars(x.from, out);
            collect_rvars(x.to, out);
        }
        void operator()(const ProductT& x) const {
            collect_rvars(x.first, out);
            collect_rvars(x.second, out);
        }
        void operator()(const CollT& x) const {
            if (x.topo.is_var) out.insert(x.topo.id);
            collect_rvars(x.content, out);
        }
    };
    std::visit(V{out}, t->v);
}

}  // namespace

std::set<int> free_type_vars(const Type& t) {
    std::set<int> out;
    collect_tvars(t, out);
    return out;
}

std::set<int> free_type_vars(const TypeScheme& s) {
    std::set<int> out = free_type_vars(s.body);
    for (int id : s.tvars) out.erase(id);
    return out;
}

std::set<int> free_type_vars(const TypeEnv& env) {
    std::set<int> out;
    for (const auto& [name, scheme] : env.entries()) {
        auto f = free_type_vars(scheme);
        out.insert(f.begin(), f.end());
    }
    return out;
}

std::set<int> free_topo_vars(const Type& t) {
    std::set<int> out;
    collect_rvars(t, out);
    return out;
}

std::set<int> free_topo_vars(const TypeScheme& s) {
    std::set<int> out = free_topo_vars(s.body);
    for (int id : s.rvars) out.erase(id);
    return out;
}

std::set<int> free_topo_vars(const TypeEnv& env) {
    std::set<int> out;
    for (const auto& [name, scheme] : env.entries()) {
        auto f = free_topo_vars(scheme);
        out.insert(f.begin(), f.end());
    }
    return out;
}

TypeScheme generalize(const Type& t, const TypeEnv& env) {
    std::set<int> tq = free_type_vars(t);
    std::set<int> rq = free_topo_vars(t);
    for (int id : free_type_vars(env)) tq.erase(id);
    for (int id : free_topo_vars(env)) rq.erase(id);
    return make_scheme(std::vector<int>(tq.begin(), tq.end()),
                       std::vector<int>(rq.begin(), rq.end()), t);
}

Type instantiate(const TypeScheme& s, FreshSupply& supply) {
    Substitution sub;
    for (int id : s.tvars) sub.bind_t(id, t_var(supply.fresh_tvar()));
    for (int id : s.rvars) sub.bind_r(id, Topology::var(supply.fresh_rvar()));
    return sub(s.body);
}

// ---------------------------------------------------------------------------
// Canonical renaming and printing
// ---------------------------------------------------------------------------

namespace {

struct Renaming {
    std::map<int, int> tmap, rmap;

    void visit(const Type& t) {
        struct V {
            Renaming& r;
            void operator()(BaseType) const {}
            void operator()(const TVarT& x) const {
                r.tmap.emplace(x.id, static_cast<int>(r.tmap.size()));
            }
            void operator()(const ArrowT& x) const {
                r.visit(x.from);
                r.visit(x.to);
            }
            void operator()(const ProductT& x) const {
                r.visit(x.first);
                r.visit(x.second);
            }
            void operator()(const CollT& x) const {
                if (x.topo.is_var)
                    r.rmap.emplace(x.topo.id,
                                   static_cast<int>(r.rmap.size()));
                r.visit(x.content);
            }
        };
        std::visit(V{*this}, t->v);
    }

    Type rebuild(const Type& t) const {
        struct V {
            const Renaming& r;
            const Type& self;
            Type operator()(BaseType) const { return self; }
            Type operator()(const TVarT& x) const {
                return t_var(r.tmap.at(x.id));
            }
            Type operator()(const ArrowT& x) const {
                return t_arrow(r.rebuild(x.from), r.rebuild(x.to));
            }
            Type operator()(const ProductT& x) const {
                return t_product(r.rebuild(x.first), r.rebuild(x.second));
            }
            Type operator()(const CollT& x) const {
                Topology topo = x.topo;
                if (topo.is_var) topo = Topology::var(r.rmap.at(topo.id));
                return t_coll(r.rebuild(x.content), topo);
            }
        };
        return std::visit(V{*this, t}, t->v);
    }
};

std::string tvar_name(int index) {
    std::string s = "'";
    s += static_cast<char>('a' + index % 26);
    if (index >= 26) s += std::to_string(index / 26);
    return s;
}

std::string rvar_name(int index) {
    static const char letters[] = "tuvwxyz";
    std::string s = "!";
    s += letters[index % 7];
    if (index >= 7) s += std::to_string(index / 7);
    return s;
}

// Higher binds tighter: arrow < product < atom.
enum TPrec { TPArrow = 1, TPProduct = 2, TPAtom = 3 };

void print_type_rec(const Type& t, const Renaming& names, int min_prec,
                    std::string& out) {
    struct V {
        const Renaming& names;
        int min_prec;
        std::string& out;
        void operator()(BaseType b) const { out += base_type_name(b); }
        void operator()(const TVarT& x) const {
            out += tvar_name(names.tmap.at(x.id));
        }
        void operator()(const ArrowT& x) const {
            if (TPArrow < min_prec) out += "(";
            print_type_rec(x.from, names, TPProduct, out);
            out += " -> ";
            print_type_rec(x.to, names, TPArrow, out);
            if (TPArrow < min_prec) out += ")";
        }
        void operator()(const ProductT& x) const {
            if (TPProduct < min_prec) out += "(";
            print_type_rec(x.first, names, TPAtom, out);
            out += " * ";
            print_type_rec(x.second, names, TPAtom, out);
            if (TPProduct < min_prec) out += ")";
        }
        void operator()(const CollT& x) const {
            out += "[";
            print_type_rec(x.content, names, TPArrow, out);
            out += "]";
            if (x.topo.is_var)
                out += rvar_name(names.rmap.at(x.topo.id));
            else
                out += base_topo_name(x.topo.base);
        }
    };
    std::visit(V{names, min_prec, out}, t->v);
}

}  // namespace

Type canonical_form(const Type& t) {
    Renaming r;
    r.visit(t);
    return r.rebuild(t);
}

bool alpha_equal(const Type& a, const Type& b) {
    return type_equal(canonical_form(a), canonical_form(b));
}

std::string print_type(const Type& t) {
    Renaming r;
    r.visit(t);
    std::string out;
    print_type_rec(t, r, TPArrow, out);
    return out;
}

std::pair<std::string, std::string> print_type_pair(const Type& a,
                                                    const Type& b) {
    Renaming r;
    r.visit(a);
    r.visit(b);
    std::string sa, sb;
    print_type_rec(a, r, TPArrow, sa);
    print_type_rec(b, r, TPArrow, sb);
    return {sa, sb};
}

std::string print_topology(const Topology& r) {
    if (r.is_var) return rvar_name(0);
    return base_topo_name(r.base);
}

}  // namespace tml
