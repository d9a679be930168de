#include "tml/unify.hpp"

namespace tml {

namespace {

bool occurs(int id, const Type& t) {
    struct V {
        int id;
        bool operator()(BaseType) const { return false; }
        bool operator()(const TVarT& x) const { return x.id == id; }
        bool operator()(const ArrowT& x) const {
            return occurs(id, x.from) || occurs(id, x.to);
        }
        bool operator()(const ProductT& x) const {
            return occurs(id, x.first) || occurs(id, x.second);
        }
        bool operator()(const CollT& x) const { return occurs(id, x.content); }
    };
    return std::visit(V{id}, t->v);
}

Substitution bind_var(int id, const Type& t) {
    if (auto* v = std::get_if<TVarT>(&t->v); v && v->id == id)
        return Substitution();
    if (occurs(id, t)) {
        auto [sa, sb] = print_type_pair(t_var(id), t);
        throw OccursCheckError("occurs check: " + sa + " occurs in " + sb);
    }
    return Substitution::single_t(id, t);
}

}  // namespace

Substitution mgu_topo(const Topology& lhs, const Topology& rhs) {
    if (lhs == rhs) return Substitution();
    if (lhs.is_var) return Substitution::single_r(lhs.id, rhs);
    if (rhs.is_var) return Substitution::single_r(rhs.id, lhs);
    throw TopoMismatch(std::string("cannot unify topology '") +
                       base_topo_name(lhs.base) + "' with '" +
                       base_topo_name(rhs.base) + "'");
}

Substitution mgu(std::vector<Constraint> constraints) {
    Substitution phi;
    while (!constraints.empty()) {
        Constraint c = std::move(constraints.back());
        constraints.pop_back();
        Type l = phi(c.lhs);
        Type r = phi(c.rhs);

        if (auto* lv = std::get_if<TVarT>(&l->v)) {
            phi = Substitution::compose(bind_var(lv->id, r), phi);
            continue;
        }
        if (auto* rv = std::get_if<TVarT>(&r->v)) {
            phi = Substitution::compose(bind_var(rv->id, l), phi);
            continue;
        }
        if (l->v.index() != r->v.index()) {
            auto [sa, sb] = print_type_pair(l, r);
            throw UnifyMismatch("cannot unify " + sa + " with " + sb);
        }
        if (auto* lb = std::get_if<BaseType>(&l->v)) {
            if (*lb != std::get<BaseType>(r->v)) {
                auto [sa, sb] = print_type_pair(l, r);
                throw UnifyMismatch("cannot unify " + sa + " with " + sb);
            }
            continue;
        }
        if (auto* la = std::get_if<ArrowT>(&l->v)) {
            const auto& ra = std::get<ArrowT>(r->v);
            constraints.push_back({la->from, ra.from});
            constraints.push_back({la->to, ra.to});
            continue;
        }
        if (auto* lp = std::get_if<ProductT>(&l->v)) {
            const auto& rp = std::get<ProductT>(r->v);
            constraints.push_back({lp->first, rp.first});
            constraints.push_back({lp->second, rp.second});
            continue;
        }
        // Collections: unify the topologies first, then the content types.
        const auto& lc = std::get<CollT>(l->v);
        const auto& rc = std::get<CollT>(r->v);
        phi = Substitution::compose(mgu_topo(lc.topo, rc.topo), phi);
        constraints.push_back({lc.content, rc.content});
    }
    return phi;
}

Substitution mgu(const Type& lhs, const Type& rhs) {
    return mgu({Constraint{lhs, rhs}});
}

}  // namespace tml
