#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "fockcat/evolution.hpp"
#include "fockcat/expr.hpp"
#include "fockcat/json_io.hpp"
#include "fockcat/parser.hpp"
#include "fockcat/species.hpp"
#include "fockcat/stuff_type.hpp"
#include "fockcat/weyl.hpp"

namespace fockcat {

/// Result of evaluating a type-level expression: a species while the value
/// stays integral-counted, promoted to a stuff type once phases or
/// conjugation enter.
class TypeValue {
public:
    TypeValue(Species s) : value_(std::move(s)) {}
    TypeValue(StuffType t) : value_(std::move(t)) {}

    bool is_species() const { return std::holds_alternative<Species>(value_); }
    const Species& species() const { return std::get<Species>(value_); }
    const StuffType& stuff() const { return std::get<StuffType>(value_); }

    StuffType to_stuff() const {
        if (is_species()) return StuffType::from_species(species());
        return stuff();
    }

private:
    std::variant<Species, StuffType> value_;
};

struct EvalContext {
    std::size_t order = 16;
    std::map<std::string, Species> bindings;
};

inline TypeValue eval_type(const ExprPtr& e, const EvalContext& ctx);

namespace detail {

inline TypeValue eval_binary_type(const BinaryExpr& b, const EvalContext& ctx) {
    if (b.kind == BinaryKind::Pow) {
        const auto* nat = std::get_if<NatExpr>(&b.rhs->node);
        if (!nat) throw Error(ErrorCode::Parse, "power exponent must be a natural literal");
        std::uint64_t e = nat->value.to_u64();
        TypeValue base = eval_type(b.lhs, ctx);
        if (base.is_species()) return Species::pow(base.species(), e, ctx.order);
        return StuffType::pow(base.stuff(), e, ctx.order);
    }
    TypeValue lhs = eval_type(b.lhs, ctx);
    TypeValue rhs = eval_type(b.rhs, ctx);
    if (lhs.is_species() && rhs.is_species()) {
        switch (b.kind) {
            case BinaryKind::Add: return lhs.species() + rhs.species();
            case BinaryKind::Mul: return lhs.species() * rhs.species();
            case BinaryKind::Compose: return species_compose(lhs.species(), rhs.species());
            case BinaryKind::Pow: break;
        }
    }
    StuffType l = lhs.to_stuff(), r = rhs.to_stuff();
    switch (b.kind) {
        case BinaryKind::Add: return l + r;
        case BinaryKind::Mul: return l * r;
        case BinaryKind::Compose: return compose(l, r);
        case BinaryKind::Pow: break;
    }
    throw Error(ErrorCode::Parse, "unreachable binary kind");
}

}  // namespace detail

inline TypeValue eval_type(const ExprPtr& e, const EvalContext& ctx) {
    struct Visitor {
        const EvalContext& ctx;
        TypeValue operator()(const AtomExpr& a) const {
            switch (a.atom) {
                case TypeAtom::Z: return Species::singleton(ctx.order);
                case TypeAtom::E: return Species::set(ctx.order);
                case TypeAtom::Eplus: return Species::nonempty_set(ctx.order);
                case TypeAtom::O: return Species::orderings(ctx.order);
            }
            throw Error(ErrorCode::Parse, "unreachable atom");
        }
        TypeValue operator()(const EnExpr& a) const {
            return Species::being_n_set(a.n, ctx.order);
        }
        TypeValue operator()(const NatExpr& a) const {
            return Species::one(ctx.order).scaled(a.value);
        }
        TypeValue operator()(const VarExpr& a) const {
            auto it = ctx.bindings.find(a.name);
            if (it == ctx.bindings.end())
                throw Error(ErrorCode::Parse, "unknown identifier '" + a.name + "'");
            return it->second;
        }
        TypeValue operator()(const OpAtomExpr&) const {
            throw Error(ErrorCode::Parse,
                        "operator atoms A/ASTAR/PHI/N only appear in expect() queries");
        }
        TypeValue operator()(const UnaryExpr& u) const {
            TypeValue child = eval_type(u.child, ctx);
            switch (u.kind) {
                case UnaryKind::Derivative:
                    return child.is_species() ? TypeValue(child.species().derivative())
                                              : TypeValue(child.stuff().annihilated());
                case UnaryKind::Shift:
                    return child.is_species() ? TypeValue(child.species().shifted())
                                              : TypeValue(child.stuff().created());
                case UnaryKind::Conjugate: return child.to_stuff().conjugated();
            }
            throw Error(ErrorCode::Parse, "unreachable unary kind");
        }
        TypeValue operator()(const PhaseExpr& p) const {
            return eval_type(p.child, ctx).to_stuff().phase_scaled(Angle::turns(p.turns));
        }
        TypeValue operator()(const BinaryExpr& b) const { return detail::eval_binary_type(b, ctx); }
    };
    return std::visit(Visitor{ctx}, e->node);
}

inline WeylElement eval_weyl(const ExprPtr& e);

namespace detail {
struct WeylVisitor {
    WeylElement operator()(const OpAtomExpr& a) const {
        switch (a.atom) {
            case OpAtom::A: return WeylElement::annihilator();
            case OpAtom::AStar: return WeylElement::creator();
            case OpAtom::Phi: return WeylElement::field();
            case OpAtom::N: return WeylElement::number();
        }
        throw Error(ErrorCode::Parse, "unreachable operator atom");
    }
    WeylElement operator()(const NatExpr& a) const {
        return WeylElement::identity(CScalar(Rational::from_natural(a.value)));
    }
    WeylElement operator()(const BinaryExpr& b) const {
        if (b.kind == BinaryKind::Pow) {
            const auto* nat = std::get_if<NatExpr>(&b.rhs->node);
            if (!nat) throw Error(ErrorCode::Parse, "power exponent must be a natural literal");
            return WeylElement::pow(eval_weyl(b.lhs), nat->value.to_u64());
        }
        WeylElement lhs = eval_weyl(b.lhs), rhs = eval_weyl(b.rhs);
        switch (b.kind) {
            case BinaryKind::Add: return lhs + rhs;
            case BinaryKind::Mul: return lhs * rhs;
            default: throw Error(ErrorCode::Input, "composition is not defined on operators here");
        }
    }
    template <class T>
    WeylElement operator()(const T&) const {
        throw Error(ErrorCode::Input,
                    "expect() takes an operator expression over A, ASTAR, PHI, N");
    }
};
}  // namespace detail

/// Evaluates an operator expression over A, ASTAR, PHI, N with +, *, ^ and
/// natural coefficients.
inline WeylElement eval_weyl(const ExprPtr& e) { return std::visit(detail::WeylVisitor{}, e->node); }

// ---------------------------------------------------------------------------
// queries

inline Json query_gf(const std::string& text, std::size_t order) {
    ExprPtr e = parse_expr(text);
    TypeValue v = eval_type(e, EvalContext{order, {}});
    Json out{{"query", "gf"}, {"input", render(e)}, {"order", order}};
    if (v.is_species()) {
        out["kind"] = "species";
        out["counts"] = to_json(v.species())["counts"];
        out["gf"] = to_json(v.species().gf());
    } else {
        out["kind"] = "stuff";
        auto card = v.stuff().cardinality();
        out["gf"] = to_json(card);
        Json cx = Json::array();
        for (const auto& c : card.coeffs()) cx.push_back(to_json(h(c)));
        out["gf_complex"] = std::move(cx);
    }
    return out;
}

inline Json query_inner(const std::string& lhs, const std::string& rhs, std::size_t order,
                        bool fock) {
    ExprPtr el = parse_expr(lhs), er = parse_expr(rhs);
    EvalContext ctx{order, {}};
    StuffType a = eval_type(el, ctx).to_stuff();
    StuffType b = eval_type(er, ctx).to_stuff();
    if (fock) a = a.conjugated();
    auto grades = inner_product_graded(a, b);
    PhasedScalar total;
    Json graded = Json::array();
    for (std::size_t n = 0; n < grades.size(); ++n) {
        PhasedScalar c = grades[n].cardinality();
        total += c;
        graded.push_back(scalar_to_json(c));
    }
    Json out{{"query", fock ? "fock_inner" : "inner"},
             {"lhs", render(el)},
             {"rhs", render(er)},
             {"order", order},
             {"cardinality", scalar_to_json(total)},
             {"graded", std::move(graded)}};
    if (!total.is_rational()) out["cardinality_complex"] = to_json(h(total));
    return out;
}

inline Json query_vev(std::uint32_t k, std::uint32_t l,
                      const std::vector<std::uint32_t>& valences) {
    DiagramGroupoid g = enumerate_diagrams(k, l, valences);
    Json out = to_json(g);
    out["query"] = "vev";
    return out;
}

inline Json query_expect(std::uint32_t k, const std::string& optext, std::uint32_t l) {
    ExprPtr e = parse_expr(optext);
    WeylElement w = eval_weyl(e);
    CScalar total;
    for (const auto& [mono, coeff] : w.terms()) {
        if (mono.annihilators > l) continue;
        if (l - mono.annihilators + mono.creators != k) continue;
        Natural fall(1);
        for (std::uint32_t i = 0; i < mono.annihilators; ++i)
            fall = Natural::mul_small(fall, l - i);
        total = total + coeff * CScalar(Rational::from_natural(fall) *
                                        Rational::from_natural(factorial(k)));
    }
    Json out{{"query", "expect"}, {"k", k}, {"l", l}, {"operator", render(e)}};
    if (total.is_rational())
        out["value"] = total.to_rational().to_string();
    else
        out["value_complex"] = to_json(total.to_complex());
    return out;
}

inline Json query_solve(const std::string& equation, std::size_t order) {
    auto [var, rhs] = parse_equation(equation);
    Species solved = solve_fixed_point(
        [&, rhs = rhs, var = var](const Species& current) {
            EvalContext ctx{order, {{var, current}}};
            TypeValue v = eval_type(rhs, ctx);
            if (!v.is_species())
                throw Error(ErrorCode::Input, "solve works over plain species expressions");
            return v.species();
        },
        order);
    Json out{{"query", "solve"}, {"var", var}, {"input", render(rhs)}, {"order", order}};
    out["counts"] = to_json(solved)["counts"];
    out["gf"] = to_json(solved.gf());
    return out;
}

inline Json query_evolve(const std::string& text, const Angle& theta, int sign,
                         std::size_t order) {
    ExprPtr e = parse_expr(text);
    StuffType psi = eval_type(e, EvalContext{order, {}}).to_stuff();
    FreeEvolution evo{theta, sign};
    StuffType evolved = evo.apply(psi);
    auto card = evolved.cardinality();
    Json cx = Json::array();
    for (const auto& c : card.coeffs()) cx.push_back(to_json(h(c)));
    Json out{{"query", "evolve"},
             {"input", render(e)},
             {"order", order},
             {"sign", sign},
             {"series", to_json(card)},
             {"series_complex", std::move(cx)},
             {"tolerance", 1e-12}};
    if (theta.is_exact())
        out["theta_turns"] = theta.exact_turns().to_string();
    else
        out["theta_radians"] = theta.to_radians();
    return out;
}

inline Json query_dyson(std::uint32_t k, std::uint32_t l, const PerturbationSpec& spec) {
    auto terms = dyson_order_terms(k, l, spec);
    std::complex<double> total{0.0, 0.0};
    Json orders = Json::array();
    for (const auto& t : terms) {
        total += t;
        orders.push_back(to_json(t));
    }
    std::complex<double> exact = exact_amplitude(k, l, spec);
    Json potential = Json::array();
    for (const auto& [m, g] : spec.potential)
        potential.push_back(Json::array({m, g}));
    return Json{{"query", "dyson"},
                {"k", k},
                {"l", l},
                {"potential", std::move(potential)},
                {"T", spec.total_time},
                {"dyson_order", spec.dyson_order},
                {"cutoff", spec.fock_cutoff},
                {"orders", std::move(orders)},
                {"dyson", to_json(total)},
                {"exact", to_json(exact)},
                {"delta", std::abs(total - exact)},
                {"tolerance", 1e-12}};
}

inline Json query_diagrams(std::uint32_t k, std::uint32_t l,
                           const std::vector<std::uint32_t>& valences) {
    Json out = to_json(enumerate_diagrams(k, l, valences));
    out["query"] = "diagrams";
    return out;
}

}  // namespace fockcat
