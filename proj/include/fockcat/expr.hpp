#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "fockcat/bigint.hpp"
#include "fockcat/rational.hpp"

namespace fockcat {

enum class TypeAtom { Z, E, Eplus, O };
enum class OpAtom { A, AStar, Phi, N };
enum class UnaryKind { Derivative, Shift, Conjugate };
enum class BinaryKind { Add, Mul, Pow, Compose };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct AtomExpr {
    TypeAtom atom;
};
struct EnExpr { // "being an n-element set"
    std::uint64_t n;
};
struct NatExpr {
    Natural value;
};
struct VarExpr {
    std::string name;
};
struct OpAtomExpr {
    OpAtom atom;
};
struct UnaryExpr {
    UnaryKind kind;
    ExprPtr child;
};
struct PhaseExpr {
    ExprPtr child;
    Rational turns;
};
struct BinaryExpr {
    BinaryKind kind;
    ExprPtr lhs, rhs;
};

struct ExprNode {
    std::variant<AtomExpr, EnExpr, NatExpr, VarExpr, OpAtomExpr, UnaryExpr, PhaseExpr, BinaryExpr>
        node;
};

template <class T, class... Args>
ExprPtr make_expr(Args&&... args) {
    return std::make_shared<const ExprNode>(ExprNode{T{std::forward<Args>(args)...}});
}

namespace detail {
// binding strength, matching the grammar: compose > pow > mul > add
inline int precedence(const ExprNode& e) {
    if (const auto* b = std::get_if<BinaryExpr>(&e.node)) {
        switch (b->kind) {
            case BinaryKind::Add: return 1;
            case BinaryKind::Mul: return 2;
            case BinaryKind::Pow: return 3;
            case BinaryKind::Compose: return 4;
        }
    }
    return 5;
}
}  // namespace detail

inline std::string render(const ExprPtr& e);

namespace detail {
inline std::string render_child(const ExprPtr& child, int parent_prec, bool is_right) {
    std::string s = render(child);
    int prec = precedence(*child);
    // left-associative operators need parens on an equal-precedence right child
    if (prec < parent_prec || (prec == parent_prec && is_right)) return "(" + s + ")";
    return s;
}
}  // namespace detail

inline std::string render(const ExprPtr& e) {
    struct Visitor {
        std::string operator()(const AtomExpr& a) const {
            switch (a.atom) {
                case TypeAtom::Z: return "Z";
                case TypeAtom::E: return "E";
                case TypeAtom::Eplus: return "Eplus";
                case TypeAtom::O: return "O";
            }
            return {};
        }
        std::string operator()(const EnExpr& a) const { return "En(" + std::to_string(a.n) + ")"; }
        std::string operator()(const NatExpr& a) const { return a.value.to_decimal(); }
        std::string operator()(const VarExpr& a) const { return a.name; }
        std::string operator()(const OpAtomExpr& a) const {
            switch (a.atom) {
                case OpAtom::A: return "A";
                case OpAtom::AStar: return "ASTAR";
                case OpAtom::Phi: return "PHI";
                case OpAtom::N: return "N";
            }
            return {};
        }
        std::string operator()(const UnaryExpr& u) const {
            const char* name = u.kind == UnaryKind::Derivative ? "D"
                               : u.kind == UnaryKind::Shift    ? "Astar"
                                                               : "Conj";
            return std::string(name) + "(" + render(u.child) + ")";
        }
        std::string operator()(const PhaseExpr& p) const {
            return "Phase(" + render(p.child) + ", " + p.turns.to_string() + ")";
        }
        std::string operator()(const BinaryExpr& b) const {
            int prec = b.kind == BinaryKind::Add       ? 1
                       : b.kind == BinaryKind::Mul     ? 2
                       : b.kind == BinaryKind::Pow     ? 3
                                                       : 4;
            const char* op = b.kind == BinaryKind::Add       ? " + "
                             : b.kind == BinaryKind::Mul     ? " * "
                             : b.kind == BinaryKind::Pow     ? "^"
                                                             : " of ";
            return detail::render_child(b.lhs, prec, false) + op +
                   detail::render_child(b.rhs, prec, true);
        }
    };
    return std::visit(Visitor{}, e->node);
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->node.index() != b->node.index()) return false;
    struct Visitor {
        const ExprNode& other;
        bool operator()(const AtomExpr& x) const { return std::get<AtomExpr>(other.node).atom == x.atom; }
        bool operator()(const EnExpr& x) const { return std::get<EnExpr>(other.node).n == x.n; }
        bool operator()(const NatExpr& x) const { return std::get<NatExpr>(other.node).value == x.value; }
        bool operator()(const VarExpr& x) const { return std::get<VarExpr>(other.node).name == x.name; }
        bool operator()(const OpAtomExpr& x) const {
            return std::get<OpAtomExpr>(other.node).atom == x.atom;
        }
        bool operator()(const UnaryExpr& x) const {
            const auto& o = std::get<UnaryExpr>(other.node);
            return o.kind == x.kind && expr_equal(x.child, o.child);
        }
        bool operator()(const PhaseExpr& x) const {
            const auto& o = std::get<PhaseExpr>(other.node);
            return o.turns == x.turns && expr_equal(x.child, o.child);
        }
        bool operator()(const BinaryExpr& x) const {
            const auto& o = std::get<BinaryExpr>(other.node);
            return o.kind == x.kind && expr_equal(x.lhs, o.lhs) && expr_equal(x.rhs, o.rhs);
        }
    };
    return std::visit(Visitor{*b}, a->node);
}

}  // namespace fockcat
