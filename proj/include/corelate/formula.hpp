#pragma once

// Small modal formula language over a fixed relation, used to describe
// endomaps of Pred^arity for the fixed-point solvers.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "corelate/errors.hpp"
#include "corelate/logic.hpp"

namespace corelate {

struct Formula {
    enum class Kind { Var, Const, Diamond, Box, And, Or, Not, Implies };

    Kind kind = Kind::Const;
    std::size_t var = 0;                 // Var
    std::vector<std::size_t> members;    // Const
    std::vector<Formula> children;       // everything else

    static Formula variable(std::size_t k) { return {Kind::Var, k, {}, {}}; }
    static Formula constant(std::vector<std::size_t> m) { return {Kind::Const, 0, std::move(m), {}}; }
    static Formula unary(Kind k, Formula f) { return {k, 0, {}, {std::move(f)}}; }
    static Formula nary(Kind k, std::vector<Formula> fs) { return {k, 0, {}, std::move(fs)}; }

    /// Largest variable index used plus one.
    std::size_t arity() const {
        std::size_t a = kind == Kind::Var ? var + 1 : 0;
        for (const Formula& c : children) a = std::max(a, c.arity());
        return a;
    }
};

inline Pred evaluate(const Formula& f, const Rel& r, const PredTuple& vars) {
    const std::size_t size = r.size();
    switch (f.kind) {
    case Formula::Kind::Var:
        if (f.var >= vars.size())
            throw ContractError("formula: variable " + std::to_string(f.var) + " out of range");
        return vars[f.var];
    case Formula::Kind::Const:
        return Pred::of(size, f.members);
    case Formula::Kind::Diamond:
        return diamond(r, evaluate(f.children.at(0), r, vars));
    case Formula::Kind::Box:
        return box(r, evaluate(f.children.at(0), r, vars));
    case Formula::Kind::Not:
        return evaluate(f.children.at(0), r, vars).complement();
    case Formula::Kind::And: {
        Pred acc = Pred::full(size);
        for (const Formula& c : f.children) acc = meet(acc, evaluate(c, r, vars));
        return acc;
    }
    case Formula::Kind::Or: {
        Pred acc = Pred::empty(size);
        for (const Formula& c : f.children) acc = join(acc, evaluate(c, r, vars));
        return acc;
    }
    case Formula::Kind::Implies:
        detail::require(f.children.size() == 2, "formula: implies takes two operands");
        return implies(evaluate(f.children[0], r, vars), evaluate(f.children[1], r, vars));
    }
    throw ContractError("formula: unknown node kind");
}

/// The endomap x |-> (formulas[0](x), ..., formulas[k-1](x)).
struct FormulaSystem {
    Rel relation;
    std::vector<Formula> formulas;

    PredTuple operator()(const PredTuple& x) const {
        PredTuple out;
        out.reserve(formulas.size());
        for (const Formula& f : formulas) out.push_back(evaluate(f, relation, x));
        return out;
    }
};

} // namespace corelate
