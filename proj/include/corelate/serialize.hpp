#pragma once

// JSON encodings for every morphism type and for fixed-point problems.
//
//   SynMorphism  {"m":1,"n":2,"trees":[{"node":[{"leaf":0},{"leaf":1}]}]}
//   Corelation   {"m":1,"n":2,"classes":[["i0","o0","o1"]]}
//   Cospan       {"m":2,"n":1,"apex":1,"a":[0,0],"b":[0]}
//   CocomMap     {"m":1,"n":2,"phi":[0,0]}
//   Fixpoint     {"carrier":3,"relation":[[0,1]],"formula":<term>}   (or "formulas":[...])
//
// Formula terms: "var" | {"var":k} | {"const":[...]} | {"diamond":t} | {"box":t}
//                | {"not":t} | {"and":[t,...]} | {"or":[t,...]} | {"implies":[t,t]}

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "corelate/ancestry.hpp"
#include "corelate/cospan.hpp"
#include "corelate/fincorel.hpp"
#include "corelate/formula.hpp"
#include "corelate/syn.hpp"

namespace corelate {

using Json = nlohmann::json;

/// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline std::size_t natural(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(std::string(what) + ": expected a natural number");
    return j.get<std::size_t>();
}

inline std::vector<std::size_t> naturals(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
    std::vector<std::size_t> out;
    for (const Json& e : j) out.push_back(natural(e, what));
    return out;
}

/// Runs a constructor, reporting contract violations as parse errors.
template <class Fn>
auto build(const char* what, Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ContractError& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

} // namespace detail

inline Json to_json(const FinFunction& f) { return Json{{"cod", f.cod()}, {"table", f.table()}}; }

inline FinFunction function_from_json(const Json& j) {
    std::size_t cod = detail::natural(detail::field(j, "cod"), "cod");
    auto table = detail::naturals(detail::field(j, "table"), "table");
    return detail::build("function", [&] { return FinFunction(cod, std::move(table)); });
}

// Trees

inline Json to_json(const Tree& t) {
    if (t.is_leaf()) return Json{{"leaf", t.label()}};
    return Json{{"node", Json::array({to_json(t.left()), to_json(t.right())})}};
}

inline Tree tree_from_json(const Json& j) {
    if (j.is_object() && j.contains("leaf") && j.size() == 1)
        return Tree::leaf(detail::natural(j.at("leaf"), "leaf"));
    if (j.is_object() && j.contains("node") && j.size() == 1) {
        const Json& kids = j.at("node");
        if (!kids.is_array() || kids.size() != 2) throw ParseError("node: expected [left, right]");
        return Tree::node(tree_from_json(kids[0]), tree_from_json(kids[1]));
    }
    throw ParseError("tree: expected {\"leaf\":k} or {\"node\":[l,r]}");
}

// Syn

inline Json to_json(const SynMorphism& f) {
    Json trees = Json::array();
    for (const Tree& t : f.trees()) trees.push_back(to_json(t));
    return Json{{"m", f.dom()}, {"n", f.cod()}, {"trees", trees}};
}

inline SynMorphism syn_from_json(const Json& j) {
    std::size_t m = detail::natural(detail::field(j, "m"), "m");
    std::size_t n = detail::natural(detail::field(j, "n"), "n");
    const Json& arr = detail::field(j, "trees");
    if (!arr.is_array()) throw ParseError("trees: expected an array");
    std::vector<Tree> trees;
    for (const Json& t : arr) trees.push_back(tree_from_json(t));
    return detail::build("syn", [&] { return SynMorphism(m, n, std::move(trees)); });
}

// Corelations

inline std::string element_name(const Corelation& r, std::size_t e) {
    return r.is_input(e) ? "i" + std::to_string(e) : "o" + std::to_string(e - r.dom());
}

inline Json to_json(const Corelation& r) {
    Json classes = Json::array();
    for (const auto& cls : r.partition().classes()) {
        Json names = Json::array();
        for (std::size_t e : cls) names.push_back(element_name(r, e));
        classes.push_back(names);
    }
    return Json{{"m", r.dom()}, {"n", r.cod()}, {"classes", classes}};
}

inline Corelation corel_from_json(const Json& j) {
    std::size_t m = detail::natural(detail::field(j, "m"), "m");
    std::size_t n = detail::natural(detail::field(j, "n"), "n");
    const Json& arr = detail::field(j, "classes");
    if (!arr.is_array()) throw ParseError("classes: expected an array");
    std::vector<std::vector<std::size_t>> classes;
    for (const Json& cls : arr) {
        if (!cls.is_array()) throw ParseError("classes: each class must be an array");
        std::vector<std::size_t> members;
        for (const Json& name : cls) {
            if (!name.is_string()) throw ParseError("classes: expected names like \"i0\"/\"o1\"");
            const std::string s = name.get<std::string>();
            std::size_t idx = 0;
            try {
                std::size_t used = 0;
                idx = std::stoul(s.substr(1), &used);
                if (used + 1 != s.size()) throw std::invalid_argument(s);
            } catch (const std::exception&) {
                throw ParseError("classes: bad element name \"" + s + "\"");
            }
            if (s[0] == 'i' && idx < m) members.push_back(idx);
            else if (s[0] == 'o' && idx < n) members.push_back(m + idx);
            else throw ParseError("classes: element \"" + s + "\" outside the boundary");
        }
        classes.push_back(std::move(members));
    }
    return detail::build("corel", [&] {
        return Corelation(m, n, Partition::from_classes(m + n, classes));
    });
}

// Cospans

inline Json to_json(const Cospan& c) {
    return Json{{"m", c.dom()}, {"n", c.cod()}, {"apex", c.apex()},
                {"a", c.left().table()}, {"b", c.right().table()}};
}

inline Cospan cospan_from_json(const Json& j) {
    std::size_t m = detail::natural(detail::field(j, "m"), "m");
    std::size_t n = detail::natural(detail::field(j, "n"), "n");
    std::size_t apex = detail::natural(detail::field(j, "apex"), "apex");
    auto a = detail::naturals(detail::field(j, "a"), "a");
    auto b = detail::naturals(detail::field(j, "b"), "b");
    if (a.size() != m) throw ParseError("cospan: leg a must have m entries");
    if (b.size() != n) throw ParseError("cospan: leg b must have n entries");
    return detail::build("cospan", [&] {
        return Cospan(FinFunction(apex, std::move(a)), FinFunction(apex, std::move(b)));
    });
}

// Cocom

inline Json to_json(const CocomMap& u) {
    return Json{{"m", u.dom()}, {"n", u.cod()}, {"phi", u.phi().table()}};
}

inline CocomMap cocom_from_json(const Json& j) {
    std::size_t m = detail::natural(detail::field(j, "m"), "m");
    std::size_t n = detail::natural(detail::field(j, "n"), "n");
    auto phi = detail::naturals(detail::field(j, "phi"), "phi");
    if (phi.size() != n) throw ParseError("cocom: phi must have n entries");
    return detail::build("cocom", [&] { return CocomMap(m, n, FinFunction(m, std::move(phi))); });
}

// Formulas and fixed-point problems

inline Formula formula_from_json(const Json& j) {
    using K = Formula::Kind;
    if (j.is_string()) {
        if (j.get<std::string>() == "var") return Formula::variable(0);
        throw ParseError("formula: unknown atom \"" + j.get<std::string>() + "\"");
    }
    if (!j.is_object() || j.size() != 1) throw ParseError("formula: expected a one-key object");
    const std::string key = j.begin().key();
    const Json& body = j.begin().value();
    auto list = [&](std::size_t min) {
        if (!body.is_array() || body.size() < min)
            throw ParseError("formula: \"" + key + "\" expects an array of terms");
        std::vector<Formula> out;
        for (const Json& t : body) out.push_back(formula_from_json(t));
        return out;
    };
    if (key == "var") return Formula::variable(detail::natural(body, "var"));
    if (key == "const") return Formula::constant(detail::naturals(body, "const"));
    if (key == "diamond") return Formula::unary(K::Diamond, formula_from_json(body));
    if (key == "box") return Formula::unary(K::Box, formula_from_json(body));
    if (key == "not") return Formula::unary(K::Not, formula_from_json(body));
    if (key == "and") return Formula::nary(K::And, list(0));
    if (key == "or") return Formula::nary(K::Or, list(0));
    if (key == "implies") {
        auto ops = list(2);
        if (ops.size() != 2) throw ParseError("formula: \"implies\" takes exactly two terms");
        return Formula::nary(K::Implies, std::move(ops));
    }
    throw ParseError("formula: unknown operator \"" + key + "\"");
}

inline Json to_json(const Formula& f) {
    using K = Formula::Kind;
    auto kids = [&] {
        Json a = Json::array();
        for (const Formula& c : f.children) a.push_back(to_json(c));
        return a;
    };
    switch (f.kind) {
    case K::Var: return Json{{"var", f.var}};
    case K::Const: return Json{{"const", f.members}};
    case K::Diamond: return Json{{"diamond", to_json(f.children.at(0))}};
    case K::Box: return Json{{"box", to_json(f.children.at(0))}};
    case K::Not: return Json{{"not", to_json(f.children.at(0))}};
    case K::And: return Json{{"and", kids()}};
    case K::Or: return Json{{"or", kids()}};
    case K::Implies: return Json{{"implies", kids()}};
    }
    return {};
}

inline FormulaSystem fixpoint_problem_from_json(const Json& j) {
    std::size_t carrier = detail::natural(detail::field(j, "carrier"), "carrier");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (j.contains("relation")) {
        const Json& rel = j.at("relation");
        if (!rel.is_array()) throw ParseError("relation: expected an array of pairs");
        for (const Json& p : rel) {
            if (!p.is_array() || p.size() != 2) throw ParseError("relation: expected [x, y] pairs");
            pairs.emplace_back(detail::natural(p[0], "relation"), detail::natural(p[1], "relation"));
        }
    }
    std::vector<Formula> formulas;
    if (j.contains("formula")) formulas.push_back(formula_from_json(j.at("formula")));
    else {
        const Json& fs = detail::field(j, "formulas");
        if (!fs.is_array() || fs.empty()) throw ParseError("formulas: expected a nonempty array");
        for (const Json& f : fs) formulas.push_back(formula_from_json(f));
    }
    for (const Formula& f : formulas) {
        if (f.arity() > formulas.size())
            throw ParseError("formula refers to a variable beyond the system's arity");
        std::vector<const Formula*> stack{&f};
        while (!stack.empty()) {
            const Formula* g = stack.back();
            stack.pop_back();
            for (std::size_t x : g->members)
                if (x >= carrier) throw ParseError("const: element outside carrier");
            for (const Formula& c : g->children) stack.push_back(&c);
        }
    }
    Rel r = detail::build("relation", [&] { return Rel(carrier, pairs); });
    return {std::move(r), std::move(formulas)};
}

} // namespace corelate
