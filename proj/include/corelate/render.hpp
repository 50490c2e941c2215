#pragma once

// Graphviz DOT emitters. Inputs are ranked on the left, outputs on the right.
// Symmetries are drawn only as crossing edges, never as vertices.

#include <cstddef>
#include <sstream>
#include <string>

#include "corelate/ancestry.hpp"
#include "corelate/cospan.hpp"
#include "corelate/fincorel.hpp"
#include "corelate/syn.hpp"

namespace corelate {

namespace detail {

inline void boundary(std::ostringstream& os, std::size_t m, std::size_t n) {
    os << "  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
    os << "  { rank=source;";
    for (std::size_t i = 0; i < m; ++i) os << " i" << i << ";";
    os << " }\n  { rank=sink;";
    for (std::size_t j = 0; j < n; ++j) os << " o" << j << ";";
    os << " }\n";
    // Invisible chains keep boundary order top to bottom.
    for (std::size_t i = 0; i + 1 < m; ++i) os << "  i" << i << " -> i" << i + 1 << " [style=invis];\n";
    for (std::size_t j = 0; j + 1 < n; ++j) os << "  o" << j << " -> o" << j + 1 << " [style=invis];\n";
}

} // namespace detail

inline std::string to_dot(const SynMorphism& f) {
    std::ostringstream os;
    os << "digraph syn {\n";
    detail::boundary(os, f.dom(), f.cod());
    std::size_t next_vertex = 0;
    // Returns the DOT id of the subtree's top; emits its internal edges.
    auto emit = [&](auto&& self, const Tree& t) -> std::string {
        if (t.is_leaf()) return "o" + std::to_string(t.label());
        std::string v = "d" + std::to_string(next_vertex++);
        os << "  " << v << " [shape=point, width=0.12];\n";
        const std::string l = self(self, t.left());
        const std::string r = self(self, t.right());
        os << "  " << v << " -> " << l << " [taillabel=\"L\"];\n";
        os << "  " << v << " -> " << r << " [taillabel=\"R\"];\n";
        return v;
    };
    for (std::size_t i = 0; i < f.dom(); ++i) {
        const std::string top = emit(emit, f.trees()[i]);
        os << "  i" << i << " -> " << top << ";\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const Corelation& r) {
    std::ostringstream os;
    os << "digraph corel {\n";
    detail::boundary(os, r.dom(), r.cod());
    auto name = [&](std::size_t e) {
        return r.is_input(e) ? "i" + std::to_string(e) : "o" + std::to_string(e - r.dom());
    };
    const auto classes = r.partition().classes();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        os << "  subgraph cluster_" << c << " { style=dashed;";
        for (std::size_t e : classes[c]) os << " " << name(e) << ";";
        os << " }\n";
        for (std::size_t k = 0; k + 1 < classes[c].size(); ++k)
            os << "  " << name(classes[c][k]) << " -> " << name(classes[c][k + 1])
               << " [dir=none];\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const Cospan& c) {
    std::ostringstream os;
    os << "digraph cospan {\n";
    detail::boundary(os, c.dom(), c.cod());
    for (std::size_t k = 0; k < c.apex(); ++k)
        os << "  n" << k << " [shape=box" << (k >= c.apex() - c.unreached() ? ", style=dashed" : "")
           << "];\n";
    for (std::size_t i = 0; i < c.dom(); ++i) os << "  i" << i << " -> n" << c.left()(i) << ";\n";
    for (std::size_t j = 0; j < c.cod(); ++j) os << "  n" << c.right()(j) << " -> o" << j << " [dir=back];\n";
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const CocomMap& u) {
    std::ostringstream os;
    os << "digraph cocom {\n";
    detail::boundary(os, u.dom(), u.cod());
    for (std::size_t j = 0; j < u.cod(); ++j) os << "  i" << u.phi()(j) << " -> o" << j << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace corelate
