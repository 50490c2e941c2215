#pragma once

// Seeded random instances of every morphism type, for property checks.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "corelate/ancestry.hpp"
#include "corelate/cospan.hpp"
#include "corelate/fincorel.hpp"
#include "corelate/finset.hpp"
#include "corelate/syn.hpp"

namespace corelate {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline FinFunction random_function(Rng& rng, std::size_t dom, std::size_t cod) {
    detail::require(cod > 0 || dom == 0, "random_function: no functions into the empty set");
    std::vector<std::size_t> t(dom);
    for (auto& v : t) v = uniform(rng, 0, cod - 1);
    return {cod, std::move(t)};
}

/// Uniform over function tables, then fixed up so every fiber is hit.
inline FinFunction random_surjection(Rng& rng, std::size_t dom, std::size_t cod) {
    detail::require(cod <= dom && (cod > 0 || dom == 0), "random_surjection: no surjection exists");
    std::vector<std::size_t> order(dom);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> t(dom);
    for (std::size_t k = 0; k < dom; ++k) t[order[k]] = k < cod ? k : uniform(rng, 0, cod - 1);
    return {cod, std::move(t)};
}

/// Random ordered binary tree with leaves labeled 0..leaves-1 left to right.
inline Tree random_tree_shape(Rng& rng, std::size_t leaves) {
    if (leaves == 1) return Tree::leaf(0);
    std::size_t l = uniform(rng, 1, leaves - 1);
    return Tree::node(random_tree_shape(rng, l), random_tree_shape(rng, leaves - l).shifted(l));
}

/// Random element of Syn(m, n); requires the hom-set to be nonempty.
inline SynMorphism random_syn(Rng& rng, std::size_t m, std::size_t n) {
    detail::require(n >= m && (m > 0 || n == 0), "random_syn: empty hom-set");
    std::vector<std::size_t> parts(m, 1);
    for (std::size_t extra = n - m; extra > 0; --extra) parts[uniform(rng, 0, m - 1)]++;
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<Tree> trees;
    std::size_t offset = 0;
    for (std::size_t k : parts) {
        trees.push_back(random_tree_shape(rng, k).relabeled(
            std::span<const std::size_t>(labels).subspan(offset, k)));
        offset += k;
    }
    return {m, n, std::move(trees)};
}

inline Corelation random_corel(Rng& rng, std::size_t m, std::size_t n) {
    std::vector<std::size_t> labels(m + n);
    for (auto& v : labels) v = uniform(rng, 0, m + n - 1);
    return {m, n, Partition::from_labels(labels)};
}

/// Random cospan with apex at most max_apex (at least 1 when a leg is nonempty).
inline Cospan random_cospan(Rng& rng, std::size_t m, std::size_t n, std::size_t max_apex) {
    std::size_t lo = (m + n > 0) ? 1 : 0;
    std::size_t apex = uniform(rng, lo, std::max(lo, max_apex));
    return {random_function(rng, m, apex), random_function(rng, n, apex)};
}

inline CocomMap random_cocom(Rng& rng, std::size_t m, std::size_t n) {
    return {m, n, random_surjection(rng, n, m)};
}

} // namespace corelate
