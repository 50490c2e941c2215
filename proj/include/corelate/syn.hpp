#pragma once

// The free PROP on one binary generator 1 -> 2. A morphism m -> n is an
// ordered forest of m ordered binary trees whose n leaves carry the output
// labels 0..n-1, each exactly once. The forest is a complete invariant of the
// string-diagram isomorphism class, so structural equality is morphism equality.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corelate/errors.hpp"

namespace corelate {

/// An ordered binary tree with labeled leaves, stored as its preorder token
/// sequence (a token is either a leaf label or the node marker).
class Tree {
public:
    using Token = std::uint32_t;
    static constexpr Token kNode = static_cast<Token>(-1);

    static Tree leaf(std::size_t label) {
        detail::require(label < kNode, "Tree: leaf label too large");
        return Tree({static_cast<Token>(label)});
    }

    static Tree node(const Tree& left, const Tree& right) {
        std::vector<Token> t;
        t.reserve(1 + left.tokens_.size() + right.tokens_.size());
        t.push_back(kNode);
        t.insert(t.end(), left.tokens_.begin(), left.tokens_.end());
        t.insert(t.end(), right.tokens_.begin(), right.tokens_.end());
        return Tree(std::move(t));
    }

    /// Validates that `tokens` is exactly one well-formed preorder tree.
    static Tree from_tokens(std::vector<Token> tokens) {
        detail::require(!tokens.empty() && subtree_end(tokens, 0) == tokens.size(),
                        "Tree: malformed preorder token sequence");
        return Tree(std::move(tokens));
    }

    bool is_leaf() const { return tokens_.front() != kNode; }
    std::size_t label() const {
        detail::require(is_leaf(), "Tree::label on a node");
        return tokens_.front();
    }

    Tree left() const {
        detail::require(!is_leaf(), "Tree::left on a leaf");
        std::size_t mid = subtree_end(tokens_, 1);
        return Tree(std::vector<Token>(tokens_.begin() + 1, tokens_.begin() + static_cast<std::ptrdiff_t>(mid)));
    }

    Tree right() const {
        detail::require(!is_leaf(), "Tree::right on a leaf");
        std::size_t mid = subtree_end(tokens_, 1);
        return Tree(std::vector<Token>(tokens_.begin() + static_cast<std::ptrdiff_t>(mid), tokens_.end()));
    }

    /// Leaf labels in left-to-right order.
    std::vector<std::size_t> leaves() const {
        std::vector<std::size_t> out;
        for (Token t : tokens_)
            if (t != kNode) out.push_back(t);
        return out;
    }

    std::size_t leaf_count() const { return (tokens_.size() + 1) / 2; }
    std::size_t node_count() const { return tokens_.size() / 2; }

    /// Replace each Leaf(j) by subs[j].
    Tree graft(std::span<const Tree> subs) const {
        std::vector<Token> t;
        for (Token tok : tokens_) {
            if (tok == kNode) {
                t.push_back(kNode);
            } else {
                const auto& sub = subs[tok].tokens_;
                t.insert(t.end(), sub.begin(), sub.end());
            }
        }
        return Tree(std::move(t));
    }

    Tree shifted(std::size_t offset) const {
        std::vector<Token> t = tokens_;
        for (Token& tok : t)
            if (tok != kNode) tok = static_cast<Token>(tok + offset);
        return Tree(std::move(t));
    }

    /// Same shape with the leaves relabeled, in order, from `labels`.
    Tree relabeled(std::span<const std::size_t> labels) const {
        std::vector<Token> t = tokens_;
        std::size_t k = 0;
        for (Token& tok : t)
            if (tok != kNode) tok = static_cast<Token>(labels[k++]);
        return Tree(std::move(t));
    }

    const std::vector<Token>& tokens() const { return tokens_; }

    friend bool operator==(const Tree&, const Tree&) = default;
    friend auto operator<=>(const Tree&, const Tree&) = default;

    /// One past the end of the subtree starting at `pos`, or size()+1 if truncated.
    static std::size_t subtree_end(std::span<const Token> tokens, std::size_t pos) {
        std::size_t need = 1;
        while (need > 0) {
            if (pos >= tokens.size()) return tokens.size() + 1;
            need = tokens[pos++] == kNode ? need + 1 : need - 1;
        }
        return pos;
    }

private:
    explicit Tree(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    std::vector<Token> tokens_;
};

/// A morphism m -> n of the free PROP in canonical forest form.
class SynMorphism {
public:
    SynMorphism() = default;

    SynMorphism(std::size_t m, std::size_t n, std::vector<Tree> trees)
        : m_(m), n_(n), trees_(std::move(trees)) {
        if (trees_.size() != m_)
            throw ContractError("SynMorphism: expected " + std::to_string(m_) + " trees, got " +
                                std::to_string(trees_.size()));
        std::vector<bool> seen(n_, false);
        std::size_t count = 0;
        for (const Tree& t : trees_)
            for (std::size_t l : t.leaves()) {
                if (l >= n_)
                    throw ContractError("SynMorphism: leaf label " + std::to_string(l) +
                                        " out of range for codomain " + std::to_string(n_));
                if (seen[l])
                    throw ContractError("SynMorphism: leaf label " + std::to_string(l) +
                                        " used twice");
                seen[l] = true;
                ++count;
            }
        detail::require(count == n_, "SynMorphism: leaf labels do not cover the codomain");
    }

    std::size_t dom() const { return m_; }
    std::size_t cod() const { return n_; }
    const std::vector<Tree>& trees() const { return trees_; }

    std::size_t node_count() const {
        std::size_t c = 0;
        for (const Tree& t : trees_) c += t.node_count();
        return c;
    }

    friend bool operator==(const SynMorphism&, const SynMorphism&) = default;
    friend auto operator<=>(const SynMorphism&, const SynMorphism&) = default;

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::vector<Tree> trees_;
};

inline SynMorphism generator() {
    return {1, 2, {Tree::node(Tree::leaf(0), Tree::leaf(1))}};
}

inline SynMorphism identity(std::size_t k) {
    std::vector<Tree> trees;
    trees.reserve(k);
    for (std::size_t i = 0; i < k; ++i) trees.push_back(Tree::leaf(i));
    return {k, k, std::move(trees)};
}

/// Block transposition p + q -> q + p.
inline SynMorphism symmetry(std::size_t p, std::size_t q) {
    std::vector<Tree> trees;
    trees.reserve(p + q);
    for (std::size_t i = 0; i < p; ++i) trees.push_back(Tree::leaf(q + i));
    for (std::size_t j = 0; j < q; ++j) trees.push_back(Tree::leaf(j));
    return {p + q, p + q, std::move(trees)};
}

/// The permutation morphism sending input position j to output perm[j].
inline SynMorphism permutation(std::span<const std::size_t> perm) {
    std::vector<Tree> trees;
    trees.reserve(perm.size());
    for (std::size_t v : perm) trees.push_back(Tree::leaf(v));
    return {perm.size(), perm.size(), std::move(trees)};
}

/// Diagrammatic composition f ; g (f first), by grafting g's trees onto f's leaves.
inline SynMorphism then(const SynMorphism& f, const SynMorphism& g) {
    if (f.cod() != g.dom())
        throw ContractError("then: codomain " + std::to_string(f.cod()) +
                            " does not match domain " + std::to_string(g.dom()));
    std::vector<Tree> trees;
    trees.reserve(f.dom());
    for (const Tree& t : f.trees()) trees.push_back(t.graft(g.trees()));
    return {f.dom(), g.cod(), std::move(trees)};
}

inline SynMorphism tensor(const SynMorphism& f, const SynMorphism& g) {
    std::vector<Tree> trees = f.trees();
    trees.reserve(f.dom() + g.dom());
    for (const Tree& t : g.trees()) trees.push_back(t.shifted(f.cod()));
    return {f.dom() + g.dom(), f.cod() + g.cod(), std::move(trees)};
}

/// All ordered binary tree shapes with k >= 1 leaves, labeled 0..k-1 left to
/// right. Order: leaf first, then by size of the left subtree, then recursively.
inline std::vector<Tree> tree_shapes(std::size_t k) {
    std::vector<std::vector<Tree>> memo(k + 1);
    if (k == 0) return {};
    memo[1] = {Tree::leaf(0)};
    for (std::size_t s = 2; s <= k; ++s)
        for (std::size_t l = 1; l < s; ++l)
            for (const Tree& lt : memo[l])
                for (const Tree& rt : memo[s - l]) memo[s].push_back(Tree::node(lt, rt.shifted(l)));
    return memo[k];
}

namespace detail {

/// Compositions of n into m positive parts, lexicographic.
inline std::vector<std::vector<std::size_t>> positive_compositions(std::size_t n, std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    if (m == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    if (n < m) return out;
    std::vector<std::size_t> parts(m);
    auto rec = [&](auto&& self, std::size_t idx, std::size_t remaining) -> void {
        if (idx + 1 == m) {
            parts[idx] = remaining;
            out.push_back(parts);
            return;
        }
        for (std::size_t v = 1; v + (m - idx - 1) <= remaining; ++v) {
            parts[idx] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

} // namespace detail

/// The full hom-set Syn(m, n): ordered by leaf-count composition, then tree
/// shapes, then label assignment in lexicographic permutation order.
inline std::vector<SynMorphism> enumerate_syn(std::size_t m, std::size_t n) {
    std::vector<SynMorphism> out;
    for (const auto& parts : detail::positive_compositions(n, m)) {
        std::vector<std::vector<Tree>> shapes;
        shapes.reserve(m);
        for (std::size_t k : parts) shapes.push_back(tree_shapes(k));

        std::vector<std::size_t> choice(m, 0);
        bool more = true;
        while (more) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            do {
                std::vector<Tree> trees;
                trees.reserve(m);
                std::size_t offset = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    const Tree& shape = shapes[i][choice[i]];
                    trees.push_back(shape.relabeled(
                        std::span<const std::size_t>(perm).subspan(offset, parts[i])));
                    offset += parts[i];
                }
                out.emplace_back(m, n, std::move(trees));
            } while (std::next_permutation(perm.begin(), perm.end()));

            more = false;
            for (std::size_t i = m; i-- > 0;) {
                if (++choice[i] < shapes[i].size()) {
                    more = true;
                    break;
                }
                choice[i] = 0;
            }
        }
    }
    return out;
}

/// Rebuilds f using only generator(), identity(), symmetry(), then() and
/// tensor(): a per-tree term tensored together, followed by a permutation
/// assembled from adjacent transpositions.
inline SynMorphism from_generators(const SynMorphism& f) {
    auto term = [](auto&& self, const Tree& t) -> SynMorphism {
        if (t.is_leaf()) return identity(1);
        return then(generator(), tensor(self(self, t.left()), self(self, t.right())));
    };

    SynMorphism shape = identity(0);
    std::vector<std::size_t> labels;
    for (const Tree& t : f.trees()) {
        shape = tensor(shape, term(term, t));
        auto l = t.leaves();
        labels.insert(labels.end(), l.begin(), l.end());
    }

    const std::size_t n = f.cod();
    SynMorphism perm = identity(n);
    // Bubble-sort the label sequence; the recorded swaps, applied in order,
    // realize the permutation.
    std::vector<std::size_t> s = labels;
    for (std::size_t pass = 0; pass < n; ++pass)
        for (std::size_t k = 0; k + 1 < n; ++k)
            if (s[k] > s[k + 1]) {
                std::swap(s[k], s[k + 1]);
                SynMorphism swap =
                    tensor(tensor(identity(k), symmetry(1, 1)), identity(n - k - 2));
                perm = then(perm, swap);
            }
    return then(shape, perm);
}

} // namespace corelate
