#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "corelate/oracles.hpp"
#include "corelate/random.hpp"
#include "corelate/syn.hpp"

using namespace corelate;

namespace {

Tree L(std::size_t k) { return Tree::leaf(k); }
Tree N(const Tree& a, const Tree& b) { return Tree::node(a, b); }

std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

// |Syn(m, n)| from the leaf-to-tree assignment: every fiber-nonempty
// assignment of the n labels to m trees contributes, per tree with k leaves,
// Catalan(k - 1) shapes times k! left-to-right orders of its labels.
std::size_t syn_count(std::size_t m, std::size_t n) {
    std::size_t total = 0;
    std::size_t codes = 1;
    for (std::size_t k = 0; k < n; ++k) codes *= m;
    if (m == 0) return n == 0 ? 1 : 0;
    for (std::size_t code = 0; code < codes; ++code) {
        std::vector<std::size_t> fiber(m, 0);
        std::size_t c = code;
        for (std::size_t k = 0; k < n; ++k) {
            fiber[c % m]++;
            c /= m;
        }
        std::size_t term = 1;
        for (std::size_t k : fiber) term *= k == 0 ? 0 : oracle::catalan(k - 1) * factorial(k);
        total += term;
    }
    return total;
}

} // namespace

TEST(Tree, Accessors) {
    Tree t = N(N(L(0), L(2)), L(1));
    EXPECT_FALSE(t.is_leaf());
    EXPECT_EQ(t.left(), N(L(0), L(2)));
    EXPECT_EQ(t.right(), L(1));
    EXPECT_EQ(t.leaves(), (std::vector<std::size_t>{0, 2, 1}));
    EXPECT_EQ(t.leaf_count(), 3u);
    EXPECT_EQ(t.node_count(), 2u);
    EXPECT_EQ(t.shifted(3), N(N(L(3), L(5)), L(4)));
    EXPECT_THROW(L(0).left(), ContractError);
}

TEST(SynMorphism, ValidatesLeafLabels) {
    EXPECT_THROW(SynMorphism(1, 2, {N(L(0), L(0))}), ContractError);
    EXPECT_THROW(SynMorphism(1, 2, {N(L(0), L(2))}), ContractError);
    EXPECT_THROW(SynMorphism(2, 2, {N(L(0), L(1))}), ContractError);
    EXPECT_THROW(SynMorphism(1, 3, {N(L(0), L(1))}), ContractError);
    EXPECT_NO_THROW(SynMorphism(2, 3, {L(2), N(L(1), L(0))}));
}

TEST(Generator, Shape) {
    EXPECT_EQ(generator(), SynMorphism(1, 2, {N(L(0), L(1))}));
    EXPECT_NE(generator(), then(generator(), symmetry(1, 1)));
}

TEST(Identity, Shape) {
    EXPECT_EQ(identity(0), SynMorphism(0, 0, {}));
    EXPECT_EQ(identity(3), SynMorphism(3, 3, {L(0), L(1), L(2)}));
}

TEST(Symmetry, Shapes) {
    EXPECT_EQ(symmetry(1, 1), SynMorphism(2, 2, {L(1), L(0)}));
    EXPECT_EQ(symmetry(0, 3), identity(3));
    EXPECT_EQ(symmetry(3, 0), identity(3));
    // Block transposition: input i < p goes to output q + i, input p + j to j.
    EXPECT_EQ(symmetry(2, 1), SynMorphism(3, 3, {L(1), L(2), L(0)}));
    for (std::size_t p = 0; p <= 4; ++p)
        for (std::size_t q = 0; q <= 4; ++q)
            EXPECT_EQ(then(symmetry(p, q), symmetry(q, p)), identity(p + q));
}

TEST(Then, Examples) {
    EXPECT_EQ(then(generator(), tensor(generator(), identity(1))),
              SynMorphism(1, 3, {N(N(L(0), L(1)), L(2))}));
    EXPECT_EQ(then(identity(1), generator()), generator());
    EXPECT_EQ(then(generator(), symmetry(1, 1)), SynMorphism(1, 2, {N(L(1), L(0))}));
    EXPECT_THROW(then(generator(), generator()), ContractError);
}

TEST(Tensor, Examples) {
    EXPECT_EQ(tensor(generator(), identity(0)), generator());
    EXPECT_EQ(tensor(generator(), generator()), SynMorphism(2, 4, {N(L(0), L(1)), N(L(2), L(3))}));
    EXPECT_EQ(tensor(identity(1), identity(1)), identity(2));
}

TEST(Then, UnitLawOnRandomMorphisms) {
    Rng rng(21);
    for (int s = 0; s < 500; ++s) {
        std::size_t m = uniform(rng, 0, 4);
        std::size_t n = m == 0 ? 0 : m + uniform(rng, 0, 4);
        SynMorphism f = random_syn(rng, m, n);
        EXPECT_EQ(then(f, identity(n)), f);
        EXPECT_EQ(then(identity(m), f), f);
        EXPECT_EQ(f.node_count(), n - m);
    }
}

TEST(Permutation, MatchesTargets) {
    std::vector<std::size_t> perm{2, 0, 1};
    SynMorphism p = permutation(perm);
    EXPECT_EQ(p, SynMorphism(3, 3, {L(2), L(0), L(1)}));
    std::vector<std::size_t> inverse{1, 2, 0};
    EXPECT_EQ(then(p, permutation(inverse)), identity(3));
    EXPECT_EQ(permutation(std::vector<std::size_t>{1, 0}), symmetry(1, 1));
}

TEST(EnumerateSyn, Examples) {
    EXPECT_EQ(enumerate_syn(1, 2).size(), 2u);
    EXPECT_EQ(enumerate_syn(1, 3).size(), 12u);
    EXPECT_EQ(enumerate_syn(0, 0).size(), 1u);
    EXPECT_TRUE(enumerate_syn(0, 1).empty());
    EXPECT_TRUE(enumerate_syn(2, 1).empty());
}

TEST(EnumerateSyn, CountsMatchFiberSum) {
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 5; ++n) {
            auto all = enumerate_syn(m, n);
            EXPECT_EQ(all.size(), syn_count(m, n)) << m << " " << n;
            std::set<SynMorphism> distinct(all.begin(), all.end());
            EXPECT_EQ(distinct.size(), all.size());
            EXPECT_EQ(enumerate_syn(m, n), all);
        }
}

TEST(TreeShapes, Catalan) {
    for (std::size_t k = 1; k <= 7; ++k) EXPECT_EQ(tree_shapes(k).size(), oracle::catalan(k - 1));
}

TEST(FromGenerators, RebuildsEveryMorphism) {
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 4; ++n)
            for (const SynMorphism& f : enumerate_syn(m, n)) EXPECT_EQ(from_generators(f), f);
}

TEST(FromGenerators, RebuildsRandomLargerMorphisms) {
    Rng rng(99);
    for (int s = 0; s < 200; ++s) {
        std::size_t m = uniform(rng, 1, 5);
        SynMorphism f = random_syn(rng, m, m + uniform(rng, 0, 5));
        EXPECT_EQ(from_generators(f), f);
    }
}
