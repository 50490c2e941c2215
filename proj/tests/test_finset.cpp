#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "corelate/finset.hpp"
#include "corelate/oracles.hpp"
#include "corelate/random.hpp"

using namespace corelate;

namespace {

// Pointwise composite, written out independently of compose_fn.
std::vector<std::size_t> pointwise(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
    std::vector<std::size_t> out;
    for (std::size_t v : f) out.push_back(g[v]);
    return out;
}

// Pushout apex size as the number of connected components of the graph on
// N + N' with an edge f(y) -- g(y) for each y, found by breadth-first search.
std::size_t components(const FinFunction& f, const FinFunction& g) {
    const std::size_t a = f.cod(), total = f.cod() + g.cod();
    std::vector<std::vector<std::size_t>> adj(total);
    for (std::size_t y = 0; y < f.dom(); ++y) {
        adj[f(y)].push_back(a + g(y));
        adj[a + g(y)].push_back(f(y));
    }
    std::vector<bool> seen(total, false);
    std::size_t count = 0;
    for (std::size_t s = 0; s < total; ++s) {
        if (seen[s]) continue;
        ++count;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
    }
    return count;
}

} // namespace

TEST(FinFunction, RejectsOutOfRangeEntries) {
    EXPECT_THROW(FinFunction(2, {0, 2}), ContractError);
    EXPECT_THROW(FinFunction(0, {0}), ContractError);
    EXPECT_NO_THROW(FinFunction(0, {}));
}

TEST(FinFunction, Basics) {
    FinFunction f(3, {2, 0, 2});
    EXPECT_EQ(f.dom(), 3u);
    EXPECT_EQ(f.cod(), 3u);
    EXPECT_EQ(f.image_size(), 2u);
    EXPECT_FALSE(f.is_surjective());
    EXPECT_TRUE(FinFunction::identity(4).is_surjective());
    EXPECT_EQ(FinFunction::constant(3, 2, 1), FinFunction(2, {1, 1, 1}));
    EXPECT_EQ(FinFunction::initial(5).dom(), 0u);
}

TEST(ComposeFn, IdentityIsNeutral) {
    FinFunction g(4, {3, 0, 0});
    EXPECT_EQ(compose_fn(FinFunction::identity(3), g), g);
    EXPECT_EQ(compose_fn(g, FinFunction::identity(4)), g);
}

TEST(ComposeFn, SwapIsAnInvolution) {
    FinFunction swap(2, {1, 0});
    EXPECT_EQ(compose_fn(swap, swap), FinFunction::identity(2));
}

TEST(ComposeFn, MatchesPointwiseEvaluation) {
    FinFunction f(2, {0, 1, 1});
    FinFunction swap(2, {1, 0});
    EXPECT_EQ(compose_fn(f, swap).table(), pointwise(f.table(), swap.table()));
    EXPECT_EQ(compose_fn(f, swap), FinFunction(2, {1, 0, 0}));

    Rng rng(7);
    for (int s = 0; s < 500; ++s) {
        std::size_t a = uniform(rng, 0, 5), b = uniform(rng, 1, 5), c = uniform(rng, 1, 5);
        FinFunction x = random_function(rng, a, b), y = random_function(rng, b, c);
        EXPECT_EQ(compose_fn(x, y).table(), pointwise(x.table(), y.table()));
    }
}

TEST(ComposeFn, RejectsMismatch) {
    EXPECT_THROW(compose_fn(FinFunction(2, {0}), FinFunction(2, {0, 1, 1})), ContractError);
}

TEST(CoproductFn, ShiftsSecondBlock) {
    EXPECT_EQ(coproduct_fn(FinFunction(2, {1, 0}), FinFunction(3, {2})), FinFunction(5, {1, 0, 4}));
}

TEST(Partition, CanonicalLabels) {
    Partition p = Partition::from_labels(std::vector<std::size_t>{7, 3, 7, 9});
    EXPECT_EQ(p.class_ids(), (std::vector<std::size_t>{0, 1, 0, 2}));
    EXPECT_EQ(p.num_classes(), 3u);
    EXPECT_TRUE(p.same_class(0, 2));
    EXPECT_FALSE(p.same_class(0, 1));
}

TEST(Partition, EqualityIsEquivalenceRelationEquality) {
    auto a = Partition::from_labels(std::vector<std::size_t>{5, 5, 1});
    auto b = Partition::from_classes(3, {{2}, {1, 0}});
    EXPECT_EQ(a, b);
    EXPECT_NE(a, Partition::discrete(3));
}

TEST(Partition, FromClassesValidates) {
    EXPECT_THROW(Partition::from_classes(3, {{0, 1}}), ContractError);
    EXPECT_THROW(Partition::from_classes(2, {{0, 1}, {1}}), ContractError);
    EXPECT_THROW(Partition::from_classes(2, {{0, 2}}), ContractError);
}

TEST(Partition, CanonicalLabelingInvariantOnRandomInputs) {
    Rng rng(3);
    for (int s = 0; s < 300; ++s) {
        std::size_t n = uniform(rng, 0, 8);
        std::vector<std::size_t> labels(n);
        for (auto& l : labels) l = uniform(rng, 0, 20);
        Partition p = Partition::from_labels(labels);
        std::size_t seen = 0;
        for (std::size_t id : p.class_ids()) {
            ASSERT_LE(id, seen);
            if (id == seen) ++seen;
        }
        EXPECT_EQ(seen, p.num_classes());
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) EXPECT_EQ(p.same_class(x, y), labels[x] == labels[y]);
    }
}

TEST(UnionFind, MergesAndReports) {
    UnionFind uf(5);
    EXPECT_TRUE(uf.unite(0, 3));
    EXPECT_TRUE(uf.unite(3, 4));
    EXPECT_FALSE(uf.unite(4, 0));
    EXPECT_EQ(uf.partition(), Partition::from_classes(5, {{0, 3, 4}, {1}, {2}}));
    std::vector<std::size_t> sub{4, 1, 0};
    EXPECT_EQ(uf.partition_of(sub), Partition::from_classes(3, {{0, 2}, {1}}));
}

TEST(Pushout, OverEmptySpanIsCoproduct) {
    Pushout po = pushout(FinFunction::initial(2), FinFunction::initial(3));
    EXPECT_EQ(po.apex, 5u);
    EXPECT_EQ(po.inj_f, FinFunction(5, {0, 1}));
    EXPECT_EQ(po.inj_g, FinFunction(5, {2, 3, 4}));
}

TEST(Pushout, OneMerge) {
    Pushout po = pushout(FinFunction(1, {0}), FinFunction(2, {0}));
    EXPECT_EQ(po.apex, components(FinFunction(1, {0}), FinFunction(2, {0})));
    EXPECT_EQ(po.apex, 2u);
}

TEST(Pushout, IdentitySpan) {
    Pushout po = pushout(FinFunction::identity(4), FinFunction::identity(4));
    EXPECT_EQ(po.apex, 4u);
    EXPECT_EQ(po.inj_f, FinFunction::identity(4));
    EXPECT_EQ(po.inj_g, FinFunction::identity(4));
}

TEST(Pushout, RejectsMismatchedSources) {
    EXPECT_THROW(pushout(FinFunction(2, {0}), FinFunction(2, {0, 1})), ContractError);
}

TEST(Pushout, SquareCommutesAndIsUniversal) {
    // Exhaustive over spans with all sets of size <= 2 (Y <= 2, N, N' <= 2),
    // testing the universal property against every cocone into a set of size <= 3.
    for (std::size_t y = 0; y <= 2; ++y)
        for (std::size_t a = 0; a <= 2; ++a)
            for (std::size_t b = 0; b <= 2; ++b)
                for (const FinFunction& f : all_functions(y, a))
                    for (const FinFunction& g : all_functions(y, b)) {
                        Pushout po = pushout(f, g);
                        ASSERT_EQ(compose_fn(f, po.inj_f), compose_fn(g, po.inj_g));
                        ASSERT_EQ(po.apex, components(f, g));
                        // Jointly surjective injections.
                        std::set<std::size_t> hit;
                        for (std::size_t v : po.inj_f.table()) hit.insert(v);
                        for (std::size_t v : po.inj_g.table()) hit.insert(v);
                        ASSERT_EQ(hit.size(), po.apex);
                        for (std::size_t z = 0; z <= 3; ++z)
                            for (const FinFunction& p : all_functions(a, z))
                                for (const FinFunction& q : all_functions(b, z)) {
                                    if (compose_fn(f, p) != compose_fn(g, q)) continue;
                                    // Exactly one mediating map.
                                    std::size_t mediators = 0;
                                    for (const FinFunction& u : all_functions(po.apex, z))
                                        if (compose_fn(po.inj_f, u) == p && compose_fn(po.inj_g, u) == q)
                                            ++mediators;
                                    ASSERT_EQ(mediators, 1u);
                                }
                    }
}

TEST(Pushout, SymmetricInItsLegs) {
    Rng rng(11);
    for (int s = 0; s < 300; ++s) {
        std::size_t y = uniform(rng, 0, 4), a = uniform(rng, 1, 4), b = uniform(rng, 1, 4);
        FinFunction f = random_function(rng, y, a), g = random_function(rng, y, b);
        Pushout p1 = pushout(f, g), p2 = pushout(g, f);
        EXPECT_EQ(p1.apex, p2.apex);
        EXPECT_EQ(p1.apex, components(f, g));
        // The two apexes are related by a bijection matching the injections.
        std::vector<std::size_t> bij(p1.apex, p1.apex);
        bool ok = true;
        auto link = [&](std::size_t from, std::size_t to) {
            if (bij[from] == p1.apex) bij[from] = to;
            ok = ok && bij[from] == to;
        };
        for (std::size_t k = 0; k < a; ++k) link(p1.inj_f(k), p2.inj_g(k));
        for (std::size_t k = 0; k < b; ++k) link(p1.inj_g(k), p2.inj_f(k));
        EXPECT_TRUE(ok);
    }
}

TEST(KernelPartition, Examples) {
    EXPECT_EQ(kernel_partition({FinFunction(4, {2, 0, 3})}), Partition::discrete(3));
    EXPECT_EQ(kernel_partition({FinFunction(1, {0}), FinFunction(1, {0})}),
              Partition::from_classes(2, {{0, 1}}));
    EXPECT_EQ(kernel_partition({FinFunction(2, {0, 1}), FinFunction(2, {1})}),
              Partition::from_classes(3, {{0}, {1, 2}}));
}

TEST(KernelPartition, SameImageRelation) {
    Rng rng(5);
    for (int s = 0; s < 300; ++s) {
        std::size_t cod = uniform(rng, 1, 4);
        FinFunction a = random_function(rng, uniform(rng, 0, 4), cod);
        FinFunction b = random_function(rng, uniform(rng, 0, 4), cod);
        Partition k = kernel_partition({a, b});
        std::vector<std::size_t> image = a.table();
        image.insert(image.end(), b.table().begin(), b.table().end());
        ASSERT_EQ(k.size(), image.size());
        for (std::size_t x = 0; x < image.size(); ++x)
            for (std::size_t y = 0; y < image.size(); ++y)
                EXPECT_EQ(k.same_class(x, y), image[x] == image[y]);
    }
}

TEST(KernelPartition, RejectsMixedCodomains) {
    EXPECT_THROW(kernel_partition({FinFunction(2, {0}), FinFunction(3, {0})}), ContractError);
}

TEST(FiberNonempty, Examples) {
    EXPECT_EQ(fiber_nonempty_functions(2, 1).size(), 1u);
    EXPECT_EQ(fiber_nonempty_functions(0, 0).size(), 1u);
    EXPECT_EQ(fiber_nonempty_functions(3, 2).size(), 6u);
    EXPECT_TRUE(fiber_nonempty_functions(1, 2).empty());
    EXPECT_TRUE(fiber_nonempty_functions(2, 0).empty());
}

TEST(FiberNonempty, MatchesFilteredTablesAndIsSorted) {
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t m = 0; m <= 4; ++m) {
            auto fs = fiber_nonempty_functions(n, m);
            EXPECT_EQ(fs.size(), oracle::surjection_count(n, m)) << n << " " << m;
            EXPECT_TRUE(std::is_sorted(fs.begin(), fs.end()));
            std::set<FinFunction> distinct(fs.begin(), fs.end());
            EXPECT_EQ(distinct.size(), fs.size());
            for (const auto& f : fs) EXPECT_TRUE(f.is_surjective());
        }
}

TEST(AllFunctions, Counts) {
    EXPECT_EQ(all_functions(3, 2).size(), 8u);
    EXPECT_EQ(all_functions(0, 0).size(), 1u);
    EXPECT_EQ(all_functions(2, 0).size(), 0u);
}
