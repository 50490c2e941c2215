#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "corelate/cospan.hpp"
#include "corelate/oracles.hpp"
#include "corelate/random.hpp"

using namespace corelate;

namespace {

Corelation corel(std::size_t m, std::size_t n, std::vector<std::vector<std::size_t>> classes) {
    return {m, n, Partition::from_classes(m + n, classes)};
}

// Kernel of [a, b] computed pairwise, without any relabeling helper.
bool same_kernel(const Cospan& c, const Corelation& r) {
    const std::size_t m = c.dom(), n = c.cod();
    auto image = [&](std::size_t e) { return e < m ? c.left()(e) : c.right()(e - m); };
    for (std::size_t x = 0; x < m + n; ++x)
        for (std::size_t y = 0; y < m + n; ++y)
            if ((image(x) == image(y)) != r.partition().same_class(x, y)) return false;
    return true;
}

} // namespace

TEST(Cospan, CanonicalFormForgetsApexLabels) {
    Cospan a(FinFunction(3, {2, 0}), FinFunction(3, {0}));
    Cospan b(FinFunction(3, {1, 2}), FinFunction(3, {2}));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.left(), FinFunction(3, {0, 1}));
    EXPECT_EQ(a.right(), FinFunction(3, {1}));
    EXPECT_EQ(a.unreached(), 1u);
    EXPECT_FALSE(a.is_jointly_epic());
}

TEST(Cospan, InvariantUnderApexPermutation) {
    Rng rng(17);
    for (int s = 0; s < 1000; ++s) {
        std::size_t m = uniform(rng, 0, 4), n = uniform(rng, 0, 4), apex = uniform(rng, 1, 5);
        FinFunction a = random_function(rng, m, apex), b = random_function(rng, n, apex);
        std::vector<std::size_t> perm(apex);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        FinFunction p(apex, perm);
        EXPECT_EQ(Cospan(a, b), Cospan(compose_fn(a, p), compose_fn(b, p)));
    }
}

TEST(Cospan, DistinguishesUnreachedPoints) {
    EXPECT_NE(Cospan(FinFunction::initial(1), FinFunction::initial(1)), cospan_identity(0));
    EXPECT_NE(Cospan(FinFunction(2, {0}), FinFunction(2, {0})), cospan_identity(1));
}

TEST(Cospan, RejectsMismatchedApexes) {
    EXPECT_THROW(Cospan(FinFunction(2, {0}), FinFunction(3, {0})), ContractError);
}

TEST(CospanCompose, Examples) {
    Cospan c(FinFunction(2, {0, 1}), FinFunction(2, {1}));
    EXPECT_EQ(cospan_compose(cospan_identity(2), c), c);
    EXPECT_EQ(cospan_compose(c, cospan_identity(1)), c);
    EXPECT_EQ(cospan_compose(delta_c(), mu_c()), iota(FinFunction::identity(1)));
    const Cospan extra = cospan_compose(eta_c(), eps_c());
    EXPECT_EQ(extra, Cospan(FinFunction::initial(1), FinFunction::initial(1)));
    EXPECT_EQ(extra.apex(), 1u);
    EXPECT_NE(extra, cospan_identity(0));
    EXPECT_THROW(cospan_compose(c, c), ContractError);
}

TEST(Iota, PreservesIdentityAndComposition) {
    EXPECT_EQ(iota(FinFunction::identity(3)), cospan_identity(3));
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b)
            for (std::size_t c = 0; c <= 3; ++c)
                for (const FinFunction& f : all_functions(a, b))
                    for (const FinFunction& g : all_functions(b, c))
                        ASSERT_EQ(iota(compose_fn(f, g)), cospan_compose(iota(f), iota(g)));
}

TEST(CospanTensor, Examples) {
    const Cospan bang = iota(FinFunction::initial(1));
    const Cospan both = cospan_tensor(bang, bang);
    EXPECT_EQ(both.dom(), 0u);
    EXPECT_EQ(both.cod(), 2u);
    EXPECT_EQ(both.apex(), 2u);
    EXPECT_EQ(both, Cospan(FinFunction::initial(2), FinFunction(2, {0, 1})));
}

TEST(CospanSymmetry, Involution) {
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; q <= 3; ++q)
            EXPECT_EQ(cospan_compose(cospan_symmetry(p, q), cospan_symmetry(q, p)), cospan_identity(p + q));
}

TEST(Frobenius, Generators) {
    EXPECT_EQ(delta_c(), real(generator()));
    EXPECT_EQ(pi_bar(mu_c()), corel(2, 1, {{0, 1, 2}}));
    EXPECT_EQ(eps_c().right().dom(), 0u);
    EXPECT_EQ(eta_c().left().dom(), 0u);
}

TEST(CheckScfa, AllDistinctionsAsExpected) {
    const auto results = check_scfa();
    ASSERT_EQ(results.size(), 13u);
    std::size_t holding = 0;
    for (const AxiomCheck& a : results) {
        EXPECT_EQ(a.holds, a.expected) << a.name;
        holding += a.holds;
    }
    EXPECT_EQ(holding, 12u);
    EXPECT_EQ(results[11].name, "extra law in cospans");
    EXPECT_FALSE(results[11].holds);
}

TEST(PiBar, Examples) {
    EXPECT_EQ(pi_bar(iota(FinFunction::identity(2))), corel_identity(2));
    for (std::size_t total = 0; total <= 6; ++total)
        for (std::size_t m = 0; m <= total; ++m)
            for (const Corelation& r : enumerate_corel(m, total - m))
                ASSERT_EQ(pi_bar(corelation_to_cospan(r)), r);
}

TEST(PiBar, IsTheKernelOfTheCopairing) {
    Rng rng(23);
    for (int s = 0; s < 1000; ++s) {
        const Cospan c = random_cospan(rng, uniform(rng, 0, 4), uniform(rng, 0, 4), 4);
        EXPECT_TRUE(same_kernel(c, pi_bar(c)));
    }
}

TEST(PiBar, RespectsComposition) {
    Rng rng(29);
    for (int s = 0; s < 3000; ++s) {
        std::size_t a = uniform(rng, 0, 4), b = uniform(rng, 0, 4), c = uniform(rng, 0, 4);
        Cospan x = random_cospan(rng, a, b, 4), y = random_cospan(rng, b, c, 4);
        ASSERT_EQ(pi_bar(cospan_compose(x, y)), corel_compose(pi_bar(x), pi_bar(y)));
    }
}

TEST(CorelationToCospan, Examples) {
    EXPECT_EQ(corelation_to_cospan(corel_identity(2)), cospan_identity(2));
    EXPECT_EQ(corelation_to_cospan(corel(1, 2, {{0, 1, 2}})), delta_c());
    const Cospan split = corelation_to_cospan(corel(1, 1, {{0}, {1}}));
    EXPECT_EQ(split.apex(), 2u);
    EXPECT_EQ(split.left(), FinFunction(2, {0}));
    EXPECT_EQ(split.right(), FinFunction(2, {1}));
    EXPECT_TRUE(split.is_jointly_epic());
}

TEST(Real, Examples) {
    EXPECT_EQ(real(generator()), delta_c());
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(real(identity(k)), cospan_identity(k));
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 4; ++n)
            for (const SynMorphism& f : enumerate_syn(m, n)) ASSERT_EQ(pi_bar(real(f)), pi(f));
}

TEST(EnumerateCospans, CountsCanonicalForms) {
    // Cospans 1 -> 0 with apex <= 2: apex 1 (a = [0]) and apex 2 (one unreached).
    EXPECT_EQ(enumerate_cospans(1, 0, 2).size(), 2u);
    // 0 -> 0: apex 0, 1, 2 of unreached points.
    EXPECT_EQ(enumerate_cospans(0, 0, 2).size(), 3u);
    const auto all = enumerate_cospans(2, 2, 3);
    std::set<Cospan> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
}

TEST(QuotientCard, Examples) {
    EXPECT_EQ(quotient_card(1, 1, 4), 2u);
    EXPECT_EQ(quotient_card(2, 1, 4), 5u);
    EXPECT_EQ(quotient_card(0, 0, 4), 1u);
    for (std::size_t total = 0; total <= 4; ++total)
        for (std::size_t m = 0; m <= total; ++m) EXPECT_EQ(quotient_card(m, total - m, 4), oracle::bell(total));
}

TEST(QuotientCard, BoundRaisesResourceError) {
    EXPECT_THROW(quotient_card(4, 3, 1), ResourceError);
    EXPECT_THROW(quotient_card(2, 2, 1, 3), ResourceError);
}

TEST(CospanClosure, GeneratorsAloneReachEveryCorelationAtDepthSix) {
    const CospanClosure closure(4, 6);
    for (std::size_t total = 0; total <= 4; ++total)
        for (std::size_t m = 0; m <= total; ++m)
            EXPECT_EQ(closure.collapses(m, total - m).size(), oracle::bell(total)) << m << " " << total - m;
}

TEST(CospanClosure, DepthFourMissesOneCorelationEachWay) {
    const CospanClosure closure(4, 4);
    const auto out = closure.collapses(0, 4);
    EXPECT_EQ(out.size(), 14u);
    EXPECT_FALSE(out.contains(corel(0, 4, {{0, 2}, {1, 3}})));
    const auto in = closure.collapses(4, 0);
    EXPECT_EQ(in.size(), 14u);
    EXPECT_FALSE(in.contains(corel(4, 0, {{0, 2}, {1, 3}})));
    for (std::size_t total = 0; total <= 3; ++total)
        for (std::size_t m = 0; m <= total; ++m)
            EXPECT_EQ(closure.collapses(m, total - m).size(), oracle::bell(total));
}
