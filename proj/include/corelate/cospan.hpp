#pragma once

// Cospans of finite sets m -a-> apex <-b- n up to apex isomorphism, composed
// by pushout. Unreached apex points are kept (as a count), so the closed
// cospan 0 -> 1 <- 0 stays distinct from the identity on 0.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "corelate/ancestry.hpp"
#include "corelate/errors.hpp"
#include "corelate/fincorel.hpp"
#include "corelate/finset.hpp"
#include "corelate/syn.hpp"

namespace corelate {

class Cospan {
public:
    Cospan() = default;

    /// Any pair of legs into a common apex; the stored form is canonical:
    /// reached apex points numbered by first occurrence along a then b,
    /// unreached points last.
    Cospan(const FinFunction& a, const FinFunction& b) {
        if (a.cod() != b.cod())
            throw ContractError("Cospan: legs have different apexes (" + std::to_string(a.cod()) +
                                " vs " + std::to_string(b.cod()) + ")");
        apex_ = a.cod();
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> renamed(apex_, unset);
        std::size_t next = 0;
        auto relabel = [&](const FinFunction& leg) {
            std::vector<std::size_t> t(leg.dom());
            for (std::size_t k = 0; k < leg.dom(); ++k) {
                std::size_t& r = renamed[leg(k)];
                if (r == unset) r = next++;
                t[k] = r;
            }
            return FinFunction(apex_, std::move(t));
        };
        a_ = relabel(a);
        b_ = relabel(b);
        reached_ = next;
    }

    std::size_t dom() const { return a_.dom(); }
    std::size_t cod() const { return b_.dom(); }
    std::size_t apex() const { return apex_; }
    const FinFunction& left() const { return a_; }
    const FinFunction& right() const { return b_; }

    std::size_t unreached() const { return apex_ - reached_; }
    bool is_jointly_epic() const { return reached_ == apex_; }

    friend bool operator==(const Cospan&, const Cospan&) = default;
    friend auto operator<=>(const Cospan&, const Cospan&) = default;

private:
    std::size_t apex_ = 0;
    std::size_t reached_ = 0;
    FinFunction a_;
    FinFunction b_;
};

inline Cospan iota(const FinFunction& f) { return {f, FinFunction::identity(f.cod())}; }

inline Cospan cospan_identity(std::size_t k) { return iota(FinFunction::identity(k)); }

/// Permutation cospan p + q -> q + p with apex p + q.
inline Cospan cospan_symmetry(std::size_t p, std::size_t q) {
    std::vector<std::size_t> b(p + q);
    for (std::size_t i = 0; i < p; ++i) b[q + i] = i;
    for (std::size_t j = 0; j < q; ++j) b[j] = p + j;
    return {FinFunction::identity(p + q), FinFunction(p + q, std::move(b))};
}

inline Cospan cospan_compose(const Cospan& c1, const Cospan& c2) {
    if (c1.cod() != c2.dom())
        throw ContractError("cospan_compose: codomain " + std::to_string(c1.cod()) +
                            " does not match domain " + std::to_string(c2.dom()));
    Pushout po = pushout(c1.right(), c2.left());
    return {compose_fn(c1.left(), po.inj_f), compose_fn(c2.right(), po.inj_g)};
}

inline Cospan cospan_tensor(const Cospan& c1, const Cospan& c2) {
    return {coproduct_fn(c1.left(), c2.left()), coproduct_fn(c1.right(), c2.right())};
}

// Canonical special commutative Frobenius structure on 1.
inline Cospan mu_c() { return {FinFunction(1, {0, 0}), FinFunction(1, {0})}; }
inline Cospan eta_c() { return {FinFunction::initial(1), FinFunction(1, {0})}; }
inline Cospan delta_c() { return {FinFunction(1, {0}), FinFunction(1, {0, 0})}; }
inline Cospan eps_c() { return {FinFunction(1, {0}), FinFunction::initial(1)}; }

/// Kernel of the copairing [a, b] as a corelation m -> n.
inline Corelation pi_bar(const Cospan& c) {
    return {c.dom(), c.cod(), kernel_partition({c.left(), c.right()})};
}

/// Jointly epic cospan onto the classes of R.
inline Cospan corelation_to_cospan(const Corelation& r) {
    const Partition& p = r.partition();
    std::vector<std::size_t> a(r.dom()), b(r.cod());
    for (std::size_t i = 0; i < r.dom(); ++i) a[i] = p.class_of(r.input(i));
    for (std::size_t j = 0; j < r.cod(); ++j) b[j] = p.class_of(r.output(j));
    return {FinFunction(p.num_classes(), std::move(a)), FinFunction(p.num_classes(), std::move(b))};
}

/// Realization of a forest: one apex point per tree, each leaf mapped to its tree.
inline Cospan real(const SynMorphism& f) {
    return {FinFunction::identity(f.dom()), cocom_of(f).phi()};
}

/// All canonical cospans m -> n with apex at most max_apex, sorted.
inline std::vector<Cospan> enumerate_cospans(std::size_t m, std::size_t n, std::size_t max_apex) {
    std::set<Cospan> seen;
    for (std::size_t apex = 0; apex <= max_apex; ++apex)
        for (const FinFunction& a : all_functions(m, apex))
            for (const FinFunction& b : all_functions(n, apex)) seen.emplace(a, b);
    return {seen.begin(), seen.end()};
}

struct AxiomCheck {
    std::string name;
    bool holds = false;
    bool expected = true;
};

/// Evaluates every SCFA equation for (mu, eta, delta, eps) on 1 as canonical
/// equalities, plus the extra law both in cospans (expected to fail) and after
/// the ancestry collapse (expected to hold).
inline std::vector<AxiomCheck> check_scfa() {
    const Cospan mu = mu_c(), eta = eta_c(), delta = delta_c(), eps = eps_c();
    const Cospan id1 = cospan_identity(1), id0 = cospan_identity(0);
    const Cospan sigma = cospan_symmetry(1, 1);
    auto seq = [](const Cospan& x, const Cospan& y) { return cospan_compose(x, y); };
    auto par = [](const Cospan& x, const Cospan& y) { return cospan_tensor(x, y); };

    const Cospan extra = seq(eta, eps);
    return {
        {"associativity", seq(par(mu, id1), mu) == seq(par(id1, mu), mu)},
        {"left unit", seq(par(eta, id1), mu) == id1},
        {"right unit", seq(par(id1, eta), mu) == id1},
        {"commutativity", seq(sigma, mu) == mu},
        {"coassociativity", seq(delta, par(delta, id1)) == seq(delta, par(id1, delta))},
        {"left counit", seq(delta, par(eps, id1)) == id1},
        {"right counit", seq(delta, par(id1, eps)) == id1},
        {"cocommutativity", seq(delta, sigma) == delta},
        {"frobenius (left)", seq(par(id1, delta), par(mu, id1)) == seq(mu, delta)},
        {"frobenius (right)", seq(par(delta, id1), par(id1, mu)) == seq(mu, delta)},
        {"special", seq(delta, mu) == id1},
        {"extra law in cospans", extra == id0, false},
        {"extra law after collapse", pi_bar(extra) == pi_bar(id0)},
    };
}

/// Default ceiling on m + n for quotient_card.
inline constexpr std::size_t kDefaultQuotientBound = 6;

/// Cospans reachable from a fixed generating set by `depth` rounds of
/// composing or tensoring with a generator on either side, keeping only
/// boundaries <= arity_cap and apexes <= arity_cap + 1. Generators: iota of
/// every function a -> b with a, b <= 2, the four Frobenius cospans, and the
/// block symmetries with p + q <= arity_cap.
class CospanClosure {
public:
    CospanClosure(std::size_t arity_cap, std::size_t depth) : cap_(arity_cap) {
        std::vector<Cospan> base;
        for (std::size_t a = 0; a <= 2; ++a)
            for (std::size_t b = 0; b <= 2; ++b)
                for (const FinFunction& f : all_functions(a, b)) base.push_back(iota(f));
        for (const Cospan& g : {mu_c(), eta_c(), delta_c(), eps_c()}) base.push_back(g);
        for (std::size_t p = 0; p <= cap_; ++p)
            for (std::size_t q = 0; p + q <= cap_; ++q) base.push_back(cospan_symmetry(p, q));

        std::vector<Cospan> frontier;
        for (const Cospan& g : base)
            if (admissible(g) && members_.insert(g).second) frontier.push_back(g);
        generators_.assign(members_.begin(), members_.end());

        for (std::size_t round = 0; round < depth && !frontier.empty(); ++round) {
            std::vector<Cospan> next;
            auto offer = [&](Cospan c) {
                if (admissible(c) && members_.insert(c).second) next.push_back(std::move(c));
            };
            for (const Cospan& x : frontier)
                for (const Cospan& g : generators_) {
                    if (x.cod() == g.dom()) offer(cospan_compose(x, g));
                    if (g.cod() == x.dom()) offer(cospan_compose(g, x));
                    if (x.dom() + g.dom() <= cap_ && x.cod() + g.cod() <= cap_) {
                        offer(cospan_tensor(x, g));
                        offer(cospan_tensor(g, x));
                    }
                }
            frontier = std::move(next);
        }
    }

    std::size_t arity_cap() const { return cap_; }
    const std::set<Cospan>& members() const { return members_; }

    /// Distinct collapses pi_bar(c) over members c: m -> n.
    std::set<Corelation> collapses(std::size_t m, std::size_t n) const {
        std::set<Corelation> out;
        for (const Cospan& c : members_)
            if (c.dom() == m && c.cod() == n) out.insert(pi_bar(c));
        return out;
    }

private:
    bool admissible(const Cospan& c) const {
        return c.dom() <= cap_ && c.cod() <= cap_ && c.apex() <= cap_ + 1;
    }

    std::size_t cap_;
    std::set<Cospan> members_;
    std::vector<Cospan> generators_;
};

/// Number of distinct corelations m -> n obtained as pi_bar of generated
/// cospans together with the jointly epic representatives of every corelation.
inline std::size_t quotient_card(std::size_t m, std::size_t n, const CospanClosure& closure) {
    detail::require(m <= closure.arity_cap() && n <= closure.arity_cap(),
                    "quotient_card: boundary exceeds the closure's arity cap");
    std::set<Corelation> seen = closure.collapses(m, n);
    for (const Corelation& r : enumerate_corel(m, n)) seen.insert(pi_bar(corelation_to_cospan(r)));
    return seen.size();
}

inline std::size_t quotient_card(std::size_t m, std::size_t n, std::size_t depth,
                                 std::size_t bound = kDefaultQuotientBound) {
    if (m + n > bound)
        throw ResourceError("quotient_card: m + n = " + std::to_string(m + n) +
                            " exceeds bound " + std::to_string(bound));
    return quotient_card(m, n, CospanClosure(std::max<std::size_t>(m + n, 2), depth));
}

} // namespace corelate
