#pragma once

// Verification suites. Each suite evaluates a family of laws, exhaustively
// at small sizes and on seeded random instances beyond, and appends to a
// CheckReport. The CLI `check` verb and the acceptance binary both run these.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corelate/ancestry.hpp"
#include "corelate/cospan.hpp"
#include "corelate/fincorel.hpp"
#include "corelate/finset.hpp"
#include "corelate/logic.hpp"
#include "corelate/oracles.hpp"
#include "corelate/random.hpp"
#include "corelate/serialize.hpp"
#include "corelate/syn.hpp"

namespace corelate {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::string suite;
    std::vector<Check> checks;
    /// Set when a resource ceiling stopped the suite early.
    std::optional<std::string> aborted;

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }

    bool passed() const {
        if (aborted) return false;
        for (const Check& c : checks)
            if (!c.passed) return false;
        return true;
    }

    /// 0 all pass, 1 some check failed, 4 stopped by a resource ceiling.
    int exit_status() const {
        if (aborted) return 4;
        return passed() ? 0 : 1;
    }

    Json to_json() const {
        Json arr = Json::array();
        for (const Check& c : checks)
            arr.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
        Json j{{"suite", suite}, {"checks", arr}, {"exit_status", exit_status()}};
        if (aborted) j["aborted"] = *aborted;
        return j;
    }
};

/// Largest exhaustive object size accepted by prop-laws and functoriality;
/// the interchange check grows as the fourth power of the hom-set count.
inline constexpr std::size_t kMaxExhaustivePropBound = 3;

struct SuiteOptions {
    /// Suite-specific size bound; each suite documents its default.
    std::optional<std::size_t> bound;
    std::size_t random_cases = 10000;
    std::uint64_t seed = 1;
    /// Ceiling on m + n for exhaustive corelation enumeration.
    std::size_t enumeration_ceiling = kDefaultCorelBound;
    /// Ceiling on m + n for quotient_card.
    std::size_t quotient_ceiling = kDefaultQuotientBound;
};

namespace detail {

/// Tallies cases of one law and keeps the first counterexample.
class Tally {
public:
    void record(bool ok, const std::function<std::string()>& witness) {
        ++cases_;
        if (!ok && !failure_) failure_ = witness();
        if (!ok) ++failures_;
    }

    void finish(CheckReport& report, std::string name) const {
        std::string detail = std::to_string(cases_) + " cases";
        if (failure_) detail += ", " + std::to_string(failures_) + " failed; first: " + *failure_;
        report.add(std::move(name), !failure_, std::move(detail));
    }

private:
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    std::optional<std::string> failure_;
};

template <class... T>
std::string dump(const T&... xs) {
    std::string out;
    ((out += (out.empty() ? "" : " ; ") + corelate::to_json(xs).dump()), ...);
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// PROP descriptions used by the generic law and functor checkers.

template <class P>
concept PropTheory = requires(const typename P::Morphism& f, std::size_t k, Rng& rng) {
    { P::name } -> std::convertible_to<std::string_view>;
    { P::compose(f, f) } -> std::same_as<typename P::Morphism>;
    { P::tensor(f, f) } -> std::same_as<typename P::Morphism>;
    { P::identity(k) } -> std::same_as<typename P::Morphism>;
    { P::symmetry(k, k) } -> std::same_as<typename P::Morphism>;
    { P::hom(k, k) } -> std::same_as<std::vector<typename P::Morphism>>;
    { P::inhabited(k, k) } -> std::same_as<bool>;
    { P::random(rng, k, k) } -> std::same_as<typename P::Morphism>;
};

struct SynTheory {
    using Morphism = SynMorphism;
    static constexpr std::string_view name = "Syn";
    static Morphism compose(const Morphism& f, const Morphism& g) { return then(f, g); }
    static Morphism tensor(const Morphism& f, const Morphism& g) { return corelate::tensor(f, g); }
    static Morphism identity(std::size_t k) { return corelate::identity(k); }
    static Morphism symmetry(std::size_t p, std::size_t q) { return corelate::symmetry(p, q); }
    static std::vector<Morphism> hom(std::size_t m, std::size_t n) { return enumerate_syn(m, n); }
    static bool inhabited(std::size_t m, std::size_t n) { return n >= m && (m > 0 || n == 0); }
    static Morphism random(Rng& rng, std::size_t m, std::size_t n) { return random_syn(rng, m, n); }
};

struct CorelTheory {
    using Morphism = Corelation;
    static constexpr std::string_view name = "FinCorel";
    static Morphism compose(const Morphism& f, const Morphism& g) { return corel_compose(f, g); }
    static Morphism tensor(const Morphism& f, const Morphism& g) { return corel_tensor(f, g); }
    static Morphism identity(std::size_t k) { return corel_identity(k); }
    static Morphism symmetry(std::size_t p, std::size_t q) { return corel_symmetry(p, q); }
    static std::vector<Morphism> hom(std::size_t m, std::size_t n) { return enumerate_corel(m, n); }
    static bool inhabited(std::size_t, std::size_t) { return true; }
    static Morphism random(Rng& rng, std::size_t m, std::size_t n) { return random_corel(rng, m, n); }
};

struct CospanTheory {
    using Morphism = Cospan;
    static constexpr std::string_view name = "Cospan";
    /// Apex ceiling for exhaustive hom-sets and random instances.
    static constexpr std::size_t kExhaustiveApex = 2;
    static constexpr std::size_t kRandomApex = 5;
    static Morphism compose(const Morphism& f, const Morphism& g) { return cospan_compose(f, g); }
    static Morphism tensor(const Morphism& f, const Morphism& g) { return cospan_tensor(f, g); }
    static Morphism identity(std::size_t k) { return cospan_identity(k); }
    static Morphism symmetry(std::size_t p, std::size_t q) { return cospan_symmetry(p, q); }
    static std::vector<Morphism> hom(std::size_t m, std::size_t n) {
        return enumerate_cospans(m, n, kExhaustiveApex);
    }
    static bool inhabited(std::size_t, std::size_t) { return true; }
    static Morphism random(Rng& rng, std::size_t m, std::size_t n) {
        return random_cospan(rng, m, n, kRandomApex);
    }
};

struct CocomTheory {
    using Morphism = CocomMap;
    static constexpr std::string_view name = "Cocom";
    static Morphism compose(const Morphism& f, const Morphism& g) { return cocom_compose(f, g); }
    static Morphism tensor(const Morphism& f, const Morphism& g) { return cocom_tensor(f, g); }
    static Morphism identity(std::size_t k) { return cocom_identity(k); }
    static Morphism symmetry(std::size_t p, std::size_t q) { return cocom_symmetry(p, q); }
    static std::vector<Morphism> hom(std::size_t m, std::size_t n) { return enumerate_cocom(m, n); }
    static bool inhabited(std::size_t m, std::size_t n) { return n >= m && (m > 0 || n == 0); }
    static Morphism random(Rng& rng, std::size_t m, std::size_t n) { return random_cocom(rng, m, n); }
};

namespace detail {

/// Draws k + 1 object sizes in [0, max] such that consecutive hom-sets are inhabited.
template <PropTheory P>
std::vector<std::size_t> random_chain(Rng& rng, std::size_t k, std::size_t max) {
    while (true) {
        std::vector<std::size_t> dims(k + 1);
        for (auto& d : dims) d = uniform(rng, 0, max);
        bool ok = true;
        for (std::size_t i = 0; i < k; ++i) ok = ok && P::inhabited(dims[i], dims[i + 1]);
        if (ok) return dims;
    }
}

template <PropTheory P>
std::pair<std::size_t, std::size_t> random_dims(Rng& rng, std::size_t max) {
    auto d = random_chain<P>(rng, 1, max);
    return {d[0], d[1]};
}

template <PropTheory P>
using HomTable = std::vector<std::vector<std::vector<typename P::Morphism>>>;

template <PropTheory P>
HomTable<P> hom_table(std::size_t bound) {
    HomTable<P> h(bound + 1, std::vector<std::vector<typename P::Morphism>>(bound + 1));
    for (std::size_t m = 0; m <= bound; ++m)
        for (std::size_t n = 0; n <= bound; ++n) h[m][n] = P::hom(m, n);
    return h;
}

} // namespace detail

/// Associativity, unit laws, tensor associativity and unit, interchange,
/// symmetry naturality and involution: exhaustive over hom-sets with object
/// sizes <= bound, then `cases` random instances with sizes <= random_max.
template <PropTheory P>
void check_prop_laws(CheckReport& report, std::size_t bound, std::size_t cases,
                     std::size_t random_max, Rng& rng) {
    using M = typename P::Morphism;
    const std::string tag = std::string(P::name) + ": ";
    const auto h = detail::hom_table<P>(bound);
    std::vector<const M*> all;
    for (const auto& row : h)
        for (const auto& homset : row)
            for (const M& f : homset) all.push_back(&f);

    detail::Tally assoc, unit, tassoc, tunit, interchange, natural, involution;

    // Exhaustive.
    for (std::size_t a = 0; a <= bound; ++a)
        for (std::size_t b = 0; b <= bound; ++b)
            for (std::size_t c = 0; c <= bound; ++c) {
                for (const M& f : h[a][b])
                    for (const M& g : h[b][c]) {
                        const M fg = P::compose(f, g);
                        for (std::size_t d = 0; d <= bound; ++d)
                            for (const M& k : h[c][d])
                                assoc.record(P::compose(fg, k) == P::compose(f, P::compose(g, k)),
                                             [&] { return detail::dump(f, g, k); });
                    }
            }
    for (const M* f : all) {
        unit.record(P::compose(P::identity(f->dom()), *f) == *f &&
                        P::compose(*f, P::identity(f->cod())) == *f,
                    [&] { return detail::dump(*f); });
        tunit.record(P::tensor(*f, P::identity(0)) == *f && P::tensor(P::identity(0), *f) == *f,
                     [&] { return detail::dump(*f); });
        for (const M* g : all) {
            natural.record(P::compose(P::tensor(*f, *g), P::symmetry(f->cod(), g->cod())) ==
                               P::compose(P::symmetry(f->dom(), g->dom()), P::tensor(*g, *f)),
                           [&] { return detail::dump(*f, *g); });
            const M fg = P::tensor(*f, *g);
            for (const M* k : all)
                tassoc.record(P::tensor(fg, *k) == P::tensor(*f, P::tensor(*g, *k)),
                              [&] { return detail::dump(*f, *g, *k); });
        }
    }
    // Interchange: (f + g) ; (h + k) = (f ; h) + (g ; k).
    for (std::size_t a = 0; a <= bound; ++a)
        for (std::size_t b = 0; b <= bound; ++b)
            for (std::size_t c = 0; c <= bound; ++c)
                for (const M& f : h[a][b])
                    for (const M& hh : h[b][c]) {
                        const M fh = P::compose(f, hh);
                        for (std::size_t d = 0; d <= bound; ++d)
                            for (std::size_t e = 0; e <= bound; ++e)
                                for (std::size_t x = 0; x <= bound; ++x)
                                    for (const M& g : h[d][e])
                                        for (const M& k : h[e][x])
                                            interchange.record(
                                                P::compose(P::tensor(f, g), P::tensor(hh, k)) ==
                                                    P::tensor(fh, P::compose(g, k)),
                                                [&] { return detail::dump(f, g, hh, k); });
                    }
    for (std::size_t p = 0; p <= bound; ++p)
        for (std::size_t q = 0; q <= bound; ++q)
            involution.record(P::compose(P::symmetry(p, q), P::symmetry(q, p)) == P::identity(p + q),
                              [&] { return "p=" + std::to_string(p) + " q=" + std::to_string(q); });

    // Random.
    for (std::size_t s = 0; s < cases; ++s) {
        auto d = detail::random_chain<P>(rng, 3, random_max);
        const M f = P::random(rng, d[0], d[1]), g = P::random(rng, d[1], d[2]),
                k = P::random(rng, d[2], d[3]);
        assoc.record(P::compose(P::compose(f, g), k) == P::compose(f, P::compose(g, k)),
                     [&] { return detail::dump(f, g, k); });
        unit.record(P::compose(P::identity(f.dom()), f) == f && P::compose(f, P::identity(f.cod())) == f,
                    [&] { return detail::dump(f); });
        tunit.record(P::tensor(f, P::identity(0)) == f && P::tensor(P::identity(0), f) == f,
                     [&] { return detail::dump(f); });
        tassoc.record(P::tensor(P::tensor(f, g), k) == P::tensor(f, P::tensor(g, k)),
                      [&] { return detail::dump(f, g, k); });
        natural.record(P::compose(P::tensor(f, k), P::symmetry(f.cod(), k.cod())) ==
                           P::compose(P::symmetry(f.dom(), k.dom()), P::tensor(k, f)),
                       [&] { return detail::dump(f, k); });
        auto e = detail::random_chain<P>(rng, 2, random_max);
        const M g2 = P::random(rng, e[0], e[1]), k2 = P::random(rng, e[1], e[2]);
        interchange.record(P::compose(P::tensor(f, g2), P::tensor(g, k2)) ==
                               P::tensor(P::compose(f, g), P::compose(g2, k2)),
                           [&] { return detail::dump(f, g2, g, k2); });
        std::size_t p = uniform(rng, 0, random_max), q = uniform(rng, 0, random_max);
        involution.record(P::compose(P::symmetry(p, q), P::symmetry(q, p)) == P::identity(p + q),
                          [&] { return "p=" + std::to_string(p) + " q=" + std::to_string(q); });
    }

    assoc.finish(report, tag + "associativity");
    unit.finish(report, tag + "identity laws");
    tassoc.finish(report, tag + "tensor associativity");
    tunit.finish(report, tag + "tensor unit");
    interchange.finish(report, tag + "interchange");
    natural.finish(report, tag + "symmetry naturality");
    involution.finish(report, tag + "symmetry involution");
}

/// Preservation of composition, tensor, identities and symmetries by F: S -> T.
template <PropTheory S, PropTheory T, class F>
    requires std::invocable<const F&, const typename S::Morphism&>
void check_functor(CheckReport& report, std::string_view label, const F& functor, std::size_t bound,
                   std::size_t cases, std::size_t random_max, Rng& rng) {
    using M = typename S::Morphism;
    const std::string tag = std::string(label) + ": ";
    const auto h = detail::hom_table<S>(bound);
    detail::Tally comp, tens, ids, syms;

    for (std::size_t a = 0; a <= bound; ++a)
        for (std::size_t b = 0; b <= bound; ++b)
            for (const M& f : h[a][b]) {
                for (std::size_t c = 0; c <= bound; ++c)
                    for (const M& g : h[b][c])
                        comp.record(functor(S::compose(f, g)) == T::compose(functor(f), functor(g)),
                                    [&] { return detail::dump(f, g); });
                for (std::size_t c = 0; c <= bound; ++c)
                    for (std::size_t d = 0; d <= bound; ++d)
                        for (const M& g : h[c][d])
                            tens.record(functor(S::tensor(f, g)) == T::tensor(functor(f), functor(g)),
                                        [&] { return detail::dump(f, g); });
            }
    for (std::size_t k = 0; k <= bound + random_max; ++k)
        ids.record(functor(S::identity(k)) == T::identity(k), [&] { return "k=" + std::to_string(k); });
    for (std::size_t p = 0; p <= random_max; ++p)
        for (std::size_t q = 0; q <= random_max; ++q)
            syms.record(functor(S::symmetry(p, q)) == T::symmetry(p, q),
                        [&] { return "p=" + std::to_string(p) + " q=" + std::to_string(q); });

    for (std::size_t s = 0; s < cases; ++s) {
        auto d = detail::random_chain<S>(rng, 2, random_max);
        const M f = S::random(rng, d[0], d[1]), g = S::random(rng, d[1], d[2]);
        comp.record(functor(S::compose(f, g)) == T::compose(functor(f), functor(g)),
                    [&] { return detail::dump(f, g); });
        auto [m, n] = detail::random_dims<S>(rng, random_max);
        const M k = S::random(rng, m, n);
        tens.record(functor(S::tensor(f, k)) == T::tensor(functor(f), functor(k)),
                    [&] { return detail::dump(f, k); });
    }

    comp.finish(report, tag + "preserves composition");
    tens.finish(report, tag + "preserves tensor");
    ids.finish(report, tag + "preserves identities");
    syms.finish(report, tag + "preserves symmetries");
}

// ---------------------------------------------------------------------------
// Suites.

/// Image and kernel of the ancestry functor. bound = largest codomain n
/// (default 4); domains run up to bound - 1.
inline void check_theorem_a(CheckReport& report, const SuiteOptions& opts) {
    const std::size_t max_n = opts.bound.value_or(4);
    const std::size_t max_m = max_n == 0 ? 0 : max_n - 1;
    detail::Tally in_circ, image, kernel, counts, section, distinct, congruence;

    for (std::size_t m = 0; m <= max_m; ++m)
        for (std::size_t n = 0; n <= max_n; ++n) {
            const auto syn = enumerate_syn(m, n);
            std::set<Corelation> images;
            std::map<Corelation, CocomMap> by_pi;
            std::map<CocomMap, Corelation> by_cocom;
            bool kernel_ok = true;
            for (const SynMorphism& f : syn) {
                const Corelation r = pi(f);
                const CocomMap u = cocom_of(f);
                in_circ.record(is_in_circ(r), [&] { return detail::dump(f); });
                images.insert(r);
                auto [it1, new1] = by_pi.emplace(r, u);
                auto [it2, new2] = by_cocom.emplace(u, r);
                kernel_ok = kernel_ok && (new1 || it1->second == u) && (new2 || it2->second == r);
            }
            kernel.record(kernel_ok, [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });

            std::set<Corelation> circ;
            for (const Corelation& r : enumerate_corel(m, n, opts.enumeration_ceiling))
                if (is_in_circ(r)) circ.insert(r);
            image.record(images == circ, [&] {
                return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": |image|=" +
                       std::to_string(images.size()) + " |circ|=" + std::to_string(circ.size());
            });

            const std::size_t surj = oracle::surjection_count(n, m);
            counts.record(images.size() == surj && fiber_nonempty_functions(n, m).size() == surj, [&] {
                return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": classes " +
                       std::to_string(images.size()) + " vs surjections " + std::to_string(surj);
            });

            const auto cocoms = enumerate_cocom(m, n);
            std::set<Corelation> rendered;
            for (const CocomMap& u : cocoms) {
                const SynMorphism f = realize_leftcomb(u);
                section.record(pi(f) == corelation_of(u) && cocom_of(f) == u,
                               [&] { return detail::dump(u); });
                rendered.insert(corelation_of(u));
            }
            distinct.record(rendered.size() == cocoms.size(),
                            [&] { return "m=" + std::to_string(m) + " n=" + std::to_string(n); });
        }

    // The kernel of cocom_of is a congruence: composites and tensors of
    // equivalent pairs stay equivalent.
    const std::size_t small = std::min<std::size_t>(max_n, 3);
    for (std::size_t a = 0; a <= small; ++a)
        for (std::size_t b = 0; b <= small; ++b)
            for (std::size_t c = 0; c <= small; ++c) {
                const auto fs = enumerate_syn(a, b);
                const auto gs = enumerate_syn(b, c);
                for (const SynMorphism& f1 : fs)
                    for (const SynMorphism& f2 : fs) {
                        if (cocom_of(f1) != cocom_of(f2)) continue;
                        for (const SynMorphism& g1 : gs)
                            for (const SynMorphism& g2 : gs) {
                                if (cocom_of(g1) != cocom_of(g2)) continue;
                                congruence.record(
                                    cocom_of(then(f1, g1)) == cocom_of(then(f2, g2)) &&
                                        cocom_of(tensor(f1, g1)) == cocom_of(tensor(f2, g2)),
                                    [&] { return detail::dump(f1, f2, g1, g2); });
                            }
                    }
            }

    in_circ.finish(report, "every pi(f) lies in FinCorel°");
    image.finish(report, "image of pi equals FinCorel°");
    kernel.finish(report, "pi(f) = pi(g) iff cocom_of(f) = cocom_of(g)");
    counts.finish(report, "ancestry classes = surjections(n, m)");
    section.finish(report, "left-comb section: pi and cocom_of identities");
    distinct.finish(report, "corelation_of is injective");
    congruence.finish(report, "ancestry kernel is a PROP congruence");
}

/// Functoriality of pi, pi_bar, real and cocom_of. bound = exhaustive object
/// size (default 2).
inline void check_functoriality(CheckReport& report, const SuiteOptions& opts) {
    const std::size_t bound = opts.bound.value_or(2);
    if (bound > kMaxExhaustivePropBound)
        throw ResourceError("exhaustive bound " + std::to_string(bound) + " exceeds " +
                            std::to_string(kMaxExhaustivePropBound));
    Rng rng(opts.seed);
    auto pi_fn = [](const SynMorphism& f) { return pi(f); };
    auto real_fn = [](const SynMorphism& f) { return real(f); };
    auto cocom_fn = [](const SynMorphism& f) { return cocom_of(f); };
    auto pi_bar_fn = [](const Cospan& c) { return pi_bar(c); };
    check_functor<SynTheory, CorelTheory>(report, "pi", pi_fn, bound, opts.random_cases, 6, rng);
    check_functor<CospanTheory, CorelTheory>(report, "pi_bar", pi_bar_fn, bound, opts.random_cases, 5, rng);
    check_functor<SynTheory, CospanTheory>(report, "real", real_fn, bound, opts.random_cases, 6, rng);
    check_functor<SynTheory, CocomTheory>(report, "cocom_of", cocom_fn, bound, opts.random_cases, 6, rng);
}

/// Collapse of cospans onto corelations. bound = largest m + n for the
/// section identity (default 6); quotient_card runs for m + n <= bound - 2
/// at depth 4.
inline void check_theorem_c(CheckReport& report, const SuiteOptions& opts) {
    const std::size_t bound = opts.bound.value_or(6);
    const std::size_t qbound = bound >= 2 ? bound - 2 : 0;
    detail::Tally section, epic;

    for (std::size_t total = 0; total <= bound; ++total)
        for (std::size_t m = 0; m <= total; ++m) {
            const std::size_t n = total - m;
            for (const Corelation& r : enumerate_corel(m, n, opts.enumeration_ceiling)) {
                const Cospan c = corelation_to_cospan(r);
                section.record(pi_bar(c) == r, [&] { return detail::dump(r); });
                epic.record(c.is_jointly_epic(), [&] { return detail::dump(r); });
            }
        }
    section.finish(report, "pi_bar . corelation_to_cospan = id");
    epic.finish(report, "corelation_to_cospan is jointly epic");

    if (qbound > opts.quotient_ceiling)
        throw ResourceError("theorem-c: quotient bound " + std::to_string(qbound) +
                            " exceeds ceiling " + std::to_string(opts.quotient_ceiling));
    detail::Tally quotient;
    std::map<std::size_t, CospanClosure> closures;
    for (std::size_t total = 0; total <= qbound; ++total) {
        const std::size_t cap = std::max<std::size_t>(total, 2);
        auto it = closures.find(cap);
        if (it == closures.end()) it = closures.emplace(cap, CospanClosure(cap, 4)).first;
        for (std::size_t m = 0; m <= total; ++m) {
            const std::size_t n = total - m;
            const std::size_t card = quotient_card(m, n, it->second);
            quotient.record(card == oracle::bell(total), [&] {
                return "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                       std::to_string(card) + " vs Bell " + std::to_string(oracle::bell(total));
            });
        }
    }

    quotient.finish(report, "quotient_card(m, n, depth 4) = Bell(m + n)");
}

inline void check_scfa_suite(CheckReport& report, const SuiteOptions&) {
    for (const AxiomCheck& a : check_scfa())
        report.add(a.name, a.holds == a.expected,
                   std::string(a.holds ? "holds" : "fails") + (a.expected ? "" : " (expected to fail)"));
}

/// pi = pi_bar . real on every enumerated hom-set; bound = largest n (default 4).
inline void check_triangle(CheckReport& report, const SuiteOptions& opts) {
    const std::size_t max_n = opts.bound.value_or(4);
    const std::size_t max_m = max_n == 0 ? 0 : max_n - 1;
    detail::Tally tri;
    for (std::size_t m = 0; m <= max_m; ++m)
        for (std::size_t n = 0; n <= max_n; ++n)
            for (const SynMorphism& f : enumerate_syn(m, n))
                tri.record(pi(f) == pi_bar(real(f)), [&] { return detail::dump(f); });
    tri.finish(report, "pi(f) = pi_bar(real(f))");
}

/// PROP laws for Syn, FinCorel, Cospan and Cocom; bound = exhaustive object size (default 2).
inline void check_prop_laws_suite(CheckReport& report, const SuiteOptions& opts) {
    const std::size_t bound = opts.bound.value_or(2);
    if (bound > kMaxExhaustivePropBound)
        throw ResourceError("exhaustive bound " + std::to_string(bound) + " exceeds " +
                            std::to_string(kMaxExhaustivePropBound));
    Rng rng(opts.seed);
    check_prop_laws<SynTheory>(report, bound, opts.random_cases, 5, rng);
    check_prop_laws<CorelTheory>(report, bound, opts.random_cases, 5, rng);
    check_prop_laws<CospanTheory>(report, bound, opts.random_cases, 5, rng);
    check_prop_laws<CocomTheory>(report, bound, opts.random_cases, 5, rng);
}

/// Predicate-lattice laws, exhaustive for carriers <= bound (default 4), and
/// lfp/gfp against the subset-scanning oracle for carriers <= 12.
inline void check_logic(CheckReport& report, const SuiteOptions& opts) {
    const std::size_t bound = opts.bound.value_or(4);
    detail::Tally residuation, exists_adj, forall_adj, routes, monotone, completeness, fix;
    auto preds = [](std::size_t size) {
        std::vector<Pred> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask)
            out.push_back(Pred::from_mask(size, mask));
        return out;
    };

    for (std::size_t size = 0; size <= bound; ++size) {
        const auto ps = preds(size);
        for (const Pred& a : ps)
            for (const Pred& b : ps) {
                const Pred ab = meet(a, b);
                for (const Pred& c : ps)
                    residuation.record(ab.subset_of(c) == a.subset_of(implies(b, c)),
                                       [&] { return "size " + std::to_string(size); });
            }

        // Arbitrary joins and meets by folding versus pointwise membership.
        for (std::size_t s = 0; s < 64; ++s) {
            Rng rng(opts.seed + size * 1000 + s);
            std::vector<Pred> family;
            const std::size_t count = uniform(rng, 0, 5);
            for (std::size_t k = 0; k < count; ++k)
                family.push_back(ps.empty() ? Pred() : ps[uniform(rng, 0, ps.size() - 1)]);
            bool ok = true;
            const Pred j = join_all(size, family), mt = meet_all(size, family);
            for (std::size_t x = 0; x < size; ++x) {
                bool any = false, every = true;
                for (const Pred& p : family) {
                    any = any || p.contains(x);
                    every = every && p.contains(x);
                }
                ok = ok && j.contains(x) == any && mt.contains(x) == every;
            }
            completeness.record(ok, [&] { return "size " + std::to_string(size); });
        }
    }

    for (std::size_t x = 0; x <= bound; ++x)
        for (std::size_t y = 0; y <= bound; ++y) {
            const auto px = preds(x), py = preds(y);
            for (const FinFunction& f : all_functions(x, y))
                for (const Pred& a : px) {
                    const Pred ex = exists_f(f, a), fa = forall_f(f, a);
                    for (const Pred& b : py) {
                        const Pred pb = pullback_f(f, b);
                        exists_adj.record(ex.subset_of(b) == a.subset_of(pb),
                                          [&] { return detail::dump(f); });
                        forall_adj.record(pb.subset_of(a) == b.subset_of(fa),
                                          [&] { return detail::dump(f); });
                    }
                }
        }

    for (std::size_t size = 0; size <= bound; ++size) {
        const auto ps = preds(size);
        const std::uint64_t relations = std::uint64_t{1} << (size * size);
        for (std::uint64_t code = 0; code < relations; ++code) {
            Rel r(size);
            for (std::size_t k = 0; k < size * size; ++k)
                if ((code >> k) & 1U) r.insert(k / size, k % size);
            std::vector<Pred> dia, bx;
            dia.reserve(ps.size());
            bx.reserve(ps.size());
            for (const Pred& a : ps) {
                dia.push_back(diamond(r, a));
                bx.push_back(box(r, a));
                routes.record(dia.back() == diamond_direct(r, a) && bx.back() == box_direct(r, a),
                              [&] { return "size " + std::to_string(size) + " relation " + std::to_string(code); });
            }
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = 0; j < ps.size(); ++j)
                    if (ps[i].subset_of(ps[j]))
                        monotone.record(dia[i].subset_of(dia[j]) && bx[i].subset_of(bx[j]), [&] {
                            return "size " + std::to_string(size) + " relation " + std::to_string(code);
                        });
        }
    }

    // Fixed points of diamond/box-based maps versus the subset scan.
    Rng rng(opts.seed);
    for (std::size_t size = 0; size <= 12; ++size)
        for (std::size_t s = 0; s < 8; ++s) {
            Rel r(size);
            Pred c(size);
            for (std::size_t x = 0; x < size; ++x) {
                if (uniform(rng, 0, 3) == 0) c.insert(x);
                for (std::size_t y = 0; y < size; ++y)
                    if (uniform(rng, 0, 4) == 0) r.insert(x, y);
            }
            const std::vector<std::function<Pred(const Pred&)>> maps = {
                [&](const Pred& a) { return join(c, diamond(r, a)); },
                [&](const Pred& a) { return meet(c, box(r, a)); },
                [&](const Pred& a) { return join(c, box(r, a)); },
                [&](const Pred& a) { return meet(c, diamond(r, a)); },
            };
            for (const auto& fn : maps) {
                auto tuple_fn = [&](const PredTuple& v) { return PredTuple{fn(v[0])}; };
                const Pred least = lfp(tuple_fn, 1, size).front();
                const Pred greatest = gfp(tuple_fn, 1, size).front();
                const oracle::FixpointScan scan = oracle::scan_fixpoints(fn, size);
                fix.record(scan.has_least && scan.has_greatest && least == scan.least &&
                               greatest == scan.greatest,
                           [&] { return "size " + std::to_string(size) + " sample " + std::to_string(s); });
            }
        }

    residuation.finish(report, "residuation: A and B <= C iff A <= B => C");
    exists_adj.finish(report, "exists_f -| f*");
    forall_adj.finish(report, "f* -| forall_f");
    routes.finish(report, "modalities: adjoint route = direct formula");
    monotone.finish(report, "modalities are monotone");
    completeness.finish(report, "joins and meets of families are pointwise");
    fix.finish(report, "lfp/gfp = subset-scan oracle (carrier <= 12)");
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"theorem-a", "theorem-c", "scfa",  "prop-laws",
                                                   "triangle",  "logic",     "functoriality"};
    return names;
}

/// Runs a suite by name. A resource ceiling hit mid-suite keeps the checks
/// completed so far and marks the report aborted (exit status 4). Unknown
/// names throw ContractError.
inline CheckReport run_suite(std::string_view name, const SuiteOptions& opts = {}) {
    using Fn = void (*)(CheckReport&, const SuiteOptions&);
    static const std::map<std::string, Fn, std::less<>> table = {
        {"theorem-a", &check_theorem_a},   {"theorem-c", &check_theorem_c},
        {"scfa", &check_scfa_suite},       {"prop-laws", &check_prop_laws_suite},
        {"triangle", &check_triangle},     {"logic", &check_logic},
        {"functoriality", &check_functoriality},
    };
    auto it = table.find(name);
    if (it == table.end()) throw ContractError("unknown suite \"" + std::string(name) + "\"");
    CheckReport report{std::string(name), {}, {}};
    try {
        it->second(report, opts);
    } catch (const ResourceError& e) {
        report.aborted = e.what();
    }
    return report;
}

} // namespace corelate
