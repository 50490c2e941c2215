#pragma once

// The ancestry functor from the free PROP to corelations, and the concrete
// model of its quotient: maps outputs -> inputs with every fiber nonempty
// (the PROP of non-counital cocommutative comonoids).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "corelate/errors.hpp"
#include "corelate/fincorel.hpp"
#include "corelate/finset.hpp"
#include "corelate/syn.hpp"

namespace corelate {

/// A morphism m -> n of Cocom: phi sends each of the n outputs to the input
/// it descends from; every input has at least one descendant.
class CocomMap {
public:
    CocomMap() = default;

    CocomMap(std::size_t m, std::size_t n, FinFunction phi) : m_(m), n_(n), phi_(std::move(phi)) {
        if (phi_.dom() != n_ || phi_.cod() != m_)
            throw ContractError("CocomMap: phi must be a function " + std::to_string(n_) + " -> " +
                                std::to_string(m_));
        detail::require(phi_.is_surjective(), "CocomMap: phi has an empty fiber");
    }

    explicit CocomMap(FinFunction phi) : CocomMap(phi.cod(), phi.dom(), phi) {}

    std::size_t dom() const { return m_; }
    std::size_t cod() const { return n_; }
    const FinFunction& phi() const { return phi_; }

    /// Outputs descending from input i, increasing.
    std::vector<std::size_t> fiber(std::size_t i) const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < n_; ++j)
            if (phi_(j) == i) out.push_back(j);
        return out;
    }

    friend bool operator==(const CocomMap&, const CocomMap&) = default;
    friend auto operator<=>(const CocomMap&, const CocomMap&) = default;

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    FinFunction phi_;
};

inline CocomMap cocom_identity(std::size_t k) { return CocomMap(FinFunction::identity(k)); }

inline CocomMap cocom_symmetry(std::size_t p, std::size_t q) {
    std::vector<std::size_t> t(p + q);
    for (std::size_t i = 0; i < p; ++i) t[q + i] = i;
    for (std::size_t j = 0; j < q; ++j) t[j] = p + j;
    return CocomMap(FinFunction(p + q, std::move(t)));
}

/// u ; v for u: m -> n, v: n -> p; the composite's phi is u.phi after v.phi.
inline CocomMap cocom_compose(const CocomMap& u, const CocomMap& v) {
    if (u.cod() != v.dom())
        throw ContractError("cocom_compose: codomain " + std::to_string(u.cod()) +
                            " does not match domain " + std::to_string(v.dom()));
    return CocomMap(u.dom(), v.cod(), compose_fn(v.phi(), u.phi()));
}

inline CocomMap cocom_tensor(const CocomMap& u, const CocomMap& v) {
    return CocomMap(u.dom() + v.dom(), u.cod() + v.cod(), coproduct_fn(u.phi(), v.phi()));
}

/// All of Cocom(m, n).
inline std::vector<CocomMap> enumerate_cocom(std::size_t m, std::size_t n) {
    std::vector<CocomMap> out;
    for (FinFunction& f : fiber_nonempty_functions(n, m)) out.emplace_back(m, n, std::move(f));
    return out;
}

/// Ancestry partition: input i is connected exactly to the outputs at the
/// leaves of tree i.
inline Corelation pi(const SynMorphism& f) {
    const std::size_t m = f.dom();
    std::vector<std::size_t> labels(m + f.cod());
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = i;
        for (std::size_t leaf : f.trees()[i].leaves()) labels[m + leaf] = i;
    }
    return {m, f.cod(), Partition::from_labels(labels)};
}

inline CocomMap cocom_of(const SynMorphism& f) {
    std::vector<std::size_t> t(f.cod());
    for (std::size_t i = 0; i < f.dom(); ++i)
        for (std::size_t leaf : f.trees()[i].leaves()) t[leaf] = i;
    return CocomMap(f.dom(), f.cod(), FinFunction(f.dom(), std::move(t)));
}

/// Classes {i} together with the fiber over i.
inline Corelation corelation_of(const CocomMap& u) {
    const std::size_t m = u.dom();
    std::vector<std::size_t> labels(m + u.cod());
    for (std::size_t i = 0; i < m; ++i) labels[i] = i;
    for (std::size_t j = 0; j < u.cod(); ++j) labels[m + j] = u.phi()(j);
    return {m, u.cod(), Partition::from_labels(labels)};
}

/// Inverse of corelation_of on FinCorel°; throws ContractError otherwise.
inline CocomMap cocom_from_corelation(const Corelation& r) {
    detail::require(is_in_circ(r), "cocom_from_corelation: corelation is not in FinCorel°");
    const Partition& p = r.partition();
    // Canonical labeling gives input i the class label i.
    std::vector<std::size_t> t(r.cod());
    for (std::size_t j = 0; j < r.cod(); ++j) t[j] = p.class_of(r.output(j));
    return CocomMap(r.dom(), r.cod(), FinFunction(r.dom(), std::move(t)));
}

/// Left comb over a nonempty increasing leaf list: ((l0 l1) l2) ...
inline Tree left_comb(const std::vector<std::size_t>& leaves) {
    detail::require(!leaves.empty(), "left_comb: no leaves");
    Tree t = Tree::leaf(leaves.front());
    for (std::size_t k = 1; k < leaves.size(); ++k) t = Tree::node(t, Tree::leaf(leaves[k]));
    return t;
}

/// Section of the quotient: tree i is the left comb on the fiber over i.
inline SynMorphism realize_leftcomb(const CocomMap& u) {
    std::vector<Tree> trees;
    trees.reserve(u.dom());
    for (std::size_t i = 0; i < u.dom(); ++i) trees.push_back(left_comb(u.fiber(i)));
    return {u.dom(), u.cod(), std::move(trees)};
}

} // namespace corelate
