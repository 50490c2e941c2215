#pragma once

// Finite corelations m -> n: equivalence relations on m + n, where elements
// 0..m-1 are inputs and m..m+n-1 are outputs. Composition is the transitive
// closure of the union on m + n + p, restricted to the outer boundary.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "corelate/errors.hpp"
#include "corelate/finset.hpp"

namespace corelate {

class Corelation {
public:
    Corelation() = default;

    Corelation(std::size_t m, std::size_t n, Partition partition)
        : m_(m), n_(n), partition_(std::move(partition)) {
        if (partition_.size() != m_ + n_)
            throw ContractError("Corelation: partition carrier " +
                                std::to_string(partition_.size()) + " != " + std::to_string(m_ +
                                n_));
    }

    std::size_t dom() const { return m_; }
    std::size_t cod() const { return n_; }
    const Partition& partition() const { return partition_; }

    std::size_t input(std::size_t i) const { return i; }
    std::size_t output(std::size_t j) const { return m_ + j; }
    bool is_input(std::size_t e) const { return e < m_; }

    friend bool operator==(const Corelation&, const Corelation&) = default;
    friend auto operator<=>(const Corelation&, const Corelation&) = default;

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    Partition partition_;
};

inline Corelation corel_identity(std::size_t k) {
    std::vector<std::size_t> labels(2 * k);
    for (std::size_t i = 0; i < k; ++i) labels[i] = labels[k + i] = i;
    return {k, k, Partition::from_labels(labels)};
}

/// Transposition corelation p + q -> q + p: input i < p meets output q + i,
/// input p + j meets output j.
inline Corelation corel_symmetry(std::size_t p, std::size_t q) {
    const std::size_t k = p + q;
    std::vector<std::size_t> labels(2 * k);
    for (std::size_t i = 0; i < k; ++i) labels[i] = i;
    for (std::size_t i = 0; i < p; ++i) labels[k + q + i] = i;
    for (std::size_t j = 0; j < q; ++j) labels[k + j] = p + j;
    return {k, k, Partition::from_labels(labels)};
}

/// R ; S for R: m -> n, S: n -> p.
inline Corelation corel_compose(const Corelation& r, const Corelation& s) {
    if (r.cod() != s.dom())
        throw ContractError("corel_compose: codomain " + std::to_string(r.cod()) +
                            " does not match domain " + std::to_string(s.dom()));
    const std::size_t m = r.dom(), n = r.cod(), p = s.cod();
    UnionFind uf(m + n + p);
    // Unite each element with the first member of its class.
    auto seed = [&uf](const Partition& part, std::size_t offset) {
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> first(part.num_classes(), unset);
        for (std::size_t e = 0; e < part.size(); ++e) {
            std::size_t& f = first[part.class_of(e)];
            if (f == unset) f = e;
            else uf.unite(offset + f, offset + e);
        }
    };
    seed(r.partition(), 0);
    seed(s.partition(), m);
    std::vector<std::size_t> outer;
    outer.reserve(m + p);
    for (std::size_t i = 0; i < m; ++i) outer.push_back(i);
    for (std::size_t k = 0; k < p; ++k) outer.push_back(m + n + k);
    return {m, p, uf.partition_of(outer)};
}

inline Corelation corel_tensor(const Corelation& r, const Corelation& s) {
    const std::size_t m = r.dom() + s.dom(), n = r.cod() + s.cod();
    const std::size_t shift = r.partition().num_classes();
    std::vector<std::size_t> labels(m + n);
    const auto& rp = r.partition();
    const auto& sp = s.partition();
    for (std::size_t i = 0; i < r.dom(); ++i) labels[i] = rp.class_of(i);
    for (std::size_t i = 0; i < s.dom(); ++i) labels[r.dom() + i] = shift + sp.class_of(i);
    for (std::size_t j = 0; j < r.cod(); ++j) labels[m + j] = rp.class_of(r.dom() + j);
    for (std::size_t j = 0; j < s.cod(); ++j)
        labels[m + r.cod() + j] = shift + sp.class_of(s.dom() + j);
    return {m, n, Partition::from_labels(labels)};
}

/// Every class holds exactly one input and at least one output.
inline bool is_in_circ(const Corelation& r) {
    const Partition& p = r.partition();
    std::vector<std::size_t> inputs(p.num_classes(), 0), outputs(p.num_classes(), 0);
    for (std::size_t e = 0; e < p.size(); ++e) (r.is_input(e) ? inputs : outputs)[p.class_of(e)]++;
    for (std::size_t c = 0; c < p.num_classes(); ++c)
        if (inputs[c] != 1 || outputs[c] == 0) return false;
    return true;
}

/// Default ceiling on m + n for exhaustive corelation enumeration (Bell(10) = 115975).
inline constexpr std::size_t kDefaultCorelBound = 10;

/// All set partitions of a carrier of `size` elements as restricted-growth
/// strings, lexicographic.
inline std::vector<Partition> enumerate_partitions(std::size_t size) {
    std::vector<Partition> out;
    std::vector<std::size_t> rgs(size, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t max_label) -> void {
        if (pos == size) {
            out.push_back(Partition::from_labels(rgs));
            return;
        }
        for (std::size_t v = 0; v <= max_label + 1; ++v) {
            rgs[pos] = v;
            self(self, pos + 1, std::max(max_label, v));
        }
    };
    if (size == 0) out.push_back(Partition::from_labels(rgs));
    else rec(rec, 1, 0);
    return out;
}

/// The full hom-set FinCorel(m, n); throws ResourceError when m + n > bound.
inline std::vector<Corelation> enumerate_corel(std::size_t m, std::size_t n,
                                               std::size_t bound = kDefaultCorelBound) {
    if (m + n > bound)
        throw ResourceError("enumerate_corel: m + n = " + std::to_string(m + n) +
                            " exceeds bound " + std::to_string(bound));
    std::vector<Corelation> out;
    for (Partition& p : enumerate_partitions(m + n)) out.emplace_back(m, n, std::move(p));
    return out;
}

} // namespace corelate
