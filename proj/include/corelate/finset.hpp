#pragma once

// Finite-set primitives: functions between skeletal finite sets, partitions
// in canonical first-occurrence form, union-find, pushouts and kernels.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corelate/errors.hpp"

namespace corelate {

/// A function {0..dom-1} -> {0..cod-1} stored as its table.
class FinFunction {
public:
    FinFunction() = default;

    FinFunction(std::size_t cod, std::vector<std::size_t> table)
        : cod_(cod), table_(std::move(table)) {
        for (std::size_t v : table_)
            if (v >= cod_)
                throw ContractError("FinFunction: table entry " + std::to_string(v) +
                                    " out of codomain " + std::to_string(cod_));
    }

    static FinFunction identity(std::size_t k) {
        std::vector<std::size_t> t(k);
        std::iota(t.begin(), t.end(), std::size_t{0});
        return {k, std::move(t)};
    }

    /// The unique map out of the empty set.
    static FinFunction initial(std::size_t cod) { return {cod, {}}; }

    static FinFunction constant(std::size_t dom, std::size_t cod, std::size_t value) {
        return {cod, std::vector<std::size_t>(dom, value)};
    }

    std::size_t dom() const { return table_.size(); }
    std::size_t cod() const { return cod_; }
    std::size_t operator()(std::size_t k) const { return table_.at(k); }
    const std::vector<std::size_t>& table() const { return table_; }

    /// Number of distinct values attained.
    std::size_t image_size() const {
        std::vector<bool> hit(cod_, false);
        std::size_t count = 0;
        for (std::size_t v : table_)
            if (!hit[v]) {
                hit[v] = true;
                ++count;
            }
        return count;
    }

    bool is_surjective() const { return image_size() == cod_; }

    friend bool operator==(const FinFunction&, const FinFunction&) = default;
    friend auto operator<=>(const FinFunction&, const FinFunction&) = default;

private:
    std::size_t cod_ = 0;
    std::vector<std::size_t> table_;
};

/// `then` order: result(k) = g(f(k)).
inline FinFunction compose_fn(const FinFunction& f, const FinFunction& g) {
    if (f.cod() != g.dom())
        throw ContractError("compose_fn: codomain " + std::to_string(f.cod()) +
                            " does not match domain " + std::to_string(g.dom()));
    std::vector<std::size_t> t(f.dom());
    for (std::size_t k = 0; k < f.dom(); ++k) t[k] = g(f(k));
    return {g.cod(), std::move(t)};
}

/// Coproduct of functions: f + g : (f.dom + g.dom) -> (f.cod + g.cod).
inline FinFunction coproduct_fn(const FinFunction& f, const FinFunction& g) {
    std::vector<std::size_t> t = f.table();
    t.reserve(f.dom() + g.dom());
    for (std::size_t v : g.table()) t.push_back(v + f.cod());
    return {f.cod() + g.cod(), std::move(t)};
}

/// Canonical first-occurrence relabeling of an arbitrary labeling.
/// Returns the relabeled sequence and the number of distinct labels.
inline std::pair<std::vector<std::size_t>, std::size_t>
first_occurrence_labels(std::span<const std::size_t> labels) {
    std::vector<std::size_t> out(labels.size());
    std::size_t bound = 0;
    for (std::size_t v : labels) bound = std::max(bound, v + 1);
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> renamed(bound, unset);
    std::size_t next = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        std::size_t& r = renamed[labels[k]];
        if (r == unset) r = next++;
        out[k] = r;
    }
    return {std::move(out), next};
}

/// An equivalence relation on {0..size-1}, stored canonically: class labels
/// are 0..classes-1 in order of first occurrence. Equal values denote equal
/// relations.
class Partition {
public:
    Partition() = default;

    /// Discrete partition (every element alone).
    static Partition discrete(std::size_t size) {
        Partition p;
        p.class_id_.resize(size);
        std::iota(p.class_id_.begin(), p.class_id_.end(), std::size_t{0});
        p.num_classes_ = size;
        return p;
    }

    /// Any labeling; equal labels mean same class.
    static Partition from_labels(std::span<const std::size_t> labels) {
        auto [ids, count] = first_occurrence_labels(labels);
        Partition p;
        p.class_id_ = std::move(ids);
        p.num_classes_ = count;
        return p;
    }

    static Partition from_labels(const std::vector<std::size_t>& labels) {
        return from_labels(std::span<const std::size_t>(labels));
    }

    /// From explicit classes; every element of {0..size-1} must appear exactly once.
    static Partition from_classes(std::size_t size,
                                  const std::vector<std::vector<std::size_t>>& classes) {
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> labels(size, unset);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::size_t e : classes[c]) {
                detail::require(e < size, "Partition: element out of range");
                detail::require(labels[e] == unset, "Partition: element listed twice");
                labels[e] = c;
            }
        for (std::size_t l : labels) detail::require(l != unset, "Partition: element missing");
        return from_labels(labels);
    }

    std::size_t size() const { return class_id_.size(); }
    std::size_t num_classes() const { return num_classes_; }
    std::size_t class_of(std::size_t e) const { return class_id_.at(e); }
    const std::vector<std::size_t>& class_ids() const { return class_id_; }

    bool same_class(std::size_t a, std::size_t b) const { return class_of(a) == class_of(b); }

    /// Classes in label order, members increasing.
    std::vector<std::vector<std::size_t>> classes() const {
        std::vector<std::vector<std::size_t>> out(num_classes_);
        for (std::size_t e = 0; e < class_id_.size(); ++e) out[class_id_[e]].push_back(e);
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.class_id_ == b.class_id_;
    }
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.class_id_ <=> b.class_id_;
    }

private:
    std::vector<std::size_t> class_id_;
    std::size_t num_classes_ = 0;
};

/// Disjoint-set forest with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        std::size_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            std::size_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    /// Returns true if two distinct classes were merged.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    std::size_t size() const { return parent_.size(); }

    /// Canonical partition of the whole carrier.
    Partition partition() {
        std::vector<std::size_t> roots(parent_.size());
        for (std::size_t k = 0; k < roots.size(); ++k) roots[k] = find(k);
        return Partition::from_labels(roots);
    }

    /// Canonical partition restricted to the listed elements, in the given order.
    Partition partition_of(std::span<const std::size_t> elements) {
        std::vector<std::size_t> roots;
        roots.reserve(elements.size());
        for (std::size_t e : elements) roots.push_back(find(e));
        return Partition::from_labels(roots);
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

struct Pushout {
    std::size_t apex = 0;
    FinFunction inj_f;
    FinFunction inj_g;
};

/// Pushout of the span N <-f- Y -g-> N'. Apex labels follow first occurrence
/// scanning inj_f's table and then inj_g's.
inline Pushout pushout(const FinFunction& f, const FinFunction& g) {
    if (f.dom() != g.dom())
        throw ContractError("pushout: span legs have different sources (" +
                            std::to_string(f.dom()) + " vs " + std::to_string(g.dom()) + ")");
    const std::size_t left = f.cod();
    UnionFind uf(left + g.cod());
    for (std::size_t y = 0; y < f.dom(); ++y) uf.unite(f(y), left + g(y));
    Partition quotient = uf.partition();
    const auto& ids = quotient.class_ids();
    std::vector<std::size_t> tf(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(left));
    std::vector<std::size_t> tg(ids.begin() + static_cast<std::ptrdiff_t>(left), ids.end());
    const std::size_t apex = quotient.num_classes();
    return {apex, FinFunction(apex, std::move(tf)), FinFunction(apex, std::move(tg))};
}

/// Kernel of the copairing of maps sharing a codomain, on the disjoint union
/// of their domains (in sequence order).
inline Partition kernel_partition(std::span<const FinFunction> maps) {
    detail::require(!maps.empty(), "kernel_partition: empty map sequence");
    const std::size_t cod = maps.front().cod();
    std::vector<std::size_t> images;
    for (const FinFunction& f : maps) {
        detail::require(f.cod() == cod, "kernel_partition: maps have different codomains");
        images.insert(images.end(), f.table().begin(), f.table().end());
    }
    return Partition::from_labels(images);
}

inline Partition kernel_partition(std::initializer_list<FinFunction> maps) {
    return kernel_partition(std::span<const FinFunction>(maps.begin(), maps.size()));
}

/// All functions n -> m with every fiber nonempty, lexicographic in the table.
inline std::vector<FinFunction> fiber_nonempty_functions(std::size_t n, std::size_t m) {
    std::vector<FinFunction> out;
    if (m > n || (m == 0 && n > 0)) return out;
    std::vector<std::size_t> table(n);
    std::vector<std::size_t> hits(m, 0);
    std::size_t uncovered = m;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            if (uncovered == 0) out.emplace_back(m, table);
            return;
        }
        if (n - pos < uncovered) return;
        for (std::size_t v = 0; v < m; ++v) {
            table[pos] = v;
            if (hits[v]++ == 0) --uncovered;
            self(self, pos + 1);
            if (--hits[v] == 0) ++uncovered;
        }
    };
    rec(rec, 0);
    return out;
}

/// Every function n -> m, lexicographic in the table.
inline std::vector<FinFunction> all_functions(std::size_t n, std::size_t m) {
    std::vector<FinFunction> out;
    if (m == 0 && n > 0) return out;
    std::vector<std::size_t> table(n, 0);
    while (true) {
        out.emplace_back(m, table);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++table[k] < m) break;
            table[k] = 0;
            if (k == 0) return out;
        }
        if (n == 0) return out;
    }
}

} // namespace corelate
