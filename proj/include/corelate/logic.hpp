#pragma once

// Predicate lattices over finite carriers: Boolean Heyting operations, the
// adjoint triple exists_f -| f* -| forall_f along a finite function, the
// relational modalities, and Kleene iteration for least/greatest fixed points.

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "corelate/errors.hpp"
#include "corelate/finset.hpp"

namespace corelate {

/// A subset of {0..size-1}, one bit per element. Carriers up to 64 fit in a
/// single word; larger carriers spill into further words.
class Pred {
public:
    Pred() = default;
    explicit Pred(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Pred empty(std::size_t size) { return Pred(size); }

    static Pred full(std::size_t size) {
        Pred p(size);
        for (auto& w : p.words_) w = ~std::uint64_t{0};
        p.trim();
        return p;
    }

    static Pred of(std::size_t size, std::initializer_list<std::size_t> members) {
        Pred p(size);
        for (std::size_t x : members) p.insert(x);
        return p;
    }

    static Pred of(std::size_t size, const std::vector<std::size_t>& members) {
        Pred p(size);
        for (std::size_t x : members) p.insert(x);
        return p;
    }

    /// Bits of `mask` as members; carrier size <= 64.
    static Pred from_mask(std::size_t size, std::uint64_t mask) {
        detail::require(size <= 64, "Pred::from_mask: carrier larger than one word");
        Pred p(size);
        if (size > 0) p.words_[0] = mask;
        p.trim();
        return p;
    }

    std::size_t size() const { return size_; }

    bool contains(std::size_t x) const {
        if (x >= size_)
            throw ContractError("Pred: element " + std::to_string(x) + " outside carrier");
        return (words_[x / 64] >> (x % 64)) & 1U;
    }

    void insert(std::size_t x) {
        if (x >= size_)
            throw ContractError("Pred: element " + std::to_string(x) + " outside carrier");
        words_[x / 64] |= std::uint64_t{1} << (x % 64);
    }

    void erase(std::size_t x) {
        if (x >= size_)
            throw ContractError("Pred: element " + std::to_string(x) + " outside carrier");
        words_[x / 64] &= ~(std::uint64_t{1} << (x % 64));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t x = 0; x < size_; ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    /// Inclusion order.
    bool subset_of(const Pred& other) const {
        same_carrier(other, "subset_of");
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    Pred complement() const {
        Pred p = *this;
        for (auto& w : p.words_) w = ~w;
        p.trim();
        return p;
    }

    friend Pred meet(const Pred& a, const Pred& b) { return a.zip(b, "meet", [](auto x, auto y) { return x & y; }); }
    friend Pred join(const Pred& a, const Pred& b) { return a.zip(b, "join", [](auto x, auto y) { return x | y; }); }
    /// Heyting implication; Boolean in a powerset, so (not a) or b.
    friend Pred implies(const Pred& a, const Pred& b) {
        return a.zip(b, "implies", [](auto x, auto y) { return ~x | y; });
    }

    friend bool operator==(const Pred&, const Pred&) = default;
    friend auto operator<=>(const Pred&, const Pred&) = default;

private:
    void same_carrier(const Pred& other, const char* op) const {
        if (size_ != other.size_)
            throw ContractError(std::string(op) + ": carrier mismatch (" + std::to_string(size_) +
                                " vs " + std::to_string(other.size_) + ")");
    }

    template <class Op>
    Pred zip(const Pred& other, const char* name, Op op) const {
        same_carrier(other, name);
        Pred p(size_);
        for (std::size_t k = 0; k < words_.size(); ++k) p.words_[k] = op(words_[k], other.words_[k]);
        p.trim();
        return p;
    }

    void trim() {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Join of a family over one carrier; the empty family gives bottom.
inline Pred join_all(std::size_t size, const std::vector<Pred>& family) {
    Pred acc = Pred::empty(size);
    for (const Pred& p : family) acc = join(acc, p);
    return acc;
}

/// Meet of a family over one carrier; the empty family gives top.
inline Pred meet_all(std::size_t size, const std::vector<Pred>& family) {
    Pred acc = Pred::full(size);
    for (const Pred& p : family) acc = meet(acc, p);
    return acc;
}

/// Image of A under f.
inline Pred exists_f(const FinFunction& f, const Pred& a) {
    detail::require(a.size() == f.dom(), "exists_f: predicate carrier does not match domain");
    Pred out(f.cod());
    for (std::size_t x = 0; x < f.dom(); ++x)
        if (a.contains(x)) out.insert(f(x));
    return out;
}

/// Preimage of B under f.
inline Pred pullback_f(const FinFunction& f, const Pred& b) {
    detail::require(b.size() == f.cod(), "pullback_f: predicate carrier does not match codomain");
    Pred out(f.dom());
    for (std::size_t x = 0; x < f.dom(); ++x)
        if (b.contains(f(x))) out.insert(x);
    return out;
}

/// Points whose whole fiber lies in A.
inline Pred forall_f(const FinFunction& f, const Pred& a) {
    detail::require(a.size() == f.dom(), "forall_f: predicate carrier does not match domain");
    Pred out = Pred::full(f.cod());
    for (std::size_t x = 0; x < f.dom(); ++x)
        if (!a.contains(x)) out.erase(f(x));
    return out;
}

/// A binary relation on {0..size-1}, stored as a predicate on the product
/// with (x, y) at index x * size + y.
class Rel {
public:
    Rel() = default;
    explicit Rel(std::size_t size) : size_(size), pairs_(size * size) {}

    Rel(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) : Rel(size) {
        for (auto [x, y] : pairs) insert(x, y);
    }

    std::size_t size() const { return size_; }

    void insert(std::size_t x, std::size_t y) {
        detail::require(x < size_ && y < size_, "Rel: pair outside carrier");
        pairs_.insert(x * size_ + y);
    }

    bool contains(std::size_t x, std::size_t y) const { return pairs_.contains(x * size_ + y); }

    /// The relation as a predicate on the product carrier.
    const Pred& as_pred() const { return pairs_; }

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t k : pairs_.members()) out.emplace_back(k / size_, k % size_);
        return out;
    }

    friend bool operator==(const Rel&, const Rel&) = default;

private:
    std::size_t size_ = 0;
    Pred pairs_;
};

/// First projection X x X -> X in the product indexing used by Rel.
inline FinFunction proj1(std::size_t size) {
    std::vector<std::size_t> t(size * size);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = k / size;
    return {size, std::move(t)};
}

inline FinFunction proj2(std::size_t size) {
    std::vector<std::size_t> t(size * size);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = k % size;
    return {size, std::move(t)};
}

/// exists_{pi1}(R and pi2*(A)).
inline Pred diamond(const Rel& r, const Pred& a) {
    detail::require(r.size() == a.size(), "diamond: carrier mismatch");
    return exists_f(proj1(r.size()), meet(r.as_pred(), pullback_f(proj2(r.size()), a)));
}

/// forall_{pi1}(R implies pi2*(A)).
inline Pred box(const Rel& r, const Pred& a) {
    detail::require(r.size() == a.size(), "box: carrier mismatch");
    return forall_f(proj1(r.size()), implies(r.as_pred(), pullback_f(proj2(r.size()), a)));
}

/// {x : some successor of x lies in A}, by direct comprehension.
inline Pred diamond_direct(const Rel& r, const Pred& a) {
    detail::require(r.size() == a.size(), "diamond_direct: carrier mismatch");
    Pred out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (r.contains(x, y) && a.contains(y)) {
                out.insert(x);
                break;
            }
    return out;
}

/// {x : every successor of x lies in A}, by direct comprehension.
inline Pred box_direct(const Rel& r, const Pred& a) {
    detail::require(r.size() == a.size(), "box_direct: carrier mismatch");
    Pred out = Pred::full(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (r.contains(x, y) && !a.contains(y)) {
                out.erase(x);
                break;
            }
    return out;
}

using PredTuple = std::vector<Pred>;

inline bool tuple_leq(const PredTuple& a, const PredTuple& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].subset_of(b[k])) return false;
    return true;
}

struct FixpointOptions {
    /// Random comparable pairs checked for monotonicity before iterating.
    std::size_t monotonicity_samples = 64;
    std::uint64_t seed = 0x5eed;
};

template <class F>
concept TupleEndomap = std::invocable<const F&, const PredTuple&> &&
                       std::convertible_to<std::invoke_result_t<const F&, const PredTuple&>, PredTuple>;

namespace detail {

template <TupleEndomap F>
PredTuple apply_checked(const F& f, const PredTuple& x) {
    PredTuple y = f(x);
    require(y.size() == x.size(), "fixpoint: map changed the tuple arity");
    for (std::size_t k = 0; k < y.size(); ++k)
        require(y[k].size() == x[k].size(), "fixpoint: map changed a carrier");
    return y;
}

template <TupleEndomap F>
void spot_check_monotone(const F& f, std::size_t arity, std::size_t carrier,
                         const FixpointOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t s = 0; s < opts.monotonicity_samples; ++s) {
        PredTuple lo(arity, Pred(carrier)), hi(arity, Pred(carrier));
        for (std::size_t k = 0; k < arity; ++k)
            for (std::size_t x = 0; x < carrier; ++x) {
                bool in_lo = coin(rng);
                if (in_lo) lo[k].insert(x);
                if (in_lo || coin(rng)) hi[k].insert(x);
            }
        if (!tuple_leq(apply_checked(f, lo), apply_checked(f, hi)))
            throw MonotonicityError("fixpoint: map is not monotone on a sampled pair");
    }
}

template <TupleEndomap F>
PredTuple kleene(const F& f, PredTuple x, bool ascending) {
    const std::size_t carrier = x.empty() ? 0 : x.front().size();
    const std::size_t limit = x.size() * carrier + 1;
    for (std::size_t step = 0; step < limit; ++step) {
        PredTuple y = apply_checked(f, x);
        if (y == x) return x;
        if (ascending ? !tuple_leq(x, y) : !tuple_leq(y, x))
            throw MonotonicityError("fixpoint: iteration chain is not monotone");
        x = std::move(y);
    }
    throw MonotonicityError("fixpoint: iteration exceeded " + std::to_string(limit) + " steps");
}

} // namespace detail

/// Least fixed point of a monotone map on Pred(carrier)^arity, iterated from bottom.
template <TupleEndomap F>
PredTuple lfp(const F& f, std::size_t arity, std::size_t carrier, const FixpointOptions& opts = {}) {
    detail::spot_check_monotone(f, arity, carrier, opts);
    return detail::kleene(f, PredTuple(arity, Pred::empty(carrier)), true);
}

/// Greatest fixed point, iterated from top.
template <TupleEndomap F>
PredTuple gfp(const F& f, std::size_t arity, std::size_t carrier, const FixpointOptions& opts = {}) {
    detail::spot_check_monotone(f, arity, carrier, opts);
    return detail::kleene(f, PredTuple(arity, Pred::full(carrier)), false);
}

} // namespace corelate
