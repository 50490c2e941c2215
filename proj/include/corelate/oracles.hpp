#pragma once

// Brute-force reference computations. Each one deliberately avoids the
// library's fast path for the quantity it checks (no union-find, no
// restricted-growth strings, no Kleene iteration).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "corelate/fincorel.hpp"
#include "corelate/logic.hpp"

namespace corelate::oracle {

/// Surjections n -> m, by scanning all m^n tables.
inline std::size_t surjection_count(std::size_t n, std::size_t m) {
    if (m == 0) return n == 0 ? 1 : 0;
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= m;
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        std::vector<bool> hit(m, false);
        for (std::size_t k = 0; k < n; ++k) {
            hit[c % m] = true;
            c /= m;
        }
        bool all = true;
        for (bool h : hit) all = all && h;
        if (all) ++count;
    }
    return count;
}

/// Bell numbers via the Bell triangle.
inline std::size_t bell(std::size_t k) {
    std::vector<std::size_t> row{1};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> next{row.back()};
        for (std::size_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

inline std::size_t catalan(std::size_t k) {
    std::size_t c = 1;
    for (std::size_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

/// Corelation composite from the full boolean relation on m + n + p, closed
/// by Warshall's algorithm and restricted to the outer boundary.
inline Corelation corel_compose(const Corelation& r, const Corelation& s) {
    const std::size_t m = r.dom(), n = r.cod(), p = s.cod(), total = m + n + p;
    std::vector<std::vector<bool>> rel(total, std::vector<bool>(total, false));
    for (std::size_t x = 0; x < total; ++x) rel[x][x] = true;
    for (std::size_t x = 0; x < m + n; ++x)
        for (std::size_t y = 0; y < m + n; ++y)
            if (r.partition().same_class(x, y)) rel[x][y] = true;
    for (std::size_t x = 0; x < n + p; ++x)
        for (std::size_t y = 0; y < n + p; ++y)
            if (s.partition().same_class(x, y)) rel[m + x][m + y] = true;
    for (std::size_t k = 0; k < total; ++k)
        for (std::size_t x = 0; x < total; ++x)
            if (rel[x][k])
                for (std::size_t y = 0; y < total; ++y)
                    if (rel[k][y]) rel[x][y] = true;
    std::vector<std::size_t> outer;
    for (std::size_t i = 0; i < m; ++i) outer.push_back(i);
    for (std::size_t k = 0; k < p; ++k) outer.push_back(m + n + k);
    // Label each outer element by the first outer element related to it.
    std::vector<std::size_t> labels(outer.size());
    for (std::size_t a = 0; a < outer.size(); ++a) {
        labels[a] = a;
        for (std::size_t b = 0; b < a; ++b)
            if (rel[outer[a]][outer[b]]) {
                labels[a] = labels[b];
                break;
            }
    }
    return {m, p, Partition::from_labels(labels)};
}

struct FixpointScan {
    std::vector<Pred> fixed_points;
    bool has_least = false, has_greatest = false;
    Pred least, greatest;
};

/// Scans all 2^size predicates for fixed points of a unary map; size <= 20.
inline FixpointScan scan_fixpoints(const std::function<Pred(const Pred&)>& f, std::size_t size) {
    FixpointScan scan;
    const std::uint64_t total = std::uint64_t{1} << size;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Pred a = Pred::from_mask(size, mask);
        if (f(a) == a) scan.fixed_points.push_back(a);
    }
    for (const Pred& cand : scan.fixed_points) {
        bool below = true, above = true;
        for (const Pred& other : scan.fixed_points) {
            below = below && cand.subset_of(other);
            above = above && other.subset_of(cand);
        }
        if (below) {
            scan.has_least = true;
            scan.least = cand;
        }
        if (above) {
            scan.has_greatest = true;
            scan.greatest = cand;
        }
    }
    return scan;
}

} // namespace corelate::oracle
