#pragma once

// Exact incremental row reduction over the rationals. Vectors are sparse maps
// keyed by an ordered column type; the pivot of a row is its smallest column,
// so the reduction is deterministic. Every stored row remembers which linear
// combination of inserted vectors produced it, which gives certificates for
// span membership and kernel vectors for free.

#include "tdo/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace tdo {

template <class Key>
using SparseVec = std::map<Key, Rational>;

/// Combination of inserted vectors, indexed by insertion order.
using Combination = std::map<std::size_t, Rational>;

template <class Key>
void axpy(SparseVec<Key>& y, const Rational& a, const SparseVec<Key>& x)
{
    if (a == 0)
        return;
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.try_emplace(k, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

inline void axpy(Combination& y, const Rational& a, const Combination& x) { axpy<std::size_t>(y, a, x); }

template <class Key>
class Echelon {
public:
    struct Reduction {
        SparseVec<Key> residual;
        Combination combo; // residual = v - sum combo[i] * inserted[i]
    };

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return count_; }

    /// Reduces v against the current basis.
    Reduction reduce(SparseVec<Key> v) const
    {
        Reduction red;
        red.residual = std::move(v);
        auto it = red.residual.begin();
        while (it != red.residual.end()) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            const Key col = it->first;
            const Rational f = it->second;
            axpy(red.residual, Rational(-f), row->second.vec);
            axpy(red.combo, f, row->second.combo);
            it = red.residual.upper_bound(col);
        }
        return red;
    }

    bool contains(const SparseVec<Key>& v) const { return reduce(v).residual.empty(); }

    /// Coefficients c with v = sum c[i] * inserted[i], if v is in the span.
    std::optional<Combination> certificate(const SparseVec<Key>& v) const
    {
        auto red = reduce(v);
        if (!red.residual.empty())
            return std::nullopt;
        return red.combo;
    }

    /// Inserts v. Returns the kernel relation (a combination of inserted
    /// vectors summing to zero, including v itself) if v was dependent.
    std::optional<Combination> insert(const SparseVec<Key>& v)
    {
        const std::size_t id = count_++;
        auto red = reduce(v);
        Combination self;
        self[id] = 1;
        if (red.residual.empty()) {
            Combination rel = std::move(self);
            axpy(rel, Rational(-1), red.combo);
            return rel;
        }
        Combination combo = std::move(self);
        axpy(combo, Rational(-1), red.combo);
        const Key pivot = red.residual.begin()->first;
        const Rational inv = 1 / red.residual.begin()->second;
        for (auto& [k, x] : red.residual)
            x *= inv;
        for (auto& [k, x] : combo)
            x *= inv;
        rows_.emplace(pivot, Row{std::move(red.residual), std::move(combo)});
        return std::nullopt;
    }

    std::vector<Key> pivots() const
    {
        std::vector<Key> out;
        for (const auto& [k, r] : rows_)
            out.push_back(k);
        return out;
    }

private:
    struct Row {
        SparseVec<Key> vec;
        Combination combo;
    };
    std::map<Key, Row> rows_;
    std::size_t count_ = 0;
};

/// Kernel of the linear map sending basis vector i to images[i]; each kernel
/// vector is returned as coefficients over the domain basis.
template <class Key>
std::vector<Combination> kernel(const std::vector<SparseVec<Key>>& images)
{
    Echelon<Key> ech;
    std::vector<Combination> out;
    for (const auto& img : images)
        if (auto rel = ech.insert(img))
            out.push_back(std::move(*rel));
    return out;
}

template <class Key>
std::size_t rank_of(const std::vector<SparseVec<Key>>& vecs)
{
    Echelon<Key> ech;
    for (const auto& v : vecs)
        ech.insert(v);
    return ech.rank();
}

} // namespace tdo
