#pragma once

#include "tdo/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace tdo {

/// Exponent vector of length n+1 (slots 0..n-1 are Q_1..Q_n, slot n is Q_{n+1}).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t length) : e_(length, 0) {}
    MultiIndex(std::initializer_list<std::int64_t> init) : e_(init) {}
    explicit MultiIndex(std::vector<std::int64_t> e) : e_(std::move(e)) {}

    /// Exponent vector with a single entry k at 1-based variable index i.
    static MultiIndex unit(std::size_t length, std::size_t i, std::int64_t k = 1)
    {
        if (i < 1 || i > length)
            throw StructuralError("variable index out of range");
        MultiIndex m(length);
        m.e_[i - 1] = k;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    /// The ambient n (size is n+1).
    std::size_t rank() const { return e_.empty() ? 0 : e_.size() - 1; }

    std::int64_t operator[](std::size_t k) const { return e_[k]; }
    std::int64_t& operator[](std::size_t k) { return e_[k]; }
    /// 1-based access matching Q_1..Q_{n+1}.
    std::int64_t at(std::size_t i) const { return e_.at(i - 1); }

    std::int64_t last() const { return e_.back(); }

    /// Sum of the first n entries.
    std::int64_t front_sum() const
    {
        std::int64_t s = 0;
        for (std::size_t k = 0; k + 1 < e_.size(); ++k)
            s = checked_add(s, e_[k]);
        return s;
    }

    std::int64_t sum() const { return checked_add(front_sum(), e_.empty() ? 0 : e_.back()); }

    bool all_nonnegative() const
    {
        for (auto x : e_)
            if (x < 0)
                return false;
        return true;
    }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }
    const std::vector<std::int64_t>& values() const { return e_; }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b)
    {
        check_same(a, b);
        MultiIndex r(a.size());
        for (std::size_t k = 0; k < a.size(); ++k)
            r.e_[k] = checked_add(a.e_[k], b.e_[k]);
        return r;
    }

    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b)
    {
        check_same(a, b);
        MultiIndex r(a.size());
        for (std::size_t k = 0; k < a.size(); ++k)
            r.e_[k] = checked_sub(a.e_[k], b.e_[k]);
        return r;
    }

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    friend std::ostream& operator<<(std::ostream& os, const MultiIndex& m) { return os << m.str(); }

    std::string str() const
    {
        std::string s = "[";
        for (std::size_t k = 0; k < e_.size(); ++k) {
            if (k)
                s += ",";
            s += std::to_string(e_[k]);
        }
        return s + "]";
    }

private:
    static void check_same(const MultiIndex& a, const MultiIndex& b)
    {
        if (a.size() != b.size())
            throw StructuralError("multi-index length mismatch");
    }

    std::vector<std::int64_t> e_;
};

} // namespace tdo
