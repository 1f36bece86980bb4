#pragma once

// Fourier transform in the last variable:
//   convention +1:  Q_{n+1} -> P_{n+1},  P_{n+1} -> -Q_{n+1}
//   convention -1:  Q_{n+1} -> -P_{n+1}, P_{n+1} ->  Q_{n+1}   (the inverse)

#include "tdo/weyl.hpp"

#include <vector>

namespace tdo {

struct ReflectionSpec {
    /// 1-based indices of reflected variables; empty means {n+1}, the only supported choice.
    std::vector<std::size_t> reflected_indices;
    int convention_sign = 1;

    ReflectionSpec inverse() const { return {reflected_indices, -convention_sign}; }
};

inline void validate_reflection(const ReflectionSpec& spec, std::size_t n)
{
    if (spec.convention_sign != 1 && spec.convention_sign != -1)
        throw StructuralError("reflection convention sign must be +1 or -1");
    if (!spec.reflected_indices.empty() &&
        !(spec.reflected_indices.size() == 1 && spec.reflected_indices.front() == n + 1))
        throw StructuralError("only the last variable can be reflected");
}

inline WeylElement fourier_I(const WeylElement& a, const ReflectionSpec& spec = {})
{
    const std::size_t n = a.rank();
    validate_reflection(spec, n);
    const Rational s = spec.convention_sign;
    WeylElement out(n);
    for (const auto& [key, c] : a.terms()) {
        const std::int64_t qa = key.mu.last();
        const std::int64_t pb = key.nu.last();
        if (qa < 0)
            throw PreconditionError("Fourier transform of a Laurent exponent in the reflected variable");
        MultiIndex mu = key.mu, nu = key.nu;
        mu[n] = 0;
        nu[n] = 0;
        // Q^a P^b  ->  (sP)^a (-sQ)^b
        Rational sign = 1;
        for (std::int64_t k = 0; k < qa; ++k)
            sign *= s;
        for (std::int64_t k = 0; k < pb; ++k)
            sign *= -s;
        WeylElement rest = WeylElement::monomial(n, mu, nu, c * sign);
        WeylElement swapped = WeylElement::p(n, n + 1, qa) * WeylElement::q(n, n + 1, pb);
        out += rest * swapped;
    }
    return out;
}

inline WeylElement fourier_I_inverse(const WeylElement& a, const ReflectionSpec& spec = {})
{
    return fourier_I(a, spec.inverse());
}

} // namespace tdo
