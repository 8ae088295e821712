#pragma once

// Hand-rolled generators and independent oracles shared by the unit tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gl3hc/gl3hc.hpp"

namespace gl3hc::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long bound = 30)
    {
        return Rational(integer(-bound, bound), integer(1, bound));
    }

    Rational nonzero(long bound = 30)
    {
        Rational r;
        while (r.is_zero()) {
            r = rational(bound);
        }
        return r;
    }

    std::vector<Rational> coefficients(std::size_t n, long bound = 9)
    {
        std::vector<Rational> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(rational(bound));
        }
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Generic point for a list of set sizes; q pinned when given.
inline Sample generic(const std::vector<std::size_t>& shape, std::uint64_t seed, std::optional<Rational> q = {})
{
    Config cfg;
    cfg.seed = seed;
    cfg.q = std::move(q);
    return sample_generic(shape, cfg);
}

/// Leibniz expansion; no pivoting, no shared code with the library determinant.
inline Rational leibniz(const std::vector<std::vector<Rational>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        Rational term(inversions % 2 == 0 ? 1 : -1);
        for (std::size_t i = 0; i < n; ++i) {
            term *= m[i][perm[i]];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// The Izergin determinant in its original product-times-determinant form:
/// prod(q x_i - y_j / q) / prod_{i<j}(x_i - x_j)(y_j - y_i) * det[(q - 1/q) / ((x_i - y_j)(q x_i - y_j / q))].
/// Undefined where some q x_i = y_j / q.
inline Rational izergin_original(const Rational& q, const std::vector<Rational>& x, const std::vector<Rational>& y)
{
    const Rational qi = q.inverse();
    const std::size_t n = x.size();
    Rational num(1);
    Rational den(1);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational h = q * x[i] - qi * y[j];
            num *= h;
            m[i][j] = (q - qi) / ((x[i] - y[j]) * h);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            den *= (x[i] - x[j]) * (y[j] - y[i]);
        }
    }
    return num / den * leibniz(m);
}

/// Same function with the product pulled into the rows, so it stays defined
/// where q x_i = y_j / q; expanded by Leibniz.
inline Rational izergin_oracle(const Rational& q, const std::vector<Rational>& x, const std::vector<Rational>& y)
{
    const Rational qi = q.inverse();
    const std::size_t n = x.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational entry = (q - qi) / (x[i] - y[j]);
            for (std::size_t l = 0; l < n; ++l) {
                if (l != j) {
                    entry *= q * x[i] - qi * y[l];
                }
            }
            m[i][j] = entry;
        }
    }
    Rational den(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            den *= (x[i] - x[j]) * (y[j] - y[i]);
        }
    }
    return leibniz(m) / den;
}

inline Rational f_oracle(const Rational& q, const Rational& u, const Rational& v)
{
    return (q * u - v / q) / (u - v);
}

inline Rational g_oracle(const Rational& q, const Rational& u, const Rational& v)
{
    return (q - q.inverse()) / (u - v);
}

inline Rational fprod_oracle(const Rational& q, const std::vector<Rational>& us, const std::vector<Rational>& vs)
{
    Rational out(1);
    for (const auto& u : us) {
        for (const auto& v : vs) {
            out *= f_oracle(q, u, v);
        }
    }
    return out;
}

inline Rational prod(const std::vector<Rational>& v)
{
    Rational out(1);
    for (const auto& x : v) {
        out *= x;
    }
    return out;
}

/// Bitmask subsets of {0..n-1} of size k, split into (chosen, rest).
template <class Fn>
void bitmask_splits(const std::vector<Rational>& set, std::size_t k, Fn&& fn)
{
    const std::size_t n = set.size();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) {
            continue;
        }
        std::vector<Rational> in;
        std::vector<Rational> out;
        for (std::size_t i = 0; i < n; ++i) {
            ((mask >> i) & 1U ? in : out).push_back(set[i]);
        }
        fn(in, out);
    }
}

} // namespace gl3hc::testing
