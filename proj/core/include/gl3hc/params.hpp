#pragma once

// Bar-sets of spectral parameters, q-shifts, and the genericity sampler.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gl3hc/exactnum.hpp"

namespace gl3hc {

/// Ordered finite set of parameters over a scalar ring.
template <class S>
using Set = std::vector<S>;

using ParameterSet = Set<Rational>;

/// Multiply every element by q^k, keeping order.
template <class S>
Set<S> qshift(const Set<S>& set, int k, const Rational& q)
{
    const Rational factor = q.pow(k);
    Set<S> out;
    out.reserve(set.size());
    for (const auto& v : set) {
        out.push_back(v * S(factor));
    }
    return out;
}

/// {a, b}: concatenation, a's elements first.
template <class S>
Set<S> join(Set<S> a, const Set<S>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

template <class S, class... Rest>
Set<S> join(Set<S> a, const Set<S>& b, const Rest&... rest)
{
    return join(join(std::move(a), b), rest...);
}

/// Product of all elements; the empty product is 1.
template <class S>
S product(const Set<S>& set)
{
    S out(1);
    for (const auto& v : set) {
        out *= v;
    }
    return out;
}

/// Lift rational parameters into another scalar ring (exact embedding).
template <class S>
Set<S> lift(const ParameterSet& set)
{
    return Set<S>(set.begin(), set.end());
}

/// Split by 0-based index list I: (elements at I in order, the rest in order).
/// Throws std::out_of_range for an index beyond the set.
std::pair<ParameterSet, ParameterSet> complement(const ParameterSet& set, const std::vector<std::size_t>& indices);

/// Comma-separated rational literals; the empty string is the empty set.
ParameterSet parse_set(std::string_view text);
std::string format_set(const ParameterSet& set);

/// True when all elements are pairwise distinct.
bool pairwise_distinct(const ParameterSet& set);

struct Config {
    /// Pinned deformation parameter. When unset, q is sampled per case.
    std::optional<Rational> q;
    int laurent_window = LaurentSeries::kDefaultWindow;
    std::uint64_t seed = 0;
    long max_abs = 97;
};

/// Throws std::invalid_argument unless q is outside {0, 1, -1}.
void validate_q(const Rational& q);

/// Distinct values u != v never satisfy u = q^k v for even |k| <= 8, i.e. the
/// q^{-4..4} orbits of all values are pairwise disjoint.
bool is_generic(const std::vector<Rational>& values, const Rational& q);

struct Sample {
    std::vector<ParameterSet> sets;
    Rational q;
};

/// Positive rationals with numerator and denominator in [1, max_abs], one set
/// per requested cardinality, jointly generic. Deterministic in (shape, cfg).
/// Throws SamplerExhausted after a bounded number of rejected draws.
Sample sample_generic(const std::vector<std::size_t>& shape, const Config& cfg);

/// Stable per-case seed derived from the global seed and the case key.
std::uint64_t case_seed(std::uint64_t global_seed, std::string_view key,
                        const std::vector<std::size_t>& shape, std::uint64_t trial);

} // namespace gl3hc
