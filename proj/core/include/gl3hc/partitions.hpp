#pragma once

// Ordered partitions of a set into labeled parts of prescribed sizes.
//
// Enumeration order is lexicographic in the index subsets chosen for part I,
// then part II from what is left, and so on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gl3hc/errors.hpp"
#include "gl3hc/params.hpp"

namespace gl3hc {

/// k-subsets of {0..n-1} in lexicographic order.
class CombinationStream {
public:
    CombinationStream(std::size_t n, std::size_t k);

    [[nodiscard]] bool done() const { return done_; }
    [[nodiscard]] const std::vector<std::size_t>& indices() const { return current_; }
    void advance();

private:
    std::size_t n_;
    std::vector<std::size_t> current_;
    bool done_ = false;
};

/// Part index lists of one ordered partition of {0..n-1}.
using IndexPartition = std::vector<std::vector<std::size_t>>;

/// Lazy stream over all ordered partitions of {0..n-1} with the given part
/// sizes. Throws CardinalityError when the sizes do not sum to n.
class PartitionStream {
public:
    PartitionStream(std::size_t n, std::vector<std::size_t> signature);

    [[nodiscard]] bool done() const { return done_; }
    [[nodiscard]] const IndexPartition& current() const { return parts_; }
    void advance();

private:
    void rebuild_from(std::size_t level, bool restart);

    std::size_t n_;
    std::vector<std::size_t> signature_;
    std::vector<CombinationStream> streams_;
    std::vector<std::vector<std::size_t>> pools_;
    IndexPartition parts_;
    bool done_ = false;
};

/// Apply an index partition to concrete values.
template <class S>
std::vector<Set<S>> apply_partition(const Set<S>& set, const IndexPartition& parts)
{
    std::vector<Set<S>> out;
    out.reserve(parts.size());
    for (const auto& part : parts) {
        Set<S> values;
        values.reserve(part.size());
        for (auto i : part) {
            values.push_back(set[i]);
        }
        out.push_back(std::move(values));
    }
    return out;
}

/// Collect every ordered partition of `set` with the given signature.
template <class S>
std::vector<std::vector<Set<S>>> enumerate_partitions(const Set<S>& set, const std::vector<std::size_t>& signature)
{
    std::vector<std::vector<Set<S>>> out;
    for (PartitionStream ps(set.size(), signature); !ps.done(); ps.advance()) {
        out.push_back(apply_partition(set, ps.current()));
    }
    return out;
}

/// Cartesian product of the partition streams of two sets.
class TwoSetPartitionStream {
public:
    TwoSetPartitionStream(std::size_t n1, std::vector<std::size_t> sig1, std::size_t n2, std::vector<std::size_t> sig2);

    [[nodiscard]] bool done() const { return first_.done(); }
    [[nodiscard]] const IndexPartition& first() const { return first_.current(); }
    [[nodiscard]] const IndexPartition& second() const { return second_.current(); }
    void advance();

private:
    std::size_t n2_;
    std::vector<std::size_t> sig2_;
    PartitionStream first_;
    PartitionStream second_;
};

/// Calls fn(part_I, part_II) for every split of `set` with #part_I = k.
template <class S, class Fn>
void for_each_split(const Set<S>& set, std::size_t k, Fn&& fn)
{
    if (k > set.size()) {
        throw CardinalityError("split size " + std::to_string(k) + " exceeds set size " + std::to_string(set.size()));
    }
    Set<S> first;
    Set<S> second;
    std::vector<bool> chosen(set.size());
    for (CombinationStream cs(set.size(), k); !cs.done(); cs.advance()) {
        first.clear();
        second.clear();
        std::fill(chosen.begin(), chosen.end(), false);
        for (auto i : cs.indices()) {
            chosen[i] = true;
            first.push_back(set[i]);
        }
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (!chosen[i]) {
                second.push_back(set[i]);
            }
        }
        fn(static_cast<const Set<S>&>(first), static_cast<const Set<S>&>(second));
    }
}

/// Multinomial coefficient n! / prod(k_i!) for sum(k_i) = n.
std::uint64_t multinomial(const std::vector<std::size_t>& signature);
std::uint64_t binomial(std::size_t n, std::size_t k);

} // namespace gl3hc
