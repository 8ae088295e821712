#include "gl3hc/partitions.hpp"

#include <numeric>

namespace gl3hc {

CombinationStream::CombinationStream(std::size_t n, std::size_t k) : n_(n), current_(k)
{
    if (k > n) {
        done_ = true;
        return;
    }
    std::iota(current_.begin(), current_.end(), std::size_t{0});
}

void CombinationStream::advance()
{
    if (done_) {
        return;
    }
    const std::size_t k = current_.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (current_[i] < n_ - k + i) {
            ++current_[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                current_[j] = current_[j - 1] + 1;
            }
            return;
        }
    }
    done_ = true;
}

PartitionStream::PartitionStream(std::size_t n, std::vector<std::size_t> signature)
    : n_(n), signature_(std::move(signature))
{
    const std::size_t total = std::accumulate(signature_.begin(), signature_.end(), std::size_t{0});
    if (total != n_) {
        throw CardinalityError("partition signature sums to " + std::to_string(total) + ", set has "
                               + std::to_string(n_) + " elements");
    }
    std::vector<std::size_t> all(n_);
    std::iota(all.begin(), all.end(), std::size_t{0});
    pools_.assign(signature_.size() + 1, {});
    pools_[0] = std::move(all);
    parts_.assign(signature_.size(), {});
    streams_.reserve(signature_.size());
    for (std::size_t level = 0; level < signature_.size(); ++level) {
        streams_.emplace_back(0, 0);
    }
    rebuild_from(0, true);
}

// Recompute parts from `level` on. Streams below `level` are kept; the stream
// at `level` is kept unless restart is set; deeper streams always restart.
void PartitionStream::rebuild_from(std::size_t level, bool restart)
{
    for (std::size_t l = level; l < signature_.size(); ++l) {
        if (l != level || restart) {
            streams_[l] = CombinationStream(pools_[l].size(), signature_[l]);
        }
        std::vector<bool> taken(pools_[l].size(), false);
        parts_[l].clear();
        for (auto p : streams_[l].indices()) {
            taken[p] = true;
            parts_[l].push_back(pools_[l][p]);
        }
        pools_[l + 1].clear();
        for (std::size_t i = 0; i < pools_[l].size(); ++i) {
            if (!taken[i]) {
                pools_[l + 1].push_back(pools_[l][i]);
            }
        }
    }
}

void PartitionStream::advance()
{
    if (done_) {
        return;
    }
    std::size_t level = signature_.size();
    while (level > 0) {
        --level;
        streams_[level].advance();
        if (!streams_[level].done()) {
            rebuild_from(level, false);
            return;
        }
    }
    done_ = true;
}

TwoSetPartitionStream::TwoSetPartitionStream(std::size_t n1, std::vector<std::size_t> sig1, std::size_t n2,
                                             std::vector<std::size_t> sig2)
    : n2_(n2), sig2_(sig2), first_(n1, std::move(sig1)), second_(n2, std::move(sig2))
{
}

void TwoSetPartitionStream::advance()
{
    second_.advance();
    if (second_.done()) {
        first_.advance();
        second_ = PartitionStream(n2_, sig2_);
    }
}

std::uint64_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::uint64_t multinomial(const std::vector<std::size_t>& signature)
{
    std::uint64_t r = 1;
    std::size_t n = 0;
    for (auto k : signature) {
        n += k;
        r *= binomial(n, k);
    }
    return r;
}

} // namespace gl3hc
