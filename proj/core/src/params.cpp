#include "gl3hc/params.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gl3hc {

namespace {

constexpr int kMaxDrawsPerValue = 2000;
constexpr long kMaxAbsQ = 9;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rational draw(std::mt19937_64& rng, long max_abs)
{
    std::uniform_int_distribution<long> dist(1, max_abs);
    const long n = dist(rng);
    const long d = dist(rng);
    return Rational(n, d);
}

// Even powers q^{-8}..q^{8} other than q^0.
std::vector<Rational> orbit_ratios(const Rational& q)
{
    std::vector<Rational> out;
    for (int k = -8; k <= 8; k += 2) {
        if (k != 0) {
            out.push_back(q.pow(k));
        }
    }
    return out;
}

bool compatible(const Rational& v, const std::vector<Rational>& accepted, const std::vector<Rational>& ratios)
{
    for (const auto& u : accepted) {
        if (u == v) {
            return false;
        }
        if (u.is_zero() || v.is_zero()) {
            continue;
        }
        const Rational r = u / v;
        if (std::find(ratios.begin(), ratios.end(), r) != ratios.end()) {
            return false;
        }
    }
    return true;
}

} // namespace

std::pair<ParameterSet, ParameterSet> complement(const ParameterSet& set, const std::vector<std::size_t>& indices)
{
    std::vector<bool> chosen(set.size(), false);
    for (auto i : indices) {
        if (i >= set.size()) {
            throw std::out_of_range("partition index " + std::to_string(i) + " out of range for set of size "
                                    + std::to_string(set.size()));
        }
        chosen[i] = true;
    }
    ParameterSet first;
    ParameterSet rest;
    for (auto i : indices) {
        first.push_back(set[i]);
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (!chosen[i]) {
            rest.push_back(set[i]);
        }
    }
    return {first, rest};
}

ParameterSet parse_set(std::string_view text)
{
    ParameterSet out;
    if (text.find_first_not_of(" \t") == std::string_view::npos) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        item = b == std::string_view::npos ? std::string_view() : item.substr(b, e - b + 1);
        out.push_back(Rational::parse(item));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string format_set(const ParameterSet& set)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < set.size(); ++i) {
        os << (i ? "," : "") << set[i].str();
    }
    return os.str();
}

bool pairwise_distinct(const ParameterSet& set)
{
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (set[i] == set[j]) {
                return false;
            }
        }
    }
    return true;
}

void validate_q(const Rational& q)
{
    if (q.is_zero() || q == Rational(1) || q == Rational(-1)) {
        throw std::invalid_argument("q must not be 0, 1 or -1 (got " + q.str() + ")");
    }
}

bool is_generic(const std::vector<Rational>& values, const Rational& q)
{
    if (q.is_zero() || q == Rational(1) || q == Rational(-1)) {
        return false;
    }
    const auto ratios = orbit_ratios(q);
    std::vector<Rational> accepted;
    for (const auto& v : values) {
        if (!compatible(v, accepted, ratios)) {
            return false;
        }
        accepted.push_back(v);
    }
    return true;
}

Sample sample_generic(const std::vector<std::size_t>& shape, const Config& cfg)
{
    if (cfg.max_abs < 1) {
        throw std::invalid_argument("max_abs must be positive");
    }
    std::mt19937_64 rng(cfg.seed);
    Rational q;
    if (cfg.q) {
        validate_q(*cfg.q);
        q = *cfg.q;
    } else {
        const long bound = std::min(cfg.max_abs, kMaxAbsQ);
        bool found = false;
        for (int attempt = 0; attempt < kMaxDrawsPerValue && !found; ++attempt) {
            q = draw(rng, bound);
            found = q != Rational(1);
        }
        if (!found) {
            throw SamplerExhausted("no admissible q with max_abs = " + std::to_string(cfg.max_abs));
        }
    }
    const auto ratios = orbit_ratios(q);
    std::vector<Rational> accepted;
    Sample out;
    out.q = q;
    for (auto size : shape) {
        ParameterSet set;
        for (std::size_t i = 0; i < size; ++i) {
            bool placed = false;
            for (int attempt = 0; attempt < kMaxDrawsPerValue; ++attempt) {
                Rational v = draw(rng, cfg.max_abs);
                if (compatible(v, accepted, ratios)) {
                    accepted.push_back(v);
                    set.push_back(std::move(v));
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                throw SamplerExhausted("sampler exhausted after " + std::to_string(accepted.size())
                                       + " generic values (max_abs = " + std::to_string(cfg.max_abs) + ")");
            }
        }
        out.sets.push_back(std::move(set));
    }
    return out;
}

std::uint64_t case_seed(std::uint64_t global_seed, std::string_view key, const std::vector<std::size_t>& shape,
                        std::uint64_t trial)
{
    std::uint64_t h = splitmix64(global_seed ^ fnv1a(key));
    for (auto c : shape) {
        h = splitmix64(h ^ static_cast<std::uint64_t>(c));
    }
    return splitmix64(h ^ trial);
}

} // namespace gl3hc
