#include <algorithm>
#include <atomic>
#include <thread>

#include "gl3hc/verify.hpp"

namespace gl3hc {

namespace {

std::string case_key_text(const CaseKey& key)
{
    std::string text = key.identity_id;
    if (key.side) {
        text += '/';
        text += side_char(*key.side);
    }
    return text;
}

} // namespace

std::vector<CaseResult> run_cases(const std::vector<CaseKey>& keys, const Config& cfg, unsigned threads)
{
    std::vector<CaseResult> results(keys.size());
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, keys.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < keys.size(); i = next++) {
            const CaseKey& key = keys[i];
            const auto seed = case_seed(cfg.seed, case_key_text(key), key.shape, key.trial);
            results[i] = run_case(key.identity_id, key.side, key.shape, seed, cfg);
        }
    };
    if (threads <= 1) {
        worker();
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();
    return results;
}

Report make_report(std::string suite, const SuiteOptions& options, std::vector<CaseResult> cases)
{
    Report report{std::move(suite), options, std::move(cases), 0, 0, 0};
    for (const auto& c : report.cases) {
        switch (c.status()) {
        case CaseStatus::Pass: ++report.pass; break;
        case CaseStatus::Fail: ++report.fail; break;
        case CaseStatus::Error: ++report.error; break;
        }
    }
    return report;
}

Report run_suite(const SuiteOptions& options)
{
    const auto keys = plan_suite(options);
    return make_report(options.suite, options, run_cases(keys, options.cfg, options.threads));
}

} // namespace gl3hc
