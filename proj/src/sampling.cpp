#include "posetgen/sampling.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace posetgen {

namespace {

void check_args(int n, long long steps, long long count) {
    if (n < 1) throw std::invalid_argument("sample_posets: n must be positive");
    if (steps < 0) throw std::invalid_argument("sample_posets: negative step budget");
    if (count < 0) throw std::invalid_argument("sample_posets: negative sample count");
}

PosetKey one_sample(int n, long long steps, std::uint64_t base_seed, long long index) {
    return generate_poset({n, steps, derive_stream_seed(base_seed, static_cast<std::uint64_t>(index))});
}

} // namespace

SampleHistogram sample_posets(int n, long long steps, std::uint64_t base_seed, long long count, int jobs) {
    check_args(n, steps, count);
    if (jobs <= 1) {
        SampleHistogram hist(n);
        for (long long i = 0; i < count; ++i) hist.accumulate(one_sample(n, steps, base_seed, i));
        return hist;
    }

    std::atomic<long long> next{0};
    std::vector<SampleHistogram> partial(jobs, SampleHistogram(n));
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (;;) {
                long long i = next.fetch_add(1);
                if (i >= count) break;
                partial[w].accumulate(one_sample(n, steps, base_seed, i));
            }
        });
    }
    for (auto& t : workers) t.join();

    SampleHistogram hist(n);
    for (const auto& part : partial) hist.merge(part);
    return hist;
}

void for_each_sample(int n, long long steps, std::uint64_t base_seed, long long count, int jobs,
                     bool ordered, const std::function<void(long long, const PosetKey&)>& sink) {
    check_args(n, steps, count);
    if (jobs <= 1) {
        for (long long i = 0; i < count; ++i) sink(i, one_sample(n, steps, base_seed, i));
        return;
    }

    std::atomic<long long> next{0};
    std::mutex mutex;
    std::map<long long, PosetKey> pending; // ordered mode: buffer until contiguous
    long long emitted = 0;

    auto worker = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= count) break;
            PosetKey key = one_sample(n, steps, base_seed, i);
            std::unique_lock lock(mutex);
            if (!ordered) {
                sink(i, key);
                continue;
            }
            pending.emplace(i, std::move(key));
            while (!pending.empty() && pending.begin()->first == emitted) {
                sink(emitted, pending.begin()->second);
                pending.erase(pending.begin());
                ++emitted;
            }
        }
    };

    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) workers.emplace_back(worker);
    for (auto& t : workers) t.join();
}

} // namespace posetgen
