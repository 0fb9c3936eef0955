#ifndef ZPAT_PARALLEL_HPP
#define ZPAT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zpat {

inline int default_threads()
{
    const unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : static_cast<int>(h);
}

/// Calls f(i) for i in [0, count) on up to `threads` workers. Work is handed
/// out dynamically; callers write results into slot i, so output order never
/// depends on scheduling. The first exception thrown is rethrown.
template <typename F>
void parallel_for(std::size_t count, int threads, F &&f)
{
    if (threads <= 0) threads = default_threads();
    threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                next = count;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace zpat

#endif // ZPAT_PARALLEL_HPP
