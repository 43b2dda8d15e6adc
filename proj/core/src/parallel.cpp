#include "trace_sharp/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace trace_sharp::parallel {

namespace {
std::atomic<unsigned> g_max_threads{0};
}

void set_max_threads(unsigned count) { g_max_threads.store(count); }

unsigned max_threads() {
    unsigned m = g_max_threads.load();
    if (m == 0) m = std::thread::hardware_concurrency();
    return m == 0 ? 1 : m;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t workers =
        std::min<std::size_t>(max_threads(), count == 0 ? 1 : count);
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace trace_sharp::parallel
