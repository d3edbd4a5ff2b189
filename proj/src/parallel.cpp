#include "tttk/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace tttk {

std::size_t effective_threads(std::size_t requested) {
    std::size_t n = requested;
    if (n == 0) {
        n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
    }
    if (const char* env = std::getenv("TTTK_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    }
    return std::max<std::size_t>(n, 1);
}

std::size_t chunk_count(std::size_t count, std::size_t n_threads) {
    return std::min(std::max<std::size_t>(effective_threads(n_threads), 1), std::max<std::size_t>(count, 1));
}

void parallel_chunks(std::size_t count, std::size_t n_threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (count == 0) return;
    const std::size_t nw = chunk_count(count, n_threads);
    if (nw == 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(nw);
    const std::size_t base = count / nw, rem = count % nw;
    std::size_t begin = 0;
    for (std::size_t c = 0; c < nw; ++c) {
        const std::size_t len = base + (c < rem ? 1 : 0);
        const std::size_t end = begin + len;
        workers.emplace_back([&, c, begin, end] {
            try {
                fn(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  std::size_t n_threads) {
    parallel_chunks(count, n_threads, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) fn(i);
    });
}

}  // namespace tttk
