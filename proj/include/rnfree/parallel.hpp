#pragma once

#include <condition_variable>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "rnfree/ints.hpp"

namespace rnfree::parallel {

// Computes units [first_unit, num_units) with a worker pool and hands results
// to `commit` strictly in unit order on the calling thread, so output files
// and summaries are identical regardless of scheduling. The look-ahead window
// bounds how far workers may run past the commit frontier.
template <typename Result>
void run_units_ordered(u64 num_units, u64 first_unit, unsigned jobs,
                       const std::function<Result(u64)>& work,
                       const std::function<void(u64, Result&&)>& commit) {
    if (first_unit >= num_units) return;
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    if (jobs == 1) {
        for (u64 u = first_unit; u < num_units; ++u) commit(u, work(u));
        return;
    }

    std::mutex mu;
    std::condition_variable cv_done;   // signals the committer
    std::condition_variable cv_window; // throttles runaway workers
    std::map<u64, Result> done;
    u64 next = first_unit;
    u64 committed = first_unit; // next unit to commit
    const u64 window = static_cast<u64>(jobs) * 4;
    std::exception_ptr failure;

    auto worker = [&] {
        while (true) {
            u64 u;
            {
                std::unique_lock<std::mutex> lock(mu);
                cv_window.wait(lock, [&] { return failure || next < committed + window; });
                if (failure || next >= num_units) return;
                u = next++;
            }
            try {
                Result r = work(u);
                std::lock_guard<std::mutex> lock(mu);
                done.emplace(u, std::move(r));
                cv_done.notify_one();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                cv_done.notify_one();
                cv_window.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);

    {
        std::unique_lock<std::mutex> lock(mu);
        while (committed < num_units) {
            cv_done.wait(lock, [&] { return failure || done.count(committed) > 0; });
            if (failure) break;
            Result r = std::move(done.at(committed));
            done.erase(committed);
            const u64 u = committed;
            lock.unlock();
            commit(u, std::move(r));
            lock.lock();
            ++committed;
            cv_window.notify_all();
        }
        if (failure) cv_window.notify_all();
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace rnfree::parallel
