#pragma once

// Deeply nested univ dispatches recurse once per fuel unit in the worst
// case, which outgrows the default 8 MiB thread stack long before a 10^6
// budget does. Entry points run the real work on a thread with a large
// stack instead.

#include <functional>
#include <pthread.h>

namespace cwb {

namespace detail {

struct StackJob {
    std::function<int()> fn;
    int result = 1;
};

inline void* stack_job_entry(void* arg) {
    auto* job = static_cast<StackJob*>(arg);
    job->result = job->fn();
    return nullptr;
}

}  // namespace detail

inline int run_with_large_stack(std::function<int()> fn,
                                std::size_t stack_bytes = std::size_t{1} << 30) {
    detail::StackJob job{std::move(fn)};
    pthread_attr_t attr;
    pthread_attr_init(&attr);
    pthread_attr_setstacksize(&attr, stack_bytes);
    pthread_t thread;
    if (pthread_create(&thread, &attr, detail::stack_job_entry, &job) != 0) {
        pthread_attr_destroy(&attr);
        return job.fn();  // fall back to the current stack
    }
    pthread_join(thread, nullptr);
    pthread_attr_destroy(&attr);
    return job.result;
}

}  // namespace cwb
