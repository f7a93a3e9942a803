#pragma once

#include <cstdint>
#include <functional>

namespace antibch {

// Worker count: set_thread_count() if called, else ANTIBCH_THREADS, else 1.
unsigned thread_count();
void set_thread_count(unsigned n);

// Runs body(i) for i in [0, tasks). Tasks are independent; callers store
// per-task results and merge them in task order, so the outcome does not
// depend on the worker count.
void parallel_tasks(std::uint64_t tasks, const std::function<void(std::uint64_t)>& body);

}  // namespace antibch
