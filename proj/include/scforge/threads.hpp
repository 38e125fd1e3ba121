#pragma once

#include <functional>

namespace scforge {

// Worker cap: min(hardware_concurrency, SCFORGE_THREADS if set).
int worker_count();

// Static block partition of [0, n); f(i) must be safe to run concurrently
// for distinct i. Runs inline when n is small or one worker is available.
void parallel_for(int n, const std::function<void(int)>& f);

} // namespace scforge
