#pragma once

#include <functional>

namespace hibi {

/// Worker count for exhaustive scans: $HIBI_WORKERS when set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
int default_workers();

/// Runs body(0..tasks-1) on up to `workers` threads. The first exception
/// thrown by any task is rethrown on the calling thread.
void parallel_for(int tasks, int workers, const std::function<void(int)>& body);

}  // namespace hibi
