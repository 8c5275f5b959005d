#pragma once

#include <cstddef>
#include <functional>

namespace machh {

/// Worker count for a request; 0 means one per hardware thread.
unsigned resolve_threads(unsigned requested);

/// Runs body(i) for i in [0, n) on up to `threads` workers.
///
/// Work is handed out by an atomic counter, so callers must write results
/// into per-index slots. If any call throws, the exception with the
/// smallest index is rethrown after all workers stop.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace machh
