#pragma once

#include <functional>

namespace msseg {

// Worker count for per-pixel sweeps. 1 (the default) runs everything on the
// calling thread and is bitwise reproducible; n <= 0 picks the hardware
// concurrency. Reads MSSEG_THREADS on first use unless set explicitly.
void set_threads(int n);
int thread_count();

// Splits [0, rows) into one contiguous row range per worker and runs
// fn(y0, y1, chunk) on each. Chunks are indexed 0..n-1 so callers can keep
// deterministic per-chunk partial results. Blocks until every chunk is done.
void parallel_rows(int rows, const std::function<void(int, int, int)>& fn);

int max_chunks();

}  // namespace msseg
