#pragma once

namespace popa {

// Worker parallelism cap. Reads POPA_THREADS once (values < 1 are clamped to
// 1); defaults to the OpenMP thread count, or 1 when built without OpenMP.
int thread_count();

}  // namespace popa
