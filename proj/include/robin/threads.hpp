#pragma once

namespace robin {

// Execution mode for the data-parallel kernels.  Serial runs the identical
// enumeration on one thread and is kept as the reference for tests and
// benchmarks; results are bit-identical either way.
enum class Exec { Serial, Parallel };

// Worker-thread budget for the parallel kernels.  Defaults to the OpenMP
// maximum, capped by the ROBIN_GAPS_THREADS environment variable when that is
// set to a positive integer.  All kernels produce identical results for any
// thread count; the cap only limits resource use.
int effective_threads();

// Overrides the thread budget for the current process (0 restores the
// environment-derived default).  Used by the verification suite to compare
// runs at different thread counts.
void set_thread_override(int n);

} // namespace robin
