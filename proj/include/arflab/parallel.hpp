#pragma once

namespace arflab {

// Worker-pool width for the parallel sweeps: the ARFLAB_THREADS environment
// variable when set to a positive integer, otherwise the OpenMP default
// (1 in builds without OpenMP).
int configured_thread_count();

}  // namespace arflab
