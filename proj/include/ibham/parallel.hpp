#pragma once

namespace ibham {

// Kernels that scan grids or run independent restarts accept an execution
// policy. The serial path is the reference; the parallel path must produce
// bit-identical results (tests compare the two).
enum class Execution { serial, parallel };

}  // namespace ibham
