#pragma once

namespace tanscroll {

// Kernels that loop over independent work items (minor enumeration, seeded
// trials) come in two flavours. `serial` is the reference implementation kept
// for testing; `parallel` distributes the same items over OpenMP threads and
// returns identical results.
enum class Execution { serial, parallel };

}  // namespace tanscroll
