#pragma once

namespace facering {

/// Selects between the OpenMP kernels and their serial reference versions.
enum class Execution { Serial, Parallel };

}  // namespace facering
