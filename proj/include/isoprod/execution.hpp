#pragma once

namespace isoprod {

/// Selects between the OpenMP kernels and their serial reference loops.
/// Both produce identical results; only wall time differs.
enum class Execution { kSerial, kParallel };

}  // namespace isoprod
