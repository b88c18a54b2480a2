#pragma once

namespace autoheat {

/// Kernels with an OpenMP path also keep a serial loop. Both evaluate the
/// same terms and reduce them in the same order, so results are bitwise equal.
enum class Exec { Serial, Parallel };

}  // namespace autoheat
