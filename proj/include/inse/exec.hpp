#pragma once

namespace inse {

// Execution policy for the data-parallel kernels (relation composition,
// INLS grid evaluation, completion-image enumeration). The serial path is
// the reference implementation; tests assert both paths agree.
enum class exec_policy { serial, parallel };

} // namespace inse
