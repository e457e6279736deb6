#pragma once

namespace glassnet {

/// Selects the OpenMP kernel or its serial reference. Results are identical.
enum class Execution { serial, parallel };

}  // namespace glassnet
