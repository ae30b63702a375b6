#pragma once

namespace alcove {

// serial keeps the reference loops; parallel uses the OpenMP kernels.
enum class Exec { serial, parallel };

}  // namespace alcove
