#pragma once

#define ALIGNGAIN_VERSION "0.1.0"

namespace aligngain {

inline const char* version() { return ALIGNGAIN_VERSION; }

} // namespace aligngain
