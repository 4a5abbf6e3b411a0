#include "gfe/version.h"

namespace gfe {

const char* version_string() { return "gfenet 0.1.0"; }

}  // namespace gfe
