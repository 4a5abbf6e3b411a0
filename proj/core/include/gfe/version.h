#pragma once

namespace gfe {

// Code identifier written into run directories and checkpoint metadata.
const char* version_string();

}  // namespace gfe
