#pragma once

#include "g2kit/form.hpp"

namespace g2kit {

/// The standard G2 3-form
/// e127 + e135 - e146 - e236 - e245 + e347 + e567 on R^7.
Form omega3_form();

}  // namespace g2kit
