#pragma once

// Umbrella header for the whole library.

#include "entail/errors.hpp"
#include "entail/forms.hpp"
#include "entail/grundy.hpp"
#include "entail/nimber_set.hpp"
#include "entail/nimstring.hpp"
#include "entail/notation.hpp"
#include "entail/outcomes.hpp"
#include "entail/topentails.hpp"
