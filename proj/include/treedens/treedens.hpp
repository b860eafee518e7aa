#pragma once

// Umbrella include for the whole library.

#include "treedens/cli.hpp"
#include "treedens/constructions.hpp"
#include "treedens/counting.hpp"
#include "treedens/enumeration.hpp"
#include "treedens/errors.hpp"
#include "treedens/extremal.hpp"
#include "treedens/numeric.hpp"
#include "treedens/tree.hpp"
#include "treedens/verify.hpp"
