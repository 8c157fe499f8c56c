#pragma once

#include "locus/catalog.hpp"
#include "locus/errors.hpp"
#include "locus/field.hpp"
#include "locus/json_io.hpp"
#include "locus/linalg.hpp"
#include "locus/localization.hpp"
#include "locus/partition.hpp"
#include "locus/weighted_set.hpp"
