#pragma once

// Umbrella header.

#include "bcells/signed_permutation.hpp"
#include "bcells/shapes.hpp"
#include "bcells/tableau.hpp"
#include "bcells/insertion.hpp"
#include "bcells/cycles.hpp"
#include "bcells/cells.hpp"
#include "bcells/laurent.hpp"
#include "bcells/hecke.hpp"
#include "bcells/io.hpp"
#include "bcells/verify.hpp"
