#pragma once

#include "nilmod/errors.hpp"
#include "nilmod/limits.hpp"
#include "nilmod/element_set.hpp"
#include "nilmod/ring.hpp"
#include "nilmod/module.hpp"
#include "nilmod/lattice.hpp"
#include "nilmod/ring_ideals.hpp"
#include "nilmod/nilpotency.hpp"
#include "nilmod/primeness.hpp"
#include "nilmod/structure.hpp"
#include "nilmod/description.hpp"
#include "nilmod/serialize.hpp"
#include "nilmod/corpus.hpp"
