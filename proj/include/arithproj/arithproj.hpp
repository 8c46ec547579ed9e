#pragma once

#include "arithproj/chain.hpp"
#include "arithproj/constructions.hpp"
#include "arithproj/error.hpp"
#include "arithproj/exact.hpp"
#include "arithproj/group.hpp"
#include "arithproj/instance.hpp"
#include "arithproj/kakeya.hpp"
#include "arithproj/proof.hpp"
#include "arithproj/random.hpp"
#include "arithproj/search.hpp"
