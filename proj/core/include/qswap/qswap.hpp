#pragma once

#include "qswap/error.hpp"
#include "qswap/linalg.hpp"
#include "qswap/measures.hpp"
#include "qswap/separability.hpp"
#include "qswap/states.hpp"
#include "qswap/swap.hpp"
#include "qswap/teleport.hpp"
