#pragma once

#include "cnet/core.hpp"
#include "cnet/notation.hpp"
#include "cnet/io.hpp"
#include "cnet/constructions.hpp"
#include "cnet/reduction.hpp"
#include "cnet/zoo.hpp"
#include "cnet/vas.hpp"
#include "cnet/pumping.hpp"
#include "cnet/forms.hpp"
#include "cnet/compare.hpp"
#include "cnet/refute.hpp"
#include "cnet/random.hpp"
#include "cnet/refs.hpp"
