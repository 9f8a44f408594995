#pragma once

// Dynamic unary encoding: the per-length bit-string permutation, its cycle
// structure, the XOR orbit combinator and the two alternate codecs.

#include "due/altcodec.hpp"
#include "due/bitstring.hpp"
#include "due/codec.hpp"
#include "due/cycle_on.hpp"
#include "due/cycles.hpp"
#include "due/error.hpp"
#include "due/goldens.hpp"
