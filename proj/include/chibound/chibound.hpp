#pragma once

#include "chibound/bitset.hpp"
#include "chibound/cograph.hpp"
#include "chibound/colouring.hpp"
#include "chibound/decomposition.hpp"
#include "chibound/engine.hpp"
#include "chibound/errors.hpp"
#include "chibound/fuzz.hpp"
#include "chibound/generators.hpp"
#include "chibound/graph.hpp"
#include "chibound/io.hpp"
#include "chibound/oracle.hpp"
#include "chibound/recognition.hpp"
#include "chibound/witness.hpp"
