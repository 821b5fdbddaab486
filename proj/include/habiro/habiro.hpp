#pragma once

// Umbrella header for the whole library.
#include "acceptance.hpp"
#include "basis.hpp"
#include "cyclotomic.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "evalx.hpp"
#include "format.hpp"
#include "frac.hpp"
#include "habiro_ring.hpp"
#include "integer.hpp"
#include "invariants.hpp"
#include "jones.hpp"
#include "json_io.hpp"
#include "laurent.hpp"
#include "modpoly.hpp"
#include "multilinear.hpp"
#include "qcomb.hpp"
#include "rep.hpp"
