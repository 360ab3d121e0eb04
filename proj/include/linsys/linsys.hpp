#pragma once

#include "linsys/constructions.hpp"
#include "linsys/error.hpp"
#include "linsys/io.hpp"
#include "linsys/isomorphism.hpp"
#include "linsys/oracle.hpp"
#include "linsys/solvers.hpp"
#include "linsys/system.hpp"
#include "linsys/verify.hpp"
