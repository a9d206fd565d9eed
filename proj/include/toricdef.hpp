#pragma once

#include "toricdef/cone.hpp"
#include "toricdef/cup.hpp"
#include "toricdef/degree_complex.hpp"
#include "toricdef/gersten2.hpp"
#include "toricdef/io.hpp"
#include "toricdef/lattice.hpp"
#include "toricdef/oracle.hpp"
#include "toricdef/random.hpp"
#include "toricdef/rational.hpp"
