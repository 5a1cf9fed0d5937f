#pragma once

#include "framecalc/assembly.hpp"
#include "framecalc/biframe.hpp"
#include "framecalc/bitset.hpp"
#include "framecalc/catalog.hpp"
#include "framecalc/congruence.hpp"
#include "framecalc/error.hpp"
#include "framecalc/frame.hpp"
#include "framecalc/hom.hpp"
#include "framecalc/io.hpp"
#include "framecalc/poset.hpp"
#include "framecalc/semilattice.hpp"
#include "framecalc/space.hpp"
