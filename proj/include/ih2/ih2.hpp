#pragma once

#include "ih2/bitvec.hpp"
#include "ih2/catalog.hpp"
#include "ih2/chain_complex.hpp"
#include "ih2/characteristic.hpp"
#include "ih2/complex.hpp"
#include "ih2/errors.hpp"
#include "ih2/filtration.hpp"
#include "ih2/gf2.hpp"
#include "ih2/homology.hpp"
#include "ih2/ih.hpp"
#include "ih2/intersection.hpp"
#include "ih2/perversity.hpp"
#include "ih2/pseudomanifold.hpp"
#include "ih2/simplex.hpp"
#include "ih2/space_io.hpp"
#include "ih2/stratified.hpp"
#include "ih2/subdivision.hpp"
#include "ih2/witt.hpp"
