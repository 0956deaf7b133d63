#pragma once

#include "arrfactor/arrangement.hpp"
#include "arrfactor/bitset.hpp"
#include "arrfactor/catalog.hpp"
#include "arrfactor/certificates.hpp"
#include "arrfactor/cyclotomic.hpp"
#include "arrfactor/hereditary.hpp"
#include "arrfactor/inductive.hpp"
#include "arrfactor/int_poly.hpp"
#include "arrfactor/io.hpp"
#include "arrfactor/lattice.hpp"
#include "arrfactor/linear_form.hpp"
#include "arrfactor/matrix.hpp"
#include "arrfactor/nice.hpp"
#include "arrfactor/partition.hpp"
#include "arrfactor/supersolvable.hpp"
