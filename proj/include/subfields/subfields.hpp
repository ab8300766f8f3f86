#pragma once

#include "subfields/arith/integer.hpp"
#include "subfields/arith/linalg.hpp"
#include "subfields/arith/poly.hpp"
#include "subfields/arith/quotient_ring.hpp"
#include "subfields/arith/reconstruct.hpp"
#include "subfields/arith/rings.hpp"
#include "subfields/arith/zpoly.hpp"
#include "subfields/errors.hpp"
#include "subfields/factor/factor_fp.hpp"
#include "subfields/factor/factor_z.hpp"
#include "subfields/factor/hensel.hpp"
#include "subfields/factor/subfield_factorization.hpp"
#include "subfields/factor/trager.hpp"
#include "subfields/lattice/lattice.hpp"
#include "subfields/modgcd/modgcd.hpp"
#include "subfields/numfield/good_prime.hpp"
#include "subfields/numfield/number_field.hpp"
#include "subfields/partition/partition.hpp"
#include "subfields/partition/products.hpp"
#include "subfields/principal/principal.hpp"
