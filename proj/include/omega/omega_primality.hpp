#ifndef OMEGA_OMEGA_PRIMALITY_HPP
#define OMEGA_OMEGA_PRIMALITY_HPP

#include "antichain.hpp"
#include "asymptotic.hpp"
#include "diophantine.hpp"
#include "error.hpp"
#include "integer.hpp"
#include "k_vector.hpp"
#include "lattice.hpp"
#include "linear_search.hpp"
#include "omega.hpp"
#include "semigroup.hpp"
#include "vec.hpp"

#endif  // OMEGA_OMEGA_PRIMALITY_HPP
