#ifndef LLS_LLS_HPP_
#define LLS_LLS_HPP_

#include "lls/cayley_table.hpp"
#include "lls/congruences.hpp"
#include "lls/constructions.hpp"
#include "lls/error.hpp"
#include "lls/free_semigroup.hpp"
#include "lls/identity.hpp"
#include "lls/partition.hpp"
#include "lls/report.hpp"
#include "lls/structure.hpp"
#include "lls/varieties.hpp"
#include "lls/word.hpp"

#endif  // LLS_LLS_HPP_
