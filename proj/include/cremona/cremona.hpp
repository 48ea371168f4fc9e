#ifndef CREMONA_CREMONA_HPP
#define CREMONA_CREMONA_HPP

#include "error.hpp"
#include "rational.hpp"
#include "upoly.hpp"
#include "hpoly.hpp"
#include "parse.hpp"
#include "matrix.hpp"
#include "rational_map.hpp"
#include "word.hpp"
#include "homaloidal.hpp"
#include "basepoints.hpp"
#include "polyaut.hpp"
#include "decompose.hpp"
#include "io.hpp"

#endif  // CREMONA_CREMONA_HPP
