#ifndef SRCIRC_SRCIRC_HPP
#define SRCIRC_SRCIRC_HPP

#include "srcirc/exact/rational.hpp"
#include "srcirc/exact/matrix.hpp"
#include "srcirc/exact/poly.hpp"
#include "srcirc/exact/sturm.hpp"
#include "srcirc/embedding.hpp"
#include "srcirc/criterion.hpp"
#include "srcirc/recursion.hpp"
#include "srcirc/canonical.hpp"
#include "srcirc/expoly.hpp"
#include "srcirc/oracle.hpp"
#include "srcirc/certify.hpp"

#endif  // SRCIRC_SRCIRC_HPP
