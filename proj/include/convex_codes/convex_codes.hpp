#ifndef CONVEX_CODES_CONVEX_CODES_HPP
#define CONVEX_CODES_CONVEX_CODES_HPP

#include "convex_codes/abstract_cover.hpp"
#include "convex_codes/arrangement.hpp"
#include "convex_codes/bundle.hpp"
#include "convex_codes/certificate.hpp"
#include "convex_codes/chamber.hpp"
#include "convex_codes/chord_cut.hpp"
#include "convex_codes/code.hpp"
#include "convex_codes/code_io.hpp"
#include "convex_codes/codeword.hpp"
#include "convex_codes/cover_code.hpp"
#include "convex_codes/cover_io.hpp"
#include "convex_codes/feasibility.hpp"
#include "convex_codes/monotone.hpp"
#include "convex_codes/polyhedra.hpp"
#include "convex_codes/potential.hpp"
#include "convex_codes/random_codes.hpp"
#include "convex_codes/rational.hpp"
#include "convex_codes/realize.hpp"
#include "convex_codes/sampling.hpp"
#include "convex_codes/topology.hpp"

#endif
