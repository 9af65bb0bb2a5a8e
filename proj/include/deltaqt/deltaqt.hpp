#pragma once

#include "deltaqt/error.hpp"
#include "deltaqt/qt_polynomial.hpp"
#include "deltaqt/qt_rational.hpp"
#include "deltaqt/partition.hpp"
#include "deltaqt/lattice.hpp"
#include "deltaqt/polyomino.hpp"
#include "deltaqt/family.hpp"
#include "deltaqt/enumerate.hpp"
#include "deltaqt/bijections.hpp"
#include "deltaqt/recursion.hpp"
#include "deltaqt/symfun.hpp"
#include "deltaqt/macdonald.hpp"
#include "deltaqt/json_io.hpp"
#include "deltaqt/verify.hpp"
