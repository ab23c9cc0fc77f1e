#pragma once

#include "irrstrength/book.hpp"
#include "irrstrength/bounds.hpp"
#include "irrstrength/certificate.hpp"
#include "irrstrength/error.hpp"
#include "irrstrength/graph.hpp"
#include "irrstrength/labeling.hpp"
#include "irrstrength/solver.hpp"
#include "irrstrength/strength.hpp"
