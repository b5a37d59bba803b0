#pragma once

#include "singknot/alexander.hpp"
#include "singknot/bracket.hpp"
#include "singknot/diagram.hpp"
#include "singknot/errors.hpp"
#include "singknot/moves.hpp"
#include "singknot/poly.hpp"
#include "singknot/weights.hpp"
