#pragma once

#include "freechr/embed.hpp"
#include "freechr/engine.hpp"
#include "freechr/errors.hpp"
#include "freechr/fixtures.hpp"
#include "freechr/matcher.hpp"
#include "freechr/multiset.hpp"
#include "freechr/named_fn.hpp"
#include "freechr/oracle.hpp"
#include "freechr/program.hpp"
#include "freechr/rule.hpp"
#include "freechr/state_literal.hpp"
