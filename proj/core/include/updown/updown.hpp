#pragma once

#include "updown/catalog.hpp"
#include "updown/classify.hpp"
#include "updown/constructions.hpp"
#include "updown/errors.hpp"
#include "updown/ext_mult.hpp"
#include "updown/family.hpp"
#include "updown/genfunc.hpp"
#include "updown/json_io.hpp"
#include "updown/module_vector.hpp"
#include "updown/object_id.hpp"
#include "updown/rational.hpp"
#include "updown/series.hpp"
#include "updown/table.hpp"
