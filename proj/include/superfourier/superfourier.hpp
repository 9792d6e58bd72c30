#pragma once

#include "superfourier/algebra.hpp"
#include "superfourier/arith.hpp"
#include "superfourier/catalog.hpp"
#include "superfourier/errors.hpp"
#include "superfourier/group.hpp"
#include "superfourier/io.hpp"
#include "superfourier/modular.hpp"
#include "superfourier/partition.hpp"
#include "superfourier/plot.hpp"
#include "superfourier/table.hpp"
#include "superfourier/theory.hpp"
#include "superfourier/transform.hpp"
#include "superfourier/verify.hpp"
