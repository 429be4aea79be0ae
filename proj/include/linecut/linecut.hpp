#pragma once

#include "linecut/gen.hpp"
#include "linecut/harness.hpp"
#include "linecut/io.hpp"
#include "linecut/model.hpp"
#include "linecut/oracle.hpp"
#include "linecut/solver.hpp"
