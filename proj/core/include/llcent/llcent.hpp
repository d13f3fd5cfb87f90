#pragma once

#include "llcent/endo.hpp"
#include "llcent/entropy_alg.hpp"
#include "llcent/entropy_top.hpp"
#include "llcent/field.hpp"
#include "llcent/harness.hpp"
#include "llcent/oracle.hpp"
#include "llcent/parallel.hpp"
#include "llcent/space.hpp"
#include "llcent/sysfile.hpp"
#include "llcent/window.hpp"
