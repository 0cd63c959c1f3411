#pragma once

#include "convfem/assembly.hpp"
#include "convfem/banded.hpp"
#include "convfem/convolution.hpp"
#include "convfem/element.hpp"
#include "convfem/marching.hpp"
#include "convfem/model.hpp"
#include "convfem/oracle.hpp"
#include "convfem/solver.hpp"
