#pragma once

#include "orbitcode/clique.hpp"
#include "orbitcode/code.hpp"
#include "orbitcode/formats.hpp"
#include "orbitcode/graph.hpp"
#include "orbitcode/orbit.hpp"
#include "orbitcode/parallel.hpp"
#include "orbitcode/perm.hpp"
#include "orbitcode/word.hpp"
