// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "lisscheb/congruence.hpp"
#include "lisscheb/cosine_transform.hpp"
#include "lisscheb/curves.hpp"
#include "lisscheb/errors.hpp"
#include "lisscheb/expansion.hpp"
#include "lisscheb/interp.hpp"
#include "lisscheb/node_spec.hpp"
#include "lisscheb/nodes.hpp"
#include "lisscheb/parallel.hpp"
#include "lisscheb/quad.hpp"
#include "lisscheb/sample.hpp"
#include "lisscheb/spectral.hpp"
#include "lisscheb/transform.hpp"
#include "lisscheb/trig.hpp"
#include "lisscheb/types.hpp"
