#pragma once

#include "rainbow/graph.hpp"
#include "rainbow/embedding.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/detect.hpp"
#include "rainbow/spectrum.hpp"
#include "rainbow/serialize.hpp"
#include "rainbow/certificate.hpp"
#include "rainbow/bounds.hpp"
#include "rainbow/augment.hpp"
#include "rainbow/search.hpp"
#include "rainbow/family_spec.hpp"
