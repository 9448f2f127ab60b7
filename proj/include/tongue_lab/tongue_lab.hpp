#pragma once

#include "tongue_lab/asymptotics.hpp"
#include "tongue_lab/circle_map.hpp"
#include "tongue_lab/errors.hpp"
#include "tongue_lab/extrema.hpp"
#include "tongue_lab/fourier.hpp"
#include "tongue_lab/format.hpp"
#include "tongue_lab/guided.hpp"
#include "tongue_lab/parallel.hpp"
#include "tongue_lab/raster.hpp"
#include "tongue_lab/rotation.hpp"
#include "tongue_lab/series.hpp"
#include "tongue_lab/tongue.hpp"
#include "tongue_lab/trig.hpp"
