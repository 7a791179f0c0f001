#pragma once

#include "widealloc/allocation.hpp"
#include "widealloc/diagram.hpp"
#include "widealloc/enumerate.hpp"
#include "widealloc/errors.hpp"
#include "widealloc/filling.hpp"
#include "widealloc/harness.hpp"
#include "widealloc/interval.hpp"
#include "widealloc/outline.hpp"
#include "widealloc/pipeline.hpp"
#include "widealloc/render.hpp"
#include "widealloc/serialize.hpp"
#include "widealloc/wideness.hpp"
