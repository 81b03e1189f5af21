#pragma once

#include "sharplab/bernstein.hpp"
#include "sharplab/campaign.hpp"
#include "sharplab/convex_body.hpp"
#include "sharplab/io.hpp"
#include "sharplab/markov.hpp"
#include "sharplab/poly.hpp"
#include "sharplab/random_instances.hpp"
#include "sharplab/report.hpp"
#include "sharplab/rng.hpp"
#include "sharplab/sharp_constant.hpp"
#include "sharplab/trig.hpp"
#include "sharplab/vec.hpp"
