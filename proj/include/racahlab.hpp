#pragma once

#include "racahlab/errors.hpp"
#include "racahlab/rational.hpp"
#include "racahlab/gaussian.hpp"
#include "racahlab/matrix.hpp"
#include "racahlab/polynomial.hpp"
#include "racahlab/linalg.hpp"
#include "racahlab/roots.hpp"
#include "racahlab/pbw.hpp"
#include "racahlab/sharp.hpp"
#include "racahlab/report.hpp"
#include "racahlab/racah.hpp"
#include "racahlab/rd_modules.hpp"
#include "racahlab/leonard.hpp"
#include "racahlab/sl2_reps.hpp"
#include "racahlab/decompose.hpp"
#include "racahlab/suite.hpp"
