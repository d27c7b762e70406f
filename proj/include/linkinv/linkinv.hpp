#pragma once

#include "linkinv/bernoulli.hpp"
#include "linkinv/classify.hpp"
#include "linkinv/covers.hpp"
#include "linkinv/cyclotomic.hpp"
#include "linkinv/divisor.hpp"
#include "linkinv/errors.hpp"
#include "linkinv/integer.hpp"
#include "linkinv/links.hpp"
#include "linkinv/orbifold.hpp"
#include "linkinv/rational.hpp"
