#pragma once

#include "qeuler/qcore.hpp"
#include "qeuler/classical.hpp"
#include "qeuler/quadrature.hpp"
#include "qeuler/qgamma.hpp"
#include "qeuler/qdigamma.hpp"
#include "qeuler/qquotients.hpp"
#include "qeuler/funceq.hpp"
#include "qeuler/reflection.hpp"
#include "qeuler/qstirling.hpp"
