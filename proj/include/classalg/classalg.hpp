#pragma once

#include "classalg/algebra.hpp"
#include "classalg/conjugacy.hpp"
#include "classalg/diagnostics.hpp"
#include "classalg/errors.hpp"
#include "classalg/family.hpp"
#include "classalg/group_algebra.hpp"
#include "classalg/literals.hpp"
#include "classalg/local_bijection.hpp"
#include "classalg/partial_bijection.hpp"
#include "classalg/permutation.hpp"
#include "classalg/serialize.hpp"
#include "classalg/surface.hpp"
#include "classalg/version.hpp"
