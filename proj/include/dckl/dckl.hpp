#pragma once

#include "dckl/cells.hpp"
#include "dckl/cycles.hpp"
#include "dckl/domino.hpp"
#include "dckl/error.hpp"
#include "dckl/group_table.hpp"
#include "dckl/hecke.hpp"
#include "dckl/kl_basis.hpp"
#include "dckl/labeling.hpp"
#include "dckl/laurent.hpp"
#include "dckl/partition.hpp"
#include "dckl/side.hpp"
#include "dckl/signed_perm.hpp"
#include "dckl/text.hpp"
#include "dckl/verify.hpp"
#include "dckl/young.hpp"
