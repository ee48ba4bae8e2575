#ifndef F2COH_F2COH_HPP
#define F2COH_F2COH_HPP

#include "f2coh/builtin.hpp"
#include "f2coh/chain.hpp"
#include "f2coh/cochain.hpp"
#include "f2coh/error.hpp"
#include "f2coh/extension.hpp"
#include "f2coh/f2linear.hpp"
#include "f2coh/gmodule.hpp"
#include "f2coh/group.hpp"
#include "f2coh/homotopy.hpp"
#include "f2coh/permutation.hpp"
#include "f2coh/shapiro.hpp"
#include "f2coh/transversal.hpp"

#endif
