#pragma once

#include "fincat/field.hpp"
#include "fincat/matrix.hpp"
#include "fincat/algebra.hpp"
#include "fincat/examples.hpp"
#include "fincat/module.hpp"
#include "fincat/stable.hpp"
#include "fincat/hochschild.hpp"
#include "fincat/identities.hpp"
#include "fincat/lambda_sigma.hpp"
#include "fincat/workbench.hpp"
