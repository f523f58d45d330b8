#pragma once

#include "collapse.hpp"
#include "errors.hpp"
#include "jpm.hpp"
#include "limits.hpp"
#include "normality.hpp"
#include "ones.hpp"
#include "oracle.hpp"
#include "palindromes.hpp"
#include "parallel.hpp"
#include "verify.hpp"
#include "word.hpp"
