#ifndef DYADIC_DYADIC_HPP
#define DYADIC_DYADIC_HPP

#include "dyadic/corpus.hpp"
#include "dyadic/formula.hpp"
#include "dyadic/hypersequent.hpp"
#include "dyadic/proof.hpp"
#include "dyadic/proofcheck.hpp"
#include "dyadic/rules.hpp"
#include "dyadic/search.hpp"
#include "dyadic/semantics.hpp"
#include "dyadic/serialize.hpp"
#include "dyadic/syntax.hpp"

#endif  // DYADIC_DYADIC_HPP
