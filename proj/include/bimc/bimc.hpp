#ifndef BIMC_BIMC_HPP
#define BIMC_BIMC_HPP

#include "bimc/bench/tn.hpp"
#include "bimc/bimachine.hpp"
#include "bimc/compiler/classical.hpp"
#include "bimc/compiler/equalizer.hpp"
#include "bimc/core/types.hpp"
#include "bimc/fsa/automaton.hpp"
#include "bimc/fsa/dfa.hpp"
#include "bimc/fsa/ops.hpp"
#include "bimc/fsa/transducer.hpp"
#include "bimc/functionality.hpp"
#include "bimc/io/bimachine_io.hpp"
#include "bimc/io/transducer_io.hpp"
#include "bimc/io/word.hpp"
#include "bimc/monoid/accumulate.hpp"
#include "bimc/monoid/concepts.hpp"
#include "bimc/monoid/descriptor.hpp"
#include "bimc/monoid/free_monoid.hpp"
#include "bimc/monoid/literal.hpp"
#include "bimc/monoid/numeric.hpp"
#include "bimc/monoid/product.hpp"
#include "bimc/squared/squared_automaton.hpp"

#endif
