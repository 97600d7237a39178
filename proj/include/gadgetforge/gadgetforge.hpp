// gadgetforge.hpp — umbrella include

#pragma once

#include "gadgetforge/catalog/assembly.hpp"
#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/cert/simulation.hpp"
#include "gadgetforge/classify/classify.hpp"
#include "gadgetforge/core/basis.hpp"
#include "gadgetforge/core/json_io.hpp"
#include "gadgetforge/core/many_body.hpp"
#include "gadgetforge/core/spectral.hpp"
#include "gadgetforge/core/states.hpp"
#include "gadgetforge/gadgets/aklt.hpp"
#include "gadgetforge/gadgets/alt_sud.hpp"
#include "gadgetforge/gadgets/bbq.hpp"
#include "gadgetforge/gadgets/h_to_h2.hpp"
#include "gadgetforge/gadgets/projector_chain.hpp"
#include "gadgetforge/gadgets/qutrit_encoding.hpp"
#include "gadgetforge/gadgets/sud_coupling.hpp"
#include "gadgetforge/gadgets/sud_logical.hpp"
#include "gadgetforge/rep/casimir.hpp"
#include "gadgetforge/rep/young.hpp"
#include "gadgetforge/sw/block_split.hpp"
#include "gadgetforge/sw/effective.hpp"
#include "gadgetforge/sw/gadget.hpp"
#include "gadgetforge/sw/interference.hpp"
#include "gadgetforge/sw/sweep.hpp"
