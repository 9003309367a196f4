#pragma once

#include "modinv/types.hpp"
#include "modinv/fusion_ring.hpp"
#include "modinv/modular_data.hpp"
#include "modinv/branching_table.hpp"
#include "modinv/model_catalog.hpp"
#include "modinv/invariant_enumerator.hpp"
#include "modinv/classifier.hpp"
#include "modinv/nimrep_graphs.hpp"
#include "modinv/extension_calculus.hpp"
#include "modinv/io.hpp"
