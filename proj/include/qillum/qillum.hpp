// Umbrella header for the quantum illumination library.

#pragma once

#include "qillum/matrix.hpp"
#include "qillum/entropy.hpp"
#include "qillum/eig.hpp"
#include "qillum/density.hpp"
#include "qillum/rng.hpp"
#include "qillum/povm.hpp"
#include "qillum/illumination.hpp"
#include "qillum/info_measures.hpp"
#include "qillum/discord.hpp"
#include "qillum/oracle.hpp"
#include "qillum/entanglement.hpp"
#include "qillum/sweep.hpp"
