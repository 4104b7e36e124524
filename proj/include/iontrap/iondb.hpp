// Ion-constant ingestion: the built-in seven-ion reference set and a CSV
// loader with per-line diagnostics.
//
// CSV schema (header required, '.' decimal, ',' separator):
//   name,I,gamma_2pi_MHz,nu_F_THz,nu_0_GHz
// Frequencies are given as nu = omega / 2pi and converted to rad/s on load.

#pragma once

#include <string>
#include <vector>

#include "iontrap/raman.hpp"

namespace iontrap {

// The seven reference ions with their published constants.
const std::vector<IonSpecies>& builtin_ion_table();

IonSpecies find_ion(const std::vector<IonSpecies>& db, const std::string& name);

// Parses and validates; throws ConfigError with line and field context.
// An empty file (or header-only file) yields an empty list.
std::vector<IonSpecies> load_ion_db(const std::string& path);

std::string ion_db_csv(const std::vector<IonSpecies>& ions);

} // namespace iontrap
