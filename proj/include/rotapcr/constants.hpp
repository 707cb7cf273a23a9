#pragma once

namespace rotapcr::materials {

// Handbook values (CRC Handbook of Chemistry and Physics, near 25 C / 300 K).
// Compiled constants, not per-scenario knobs.

inline constexpr double copper_density_kg_m3 = 8960.0;
inline constexpr double copper_specific_heat_j_kg_k = 385.0;

inline constexpr double silicon_density_kg_m3 = 2330.0;
inline constexpr double silicon_specific_heat_j_kg_k = 700.0;

// Aqueous reaction mix treated as water.
inline constexpr double water_density_kg_m3 = 1000.0;
inline constexpr double water_specific_heat_j_kg_k = 4184.0;

// Mineral oil overlay; used only to lump the overlay mass into the sample node.
inline constexpr double mineral_oil_specific_heat_j_kg_k = 1900.0;

// Average molar mass of one double-stranded base pair.
inline constexpr double dna_bp_molar_mass_g_mol = 650.0;

inline constexpr double avogadro_per_mol = 6.02214076e23;

}  // namespace rotapcr::materials
