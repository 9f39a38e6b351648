#ifndef PTDIRAC_REFDATA_HPP
#define PTDIRAC_REFDATA_HPP

#include <string>
#include <vector>

#include "ptdirac/model.hpp"

namespace ptdirac::refdata {

struct reference_level {
    int l = 0;           // l (spin) or l~ (pspin)
    int n = 0;
    int kappa_neg = 0;   // aligned member of the doublet
    int kappa_pos = 0;   // unaligned member
    std::string labels;  // spectroscopic pair, e.g. "0p3/2;0p1/2"
    double energy = 0.0; // reference value, fm^-1
};

// Parameter set the reference tables were produced with.
potential_params reference_params();

// Symmetry-constant candidates carried by the source text; the validation
// report arbitrates between them.
inline constexpr double kCsText = -0.35;
inline constexpr double kCsFigures = 0.35;
inline constexpr double kCpsText = -10.0;
inline constexpr double kCpsFigures = -15.0;

const std::vector<reference_level>& spin_levels();   // 8 doublets, n in {0,1}
const std::vector<reference_level>& pspin_levels();  // 8 doublets, n in {1,2}

// The repository data file mirroring the embedded values (tests hold the two
// in sync).
std::string reference_csv();

}  // namespace ptdirac::refdata

#endif
