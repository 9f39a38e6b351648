#include "ptdirac/refdata.hpp"

#include <cstdio>

namespace ptdirac::refdata {

potential_params reference_params() {
    return {0.35, 8.0, 2.0, 5.0, 0.1};
}

const std::vector<reference_level>& spin_levels() {
    static const std::vector<reference_level> levels = {
        {1, 0, -2, 1, "0p3/2;0p1/2", 4.320628792},
        {2, 0, -3, 2, "0d5/2;0d3/2", 4.451695423},
        {3, 0, -4, 3, "0f7/2;0f5/2", 4.600717080},
        {4, 0, -5, 4, "0g9/2;0g7/2", 4.751280043},
        {1, 1, -2, 1, "1p3/2;1p1/2", 4.644277674},
        {2, 1, -3, 2, "1d5/2;1d3/2", 4.739928403},
        {3, 1, -4, 3, "1f7/2;1f5/2", 4.848061200},
        {4, 1, -5, 4, "1g9/2;1g7/2", 4.955818811},
    };
    return levels;
}

const std::vector<reference_level>& pspin_levels() {
    static const std::vector<reference_level> levels = {
        {1, 1, -1, 2, "1s1/2;0d3/2", -5.170251165},
        {2, 1, -2, 3, "1p3/2;0f5/2", -5.055448493},
        {3, 1, -3, 4, "1d5/2;0g7/2", -4.943195896},
        {4, 1, -4, 5, "1f7/2;0h9/2", -4.846340118},
        {1, 2, -1, 2, "2s1/2;1d3/2", -5.000631769},
        {2, 2, -2, 3, "2p3/2;1f5/2", -4.951890564},
        {3, 2, -3, 4, "2d5/2;1g7/2", -4.915209098},
        {4, 2, -4, 5, "2f7/2;1h9/2", -4.900619782},
    };
    return levels;
}

std::string reference_csv() {
    std::string out =
        "# Reference bound-state energies (fm^-1) used by the `table` delta column.\n"
        "# Parameter set: alpha=0.35, A=8, B=2, M=5.0; spin rows pair with\n"
        "# Cs in {-0.35, +0.35}, pspin rows with Cps in {-10, -15} (see README,\n"
        "# `validate` arbitrates the constants).\n"
        "symmetry,l,n,kappa_neg,kappa_pos,labels,energy\n";
    char buf[160];
    for (const auto& r : spin_levels()) {
        std::snprintf(buf, sizeof buf, "spin,%d,%d,%d,%d,%s,%.9f\n", r.l, r.n, r.kappa_neg,
                      r.kappa_pos, r.labels.c_str(), r.energy);
        out += buf;
    }
    for (const auto& r : pspin_levels()) {
        std::snprintf(buf, sizeof buf, "pspin,%d,%d,%d,%d,%s,%.9f\n", r.l, r.n, r.kappa_neg,
                      r.kappa_pos, r.labels.c_str(), r.energy);
        out += buf;
    }
    return out;
}

}  // namespace ptdirac::refdata
