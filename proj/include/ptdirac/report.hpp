#ifndef PTDIRAC_REPORT_HPP
#define PTDIRAC_REPORT_HPP

#include <string>
#include <vector>

#include "ptdirac/model.hpp"
#include "ptdirac/refdata.hpp"
#include "ptdirac/spin.hpp"

namespace ptdirac::report {

struct check_line {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct table_row {
    refdata::reference_level ref;
    bool found = false;
    bool physical = false;
    double energy = 0.0;
    double delta = 0.0;
    std::string note;
};

// Solves every reference state for the given symmetry constant and matches
// the closest stored root (physical or not) against the reference energy.
std::vector<table_row> reproduce_table(symmetry_kind kind, double sym_const,
                                       const potential_params& p = refdata::reference_params());

struct arbitration_candidate {
    double constant = 0.0;
    double max_delta = 0.0;
    int reproduced = 0;        // rows matching within 5e-3
    double radicand1 = 0.0;    // energy-equation radicands at the first reference energy
    double radicand2 = 0.0;
    std::vector<table_row> rows;
};

struct arbitration_outcome {
    std::vector<arbitration_candidate> candidates;
    int winner = -1;  // index into candidates, -1 if none reproduces the table
};

arbitration_outcome arbitrate_constant(symmetry_kind kind,
                                       const std::vector<double>& candidates,
                                       const potential_params& p = refdata::reference_params());

struct validation_options {
    bool quick = false;  // restrict to the lowest-n states
};

struct validation_result {
    bool all_pass = false;
    double elapsed_seconds = 0.0;
    std::vector<check_line> checks;
    std::string markdown;
};

// Runs the full acceptance checklist (oracle equivalence, table reproduction,
// arbitrations, identities, ODE residuals, trends) and assembles the markdown
// validation report.
validation_result run_validation(const validation_options& opts = {});

std::string format_significant(double v, int digits = 12);

}  // namespace ptdirac::report

#endif
