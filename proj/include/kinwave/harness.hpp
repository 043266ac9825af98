#pragma once

#include "kinwave/config.hpp"

namespace kinwave {

// Experiment drivers behind the CLI subcommands.  Each writes its outputs
// (CSV tables plus a manifest.txt recording every parameter and the key
// results) into config.output_dir, creating the directory when needed, and
// prints a one-line summary.  Configuration problems throw
// std::invalid_argument or std::domain_error; solver and I/O failures throw
// std::runtime_error.

// Time-stepping run: one CSV per snapshot with columns x,q and, when the
// closed-form solution applies (two-state IC under the discontinuous flux),
// an exact column of cell averages.  The conservation experiment instead
// repeats the run for each plateau band width and tabulates the final
// relative mass drift per width.
void cmd_run(const ExperimentConfig& config);

// Convergence study.  Two-state ICs: both schemes over the grid ladder
// against the closed-form solution, with a pass/fail line per scheme when
// the setup matches one of the reference problems.  Smooth ICs: fine-grid
// self-convergence for the configured flux plus the regularized
// continuous flux as the comparison scheme.
void cmd_convergence(const ExperimentConfig& config);

// Same initial data evolved under the discontinuous and the continuous
// piecewise-linear flux; writes paired snapshot CSVs and reports whether
// each final state carries an upstream plateau at rho_m.
void cmd_flux_compare(const ExperimentConfig& config);

// Smoothing-kernel report: kernel samples, smoothed-flux values and
// derivatives for each requested width, the inflection-offset sweep, and
// anisotropy margins.
void cmd_mollifier_report(const ExperimentConfig& config);

}  // namespace kinwave
