// io.hpp — Deterministic CSV/JSON serialization of traces, spectra, states,
// and verification reports. CSV carries 17 significant digits so files
// round-trip doubles losslessly; JSON mirrors the same rows.

#pragma once

#include "jcm/dynamics.hpp"
#include "jcm/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace jcm::io {

enum class Format { csv, json };

// Shortest-lossless decimal rendering used by every writer: %.17g.
std::string format_double(double x);

void write_trace(std::ostream& os, const dynamics::EvolutionTrace& trace, Format format);

void write_spectrum(std::ostream& os, const dynamics::SpectrumReport& report, Format format);

// Bare-basis state export: basis_index,re,im.
void write_state_bare(std::ostream& os, const Ket& ket, Format format);

// Dressed-basis state export: n,parity,re,im over the dressed labels in
// output order (the flagged |e, n_max> component is not a dressed label and
// is omitted).
void write_state_dressed(std::ostream& os, const Ket& ket, const Cutoff& c, Format format);

void write_verification(std::ostream& os, const std::vector<verify::CheckResult>& results,
                        Format format);

void write_completeness(std::ostream& os, const coherent::CompletenessReport& report,
                        double tolerance, Format format);

} // namespace jcm::io
