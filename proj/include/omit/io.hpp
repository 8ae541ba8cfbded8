#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "omit/sweep.hpp"

namespace omit {

enum class OutputFormat { Csv, Json };

OutputFormat format_from_string(const std::string& s);

/// Shortest decimal representation that parses back to the identical double
/// (std::to_chars).  Used for every numeric field so emitted files are
/// reproducible bit for bit.
std::string format_double(double v);

/// Inverse of format_double; strict (whole string must parse).
double parse_double(const std::string& s);

/// File-level metadata: every knob of the sweep, flat key=value.
std::map<std::string, std::string> sweep_metadata(const SweepSpec& spec);

/// Reconstructs a SweepSpec from metadata previously produced by
/// sweep_metadata (the round-trip behind "re-running an emitted file's
/// echoed configuration reproduces it bit-identically").
SweepSpec sweep_from_metadata(const std::map<std::string, std::string>& meta);

/// CSV layout: '#'-prefixed key=value header lines, one column-name row,
/// then data rows.  Multi-series sweeps get a leading varied-value column.
void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<SeriesResult>& series);

/// JSON layout: one object per series with `params`, `columns`, `rows`,
/// plus file-level metadata and the column-naming `convention` note.
void write_json(std::ostream& os, const SweepSpec& spec,
                const std::vector<SeriesResult>& series);

void write_output(const SweepSpec& spec, const std::vector<SeriesResult>& series,
                  OutputFormat format, const std::string& out_path);

/// Renders to a string (used by tests and the determinism checks).
std::string render_output(const SweepSpec& spec, const std::vector<SeriesResult>& series,
                          OutputFormat format);

/// Parses the '#' metadata block of an emitted CSV (or the metadata object of
/// an emitted JSON) back into key=value form.
std::map<std::string, std::string> parse_metadata(std::istream& is);
std::map<std::string, std::string> parse_metadata_file(const std::string& path);

}  // namespace omit
