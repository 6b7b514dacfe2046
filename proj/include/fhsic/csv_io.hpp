#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fhsic/curve.hpp"

namespace fhsic {

// Malformed CSV input; the message names the offending line (and column for
// unparsable cells).
struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads a curve set from CSV. An optional first line of the form
//   t,<t1>,...,<tG>
// supplies the grid abscissae; without it, every row is a curve on the
// equispaced grid j/(G-1) over [0, 1]. Each data row holds the G values of
// one curve. Requires at least two rows and two columns.
CurveSet read_curve_set(const std::string& path);
CurveSet parse_curve_set(std::istream& in, const std::string& name);

// Writes the header grid line followed by one row per curve, at full
// round-trip precision (17 significant digits).
void write_curve_set(std::ostream& out, const CurveSet& data);
void write_curve_set(const std::string& path, const CurveSet& data);

}  // namespace fhsic
