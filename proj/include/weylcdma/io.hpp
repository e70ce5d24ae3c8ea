#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weylcdma/decomposition.hpp"
#include "weylcdma/simulator.hpp"
#include "weylcdma/types.hpp"

namespace weylcdma {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

std::string family_name(Family family);

/// Chip values as `index,re,im` rows with a header; indices are 1-based.
void write_sequence_csv(std::ostream& out, const Eigen::Ref<const ComplexVector>& seq);
ComplexVector read_sequence_csv(std::istream& in);

/// Chip values as a JSON array of [re, im] pairs.
void write_sequence_json(std::ostream& out, const Eigen::Ref<const ComplexVector>& seq);
ComplexVector read_sequence_json(std::istream& in);

/// Correlation profile over chip offsets: `gap,re,im,abs`, one row per
/// entry starting at gap 0.
void write_profile_csv(std::ostream& out, const std::vector<Complex>& values);

/// Expansion coefficients as `m,re,im,abs` rows, m 1-based.
void write_coefficients_csv(std::ostream& out, const CoefficientVector& coeffs);

/// BER sweep as `family,length,users,ebn0_db,bits,errors,ber,ci95` rows.
void write_ber_csv(std::ostream& out, const std::vector<BerResult>& results);

/// Same data as JSON. Infinite Eb/N0 becomes the string "inf" since JSON
/// numbers cannot carry it.
void write_ber_json(std::ostream& out, const std::vector<BerResult>& results);

}  // namespace weylcdma
