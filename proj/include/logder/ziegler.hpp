#ifndef LOGDER_ZIEGLER_HPP
#define LOGDER_ZIEGLER_HPP

#include <string_view>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/logderiv.hpp"

namespace logder {

/// Raw text of the shipped fixture files, byte for byte.
std::string_view ziegler_x2_text();
std::string_view ziegler_theta_z_text();
std::string_view ziegler_q_printed_text();

struct ZieglerFixture {
  Arrangement x2;
  Derivation theta_z;
  /// The printed quotients for hyperplanes 4, 5, 6.
  std::vector<Polynomial> printed_q;
};

/// Parses the fixture and checks that theta_z is logarithmic for X2.
/// Throws PreconditionFailed("transcription error ...") otherwise.
const ZieglerFixture& emit_ziegler_fixture();

}  // namespace logder

#endif  // LOGDER_ZIEGLER_HPP
