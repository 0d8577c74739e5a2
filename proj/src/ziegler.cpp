#include "logder/ziegler.hpp"

#include "logder/error.hpp"
#include "logder/io.hpp"

namespace logder {

namespace ziegler_data {
extern const std::string_view x2_arr;
extern const std::string_view theta_z_der;
extern const std::string_view q_printed_der;
}  // namespace ziegler_data

std::string_view ziegler_x2_text() { return ziegler_data::x2_arr; }
std::string_view ziegler_theta_z_text() { return ziegler_data::theta_z_der; }
std::string_view ziegler_q_printed_text() { return ziegler_data::q_printed_der; }

namespace {

ZieglerFixture load_fixture() {
  Arrangement x2 = load_arrangement(ziegler_data::x2_arr);
  Derivation theta = load_derivation(ziegler_data::theta_z_der, x2.ell());
  auto q = load_polynomial_lines(ziegler_data::q_printed_der, x2.ell());
  try {
    k_vector(x2, theta);
  } catch (const NotLogarithmic& e) {
    throw PreconditionFailed(std::string("transcription error in the Ziegler fixture: ") + e.what());
  }
  return ZieglerFixture{std::move(x2), std::move(theta), std::move(q)};
}

}  // namespace

const ZieglerFixture& emit_ziegler_fixture() {
  static const ZieglerFixture fixture = load_fixture();
  return fixture;
}

}  // namespace logder
