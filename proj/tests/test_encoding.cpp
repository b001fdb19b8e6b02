#include <doctest.h>

#include <cmath>
#include <optional>

#include "bqc/encoding.hpp"
#include "oracle.hpp"

using namespace bqc;

TEST_CASE("encode_angle examples") {
  CHECK(encode_angle(Angle::of(1), PadKey{0, 0}) == Angle::of(1));
  CHECK(encode_angle(Angle::of(1), PadKey{1, 0}) == Angle::of(5));
  CHECK(encode_angle(Angle::of(3), PadKey{1, 1}) == Angle::of(1));
}

TEST_CASE("decode_angle examples") {
  CHECK(decode_angle(Angle::of(5), PadKey{1, 0}) == Angle::of(1));
  CHECK(decode_angle(Angle::of(1), PadKey{1, 1}) == Angle::of(3));
  CHECK(decode_angle(Angle::of(2), PadKey{1, 1}) == Angle::of(2));
}

TEST_CASE("decode inverts encode for every angle and pad") {
  for (int a = 0; a < 8; ++a)
    for (int z = 0; z < 2; ++z)
      for (int x = 0; x < 2; ++x) {
        const PadKey pad{z, x};
        CHECK(decode_angle(encode_angle(Angle::of(a), pad), pad) == Angle::of(a));
        CHECK(encode_angle(decode_angle(Angle::of(a), pad), pad) == Angle::of(a));
      }
}

TEST_CASE("byproduct pad is the unique one passing the 16-case oracle") {
  // For each swap outcome, exactly one of the 4 candidate pads makes the
  // rotated measurement leave |theta + b pi> for all theta and b; that pad
  // must be what byproduct_params returns.
  const double s = 1.0 / std::sqrt(2.0);
  for (int zp = 0; zp < 2; ++zp)
    for (int xp = 0; xp < 2; ++xp) {
      std::optional<PadKey> winner;
      for (int z = 0; z < 2; ++z)
        for (int x = 0; x < 2; ++x) {
          const PadKey pad{z, x};
          bool all_ok = true;
          for (int a = 0; a < 8 && all_ok; ++a) {
            const Angle tilde = encode_angle(Angle::of(a), pad);
            for (int b = 0; b < 2 && all_ok; ++b) {
              oracle::cvec bra = {
                  s, (b ? -s : s) * oracle::phase_of_eighths(tilde.eighths)};
              auto [prob, residual] =
                  oracle::project(oracle::bell_ket(zp, xp), 2, {0}, bra);
              all_ok = prob > 1e-12 &&
                       oracle::overlap(residual, oracle::angle_ket(a + 4 * b)) >
                           1.0 - 1e-9;
            }
          }
          if (all_ok) {
            CHECK(!winner.has_value());
            winner = pad;
          }
        }
      REQUIRE(winner.has_value());
      CHECK(*winner == byproduct_params(BellOutcome{zp, xp}));
    }
  CHECK(byproduct_params(BellOutcome{0, 0}) == PadKey{0, 1});
  CHECK(byproduct_params(BellOutcome{1, 0}) == PadKey{1, 1});
  CHECK(byproduct_params(BellOutcome{0, 1}) == PadKey{0, 0});
}

TEST_CASE("angle arithmetic stays on the lattice") {
  for (int k = -20; k <= 20; ++k) {
    const Angle a = Angle::of(k);
    CHECK(a.eighths >= 0);
    CHECK(a.eighths <= 7);
    CHECK(a.plus_pi() == Angle::of(k + 4));
    CHECK(a.negated() == Angle::of(-k));
    CHECK(a.negated().negated() == a);
  }
}
