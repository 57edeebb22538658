#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "stabsim/rfchain.hpp"
#include "stabsim/rng.hpp"

using namespace stabsim;

namespace {

SignalPath ctrl_path() {
  SignalPath p;
  p.id = {0, 0};
  p.port_kind = PortKind::kCtrl;
  p.nco_freq = 5.0e9;
  return p;
}

}  // namespace

TEST_CASE("synthesize_pulse nominal samples") {
  const auto env = synthesize_pulse(ctrl_path(), 100e-6, {1.0, 0.0}, 2.0e6);
  REQUIRE(env.size() == 200);
  for (const auto& s : env.raw()) {
    CHECK(s == std::complex<double>(1.0, 0.0));
  }
}

TEST_CASE("synthesize_pulse applies gain and phase perturbation") {
  const auto env = synthesize_pulse(ctrl_path(), 100e-6, {0.998, 0.5}, 2.0e6);
  for (const auto& s : env.raw()) {
    CHECK_THAT(std::abs(s), Catch::Matchers::WithinAbs(0.998, 1e-12));
    CHECK_THAT(rad_to_deg(std::arg(s)), Catch::Matchers::WithinAbs(0.5, 1e-12));
  }
}

TEST_CASE("synthesize_pulse sample count arithmetic") {
  const auto env = synthesize_pulse(ctrl_path(), 100e-6, {1.0, 0.0}, 10.0e6);
  CHECK(env.size() == 1000);
}

TEST_CASE("upconvert identity and pure rotation") {
  auto env = synthesize_pulse(ctrl_path(), 10e-6, {1.0, 0.0}, 2.0e6);
  const auto id = upconvert(env, {"lo", 0.0, 0.0});
  CHECK(id.materialize() == env.raw());

  const auto rotated = upconvert(env, {"lo", 0.0, 90.0}).materialize();
  for (const auto& s : rotated) {
    CHECK_THAT(s.real(), Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(s.imag(), Catch::Matchers::WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("up/down conversion roundtrip is exact") {
  auto env = synthesize_pulse(ctrl_path(), 100e-6, {0.97, 12.0}, 2.0e6,
                              to_ticks(1.25));
  const LoState lo{"lo", 2.5e9, 37.0};
  const auto back = downconvert(upconvert(env, lo), lo).materialize();
  REQUIRE(back.size() == env.size());
  for (std::size_t k = 0; k < back.size(); ++k) {
    CHECK(std::abs(back[k] - env.raw()[k]) <= 1e-12 * std::abs(env.raw()[k]));
  }
}

TEST_CASE("shared-LO loopback is bitwise independent of LO phase") {
  const auto env = synthesize_pulse(ctrl_path(), 100e-6, {0.99, 3.0}, 2.0e6,
                                    to_ticks(1000.0));
  std::vector<std::vector<std::complex<double>>> results;
  for (double phase : {0.0, 37.0, 180.0}) {
    const LoState lo{"lo", 2.5e9, phase};
    results.push_back(downconvert(upconvert(env, lo), lo).materialize());
  }
  CHECK(results[0] == env.raw());
  CHECK(results[1] == results[0]);
  CHECK(results[2] == results[0]);
}

TEST_CASE("downconvert mirrors upconvert") {
  auto env = synthesize_pulse(ctrl_path(), 10e-6, {1.0, 0.0}, 2.0e6);
  const LoState lo{"lo", 1.0e6, 30.0};
  const auto up = upconvert(env, lo).materialize();
  const auto down = downconvert(env, lo).materialize();
  for (std::size_t k = 0; k < env.size(); ++k) {
    CHECK_THAT(std::abs(up[k] * down[k] - env.raw()[k] * env.raw()[k]),
               Catch::Matchers::WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("combine places pulses and sums overlaps") {
  const Tick period = 500;
  auto make = [&](double re, Tick start, std::size_t n) {
    return ComplexEnvelope(
        std::vector<std::complex<double>>(n, {re, 0.0}), start, period);
  };
  SECTION("single pulse identity placement") {
    const auto env = make(0.5, 0, 10);
    const auto out = combine({env}, {0});
    CHECK(out.materialize() == env.raw());
  }
  SECTION("two disjoint pulses with a silent gap") {
    const auto out =
        combine({make(1.0, 0, 10), make(2.0, 10000, 10)}, {0, 10000});
    const auto samples = out.materialize();
    REQUIRE(samples.size() == 30);
    for (std::size_t k = 0; k < 10; ++k) CHECK(samples[k].real() == 1.0);
    for (std::size_t k = 10; k < 20; ++k) CHECK(samples[k] == std::complex<double>{});
    for (std::size_t k = 20; k < 30; ++k) CHECK(samples[k].real() == 2.0);
  }
  SECTION("overlapping unit pulses superpose") {
    const auto out = combine({make(1.0, 0, 10), make(1.0, 0, 10)}, {0, 0});
    for (const auto& s : out.materialize()) {
      CHECK_THAT(std::abs(s), Catch::Matchers::WithinAbs(2.0, 1e-15));
    }
  }
  SECTION("scale equivariance") {
    const auto a = make(0.7, 0, 10);
    const auto scaled = make(2.1, 0, 10);
    const auto out = combine({a, a, a}, {0, 0, 0});
    const auto direct = scaled.materialize();
    const auto summed = out.materialize();
    for (std::size_t k = 0; k < 10; ++k) {
      CHECK_THAT(std::abs(summed[k] - direct[k]),
                 Catch::Matchers::WithinAbs(0.0, 1e-14));
    }
  }
}

TEST_CASE("noise floor disabled by -inf density") {
  auto env = synthesize_pulse(ctrl_path(), 10e-6, {1.0, 0.0}, 2.0e6);
  Rng rng(1);
  const auto out = add_noise_floor(env, -std::numeric_limits<double>::infinity(),
                                   0.0, rng);
  CHECK(out.raw() == env.raw());
}

TEST_CASE("noise floor variance matches the configured density") {
  // -148 dBm/Hz over 10 MHz on a 0 dBm pulse: SNR about 78 dB
  const double fs = 10.0e6;
  const std::size_t n = 200000;
  ComplexEnvelope env(std::vector<std::complex<double>>(n, {0.0, 0.0}), 0,
                      to_ticks(1.0 / fs));
  Rng rng(42);
  const auto out = add_noise_floor(std::move(env), -148.0, 0.0, rng);
  double power = 0.0;
  for (const auto& s : out.raw()) power += std::norm(s);
  power /= static_cast<double>(n);
  const double target = std::pow(10.0, -148.0 / 10.0) * fs;  // SNR 78 dB
  CHECK_THAT(std::sqrt(power), Catch::Matchers::WithinRel(std::sqrt(target), 0.05));
  CHECK_THAT(10.0 * std::log10(1.0 / target), Catch::Matchers::WithinAbs(78.0, 0.1));
}

TEST_CASE("noise floor is deterministic under a fixed seed") {
  auto make = [] {
    auto env = synthesize_pulse(ctrl_path(), 10e-6, {1.0, 0.0}, 2.0e6);
    Rng rng(99);
    return add_noise_floor(std::move(env), -148.0, 0.0, rng).raw();
  };
  CHECK(make() == make());
}

TEST_CASE("mean magnitude equals gain with noise disabled") {
  const auto env = synthesize_pulse(ctrl_path(), 100e-6, {0.998, 0.5}, 2.0e6);
  std::complex<double> acc{};
  for (const auto& s : env.raw()) acc += s;
  acc /= static_cast<double>(env.size());
  CHECK_THAT(std::abs(acc), Catch::Matchers::WithinAbs(0.998, 1e-13));
}
