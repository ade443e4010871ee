// Copyright 2026 The dualrail authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "dualrail/gates.hpp"

using namespace dualrail;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

FredkinParams fredkin_at(double delta) {
  FredkinParams p;
  p.d1 = p.d2 = p.d4 = p.d5 = delta;
  return solve_fredkin3_resonance(p).params;
}

IswapParams iswap_at(double delta) {
  IswapParams p;
  p.d1 = p.d2 = p.d3 = delta;
  return solve_iswap_resonance(p).params;
}

}  // namespace

TEST_CASE("encoding follows the dual-rail pairing") {
  const Encoding f101 = encode(Gate::FredkinFast, LogicalState{{1, 0, 1}});
  Eigen::VectorXi expect(5);
  expect << 1, 0, 1, 1, 0;  // |10,01,10,a>
  CHECK(f101.state.photons == expect);
  CHECK(f101.state.level == 0);
  CHECK(f101.virtual_photons == std::vector<int>{0});

  const Encoding f110 = encode(Gate::FredkinFast, LogicalState{{1, 1, 0}});
  expect << 1, 1, 0, 0, 1;  // |10,10,01,a>
  CHECK(f110.state.photons == expect);

  const Encoding i10 = encode(Gate::ISwap, LogicalState{{1, 0}});
  Eigen::VectorXi expect4(4);
  expect4 << 1, 0, 1, 0;  // |1010,a>
  CHECK(i10.state.photons == expect4);

  CHECK_THROWS_AS(encode(Gate::ISwap, LogicalState{{1, 0, 1}}),
                  ValidationError);
  CHECK_THROWS_AS(encode(Gate::ISwap, LogicalState{{1, 2}}), ValidationError);
}

TEST_CASE("decode inverts encode and flags invalid states") {
  for (const Gate gate : {Gate::ISwap, Gate::FredkinFast, Gate::XRot,
                          Gate::ZRot}) {
    const int arity = gate_arity(gate);
    for (int mask = 0; mask < (1 << arity); ++mask) {
      LogicalState in;
      for (int q = arity - 1; q >= 0; --q) in.bits.push_back((mask >> q) & 1);
      const Encoding enc = encode(gate, in);
      const auto back = decode(gate, enc.state, enc.virtual_photons);
      REQUIRE(back.has_value());
      CHECK(*back == in);
    }
  }

  // A pair with zero total occupation does not decode.
  const Encoding enc = encode(Gate::FredkinFast, LogicalState{{1, 0, 1}});
  BasisState lost = enc.state;
  lost.photons[3] = 0;  // q3's excitation vanished
  CHECK_FALSE(decode(Gate::FredkinFast, lost, enc.virtual_photons).has_value());

  // The ancilla must exit in level a.
  BasisState wrong_level = enc.state;
  wrong_level.level = 3;
  CHECK_FALSE(
      decode(Gate::FredkinFast, wrong_level, enc.virtual_photons).has_value());
}

TEST_CASE("truth-table targets") {
  CHECK(truth_table_target(Gate::ISwap, LogicalState{{1, 0}}) ==
        LogicalState{{0, 1}});
  CHECK(truth_table_target(Gate::ISwap, LogicalState{{1, 1}}) ==
        LogicalState{{1, 1}});
  CHECK(truth_table_target(Gate::FredkinFast, LogicalState{{1, 1, 0}}) ==
        LogicalState{{1, 0, 1}});
  CHECK(truth_table_target(Gate::FredkinFast, LogicalState{{0, 1, 0}}) ==
        LogicalState{{0, 1, 0}});
}

TEST_CASE("interaction times from the effective models") {
  // Fast Fredkin at Delta = 20g: closed-form g1 = g2 = 1/400, so
  // t = 400 pi / sqrt(2).
  const GateSetup fast{Gate::FredkinFast, fredkin_at(20.0)};
  CHECK_THAT(interaction_time(fast),
             WithinRel(400.0 * kPi / std::sqrt(2.0), 1e-12));

  // iSWAP at Delta = 10g: exact g_eff = -1/980, so t = 490 pi.
  const GateSetup iswap{Gate::ISwap, iswap_at(10.0)};
  CHECK_THAT(interaction_time(iswap), WithinRel(490.0 * kPi, 1e-9));

  // Both multiphoton chains must vanish before g' does.
  FredkinParams zero = fredkin_at(20.0);
  zero.g_ab = 0.0;
  zero.g_fa = 0.0;
  CHECK_THROWS_AS(interaction_time(GateSetup{Gate::FredkinFast, zero}),
                  NumericalError);
}

TEST_CASE("fredkin gate runs at the reference point") {
  const GateSetup setup{Gate::FredkinFast, fredkin_at(20.0)};
  RunOptions opt;
  opt.measure = true;

  const GateRun swap = run_gate(setup, LogicalState{{1, 1, 0}}, opt);
  CHECK(swap.target == LogicalState{{1, 0, 1}});
  CHECK(swap.fidelity_raw >= 0.95);
  CHECK(swap.fidelity_conditional >= 0.999);
  CHECK(swap.fidelity_conditional >= swap.fidelity_raw - 1e-12);
  CHECK_THAT(swap.final_state.norm(), WithinAbs(1.0, 1e-9));
  CHECK(swap.leakage >= 0.0);
  CHECK(swap.leakage < 0.05);

  const GateRun blocked = run_gate(setup, LogicalState{{1, 0, 0}}, opt);
  CHECK(blocked.target == LogicalState{{1, 0, 0}});
  CHECK(blocked.fidelity_raw >= 0.99);

  // No control photon: the six-photon chain is broken and the row is almost
  // exactly stationary after the conditional measurement.
  const GateRun no_control = run_gate(setup, LogicalState{{0, 1, 0}}, opt);
  CHECK(no_control.fidelity_conditional >= 0.999);
}

TEST_CASE("fredkin truth table at the reference point") {
  const GateSetup setup{Gate::FredkinFast, fredkin_at(20.0)};
  RunOptions opt;
  opt.measure = true;
  const TruthTable table = truth_table(setup, opt);
  REQUIRE(table.rows.size() == 8);
  int swapped = 0;
  for (const auto& row : table.rows) {
    if (row.target != row.input) ++swapped;
    CHECK(row.fidelity_conditional >= 0.98);
    // Without the control photon the six-photon chain is broken.
    if (row.input.bits[0] == 0) CHECK(row.fidelity_conditional >= 0.999);
  }
  CHECK(swapped == 2);
  CHECK(table.worst_conditional >= 0.98);
}

TEST_CASE("iswap swaps with phase i") {
  const GateSetup setup{Gate::ISwap, iswap_at(100.0)};
  RunOptions opt;
  opt.measure = true;
  opt.phase_mode = PhaseMode::Strict;
  const GateRun run = run_gate(setup, LogicalState{{1, 0}}, opt);
  CHECK(run.target == LogicalState{{0, 1}});
  CHECK(run.fidelity_raw >= 0.99);
  REQUIRE(run.swap_phase_error.has_value());
  CHECK(*run.swap_phase_error < 0.01);

  const double phase = iswap_swap_phase(iswap_at(20.0));
  CHECK_THAT(phase, WithinAbs(kPi / 2.0, 0.02));
}

TEST_CASE("x rotation produces the expected flip and superposition") {
  XRotParams p;
  p.d1 = p.d2 = 50.0;
  p = solve_xrot_resonance(p).params;

  const GateRun flip = run_xrot(p, 0, kPi / 2.0, false);
  CHECK(flip.fidelity_raw >= 0.99);  // |0> -> -i|1> against the Rx target

  p.drive_phase = kPi / 2.0;
  const GateRun super = run_xrot(p, 0, kPi / 4.0, false);
  CHECK(super.fidelity_raw >= 0.995);

  // Identity truth table at theta = 2 pi.
  const GateSetup setup{Gate::XRot, p};
  RunOptions opt;
  opt.theta = 2.0 * kPi;
  const TruthTable table = truth_table(setup, opt);
  for (const auto& row : table.rows) {
    CHECK(row.target == row.input);
    CHECK(row.fidelity_raw >= 0.99);
  }
}

TEST_CASE("zrot phase follows the dispersive shift") {
  CHECK(zrot_phase(0.0, 50.0, 123.0) == 0.0);
  CHECK_THROWS_AS(zrot_phase(1.0, 0.0, 1.0), ValidationError);

  // Exact dressed shift (sqrt(Delta^2+4g^2)-Delta)/2; the accumulated phase
  // tracks shift*t to within the bounded non-secular wiggle ~ (g/Delta)^2.
  const auto dressed = [](double g, double delta) {
    return (std::sqrt(delta * delta + 4.0 * g * g) - delta) / 2.0;
  };
  const double p1 = zrot_phase(1.0, 100.0, 100.0);
  CHECK_THAT(p1, WithinAbs(dressed(1.0, 100.0) * 100.0, 2e-4));
  CHECK(std::abs(p1 - 1.0) / 1.0 <= 1e-4);  // vs first-order g^2 t / Delta

  const double p2 = zrot_phase(1.0, 10.0, 10.0);
  CHECK_THAT(p2, WithinAbs(dressed(1.0, 10.0) * 10.0, 0.011));
  CHECK(std::abs(p2 - 1.0) / 1.0 <= 2e-2);
}

TEST_CASE("zrot gate run leaves the logical state in place") {
  const GateSetup setup{Gate::ZRot, ZRotParams{1.0, 100.0}};
  RunOptions opt;
  opt.theta = 1.0;
  const GateRun run = run_gate(setup, LogicalState{{1}}, opt);
  CHECK(run.target == LogicalState{{1}});
  CHECK(run.fidelity_raw >= 0.99);
  const GateRun idle = run_gate(setup, LogicalState{{0}}, opt);
  CHECK(idle.fidelity_raw >= 1.0 - 1e-12);  // idle rail is uncoupled
}

TEST_CASE("gate names round-trip") {
  for (const Gate gate : {Gate::ISwap, Gate::FredkinSlow, Gate::FredkinFast,
                          Gate::XRot, Gate::ZRot}) {
    const auto back = gate_from_name(gate_name(gate));
    REQUIRE(back.has_value());
    CHECK(*back == gate);
  }
  CHECK_FALSE(gate_from_name("toffoli").has_value());
}
