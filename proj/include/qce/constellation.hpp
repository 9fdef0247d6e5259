// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_CONSTELLATION_HPP
#define QCE_CONSTELLATION_HPP

#include <cstdint>
#include <vector>

#include "qce/types.hpp"

namespace qce {

/// M-ary PSK constellation: unit-magnitude points at phases 2*pi*m/M,
/// m = 0..M-1, with points[0] == 1 exactly.
struct PskConstellation {
    int order = 0;
    std::vector<Complex> points;

    static PskConstellation make(int m);
};

/// Constant-envelope transmit set: L points of magnitude sqrt(P_T/N) at the
/// offset phase grid (2l-1)*pi/L, l = 1..L. No point sits at phase 0.
struct QceAlphabet {
    int levels = 0;
    double amplitude = 0.0;
    std::vector<Complex> points;

    static QceAlphabet make(std::int64_t levels, int n_antennas, double total_power = 1.0);
};

/// Rounds z to the alphabet point whose phase is nearest to arg(z).
/// The returned value is bit-identical to an entry of alphabet.points.
/// Sector boundaries (exact ties) resolve to the counterclockwise candidate.
/// Throws Error(zero_input) when |z| < 1e-300.
Complex quantize_qce(Complex z, const QceAlphabet& alphabet);

/// 0-based index of the quantized point; same semantics as quantize_qce.
int quantize_qce_index(Complex z, const QceAlphabet& alphabet);

/// Sector lookup on the raw phase (phi in [-pi, pi]): index of the grid
/// point at (2k+1)*pi/L whose sector [2k pi/L, 2(k+1) pi/L) contains phi.
int quantize_phase_index(double phi, int levels);

/// Canonical phase in (-pi, pi] of alphabet point `index`, exact on the grid.
double qce_grid_phase(int index, int levels);

/// Nearest-neighbor PSK decision. Returns the 0-based symbol index whose
/// phase sector contains arg(y); boundary ties resolve counterclockwise.
/// A (measure-zero) zero input decodes as index 0 and bumps *degenerate_count.
int nearest_psk_decode(Complex y, const PskConstellation& constellation,
                       std::uint64_t* degenerate_count = nullptr);

} // namespace qce

#endif
