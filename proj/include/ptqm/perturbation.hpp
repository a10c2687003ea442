// perturbation.hpp — Rayleigh-Schrodinger perturbation theory in the Hermite
// basis for the three cubic-coupled oscillator models:
//   ix3:  H = p^2/2 + x^2/2 + i eps x^3            (orders eps, eps^2)
//   ix2y: H = (px^2+py^2)/2 + (x^2+y^2)/2 + i eps x^2 y   (order eps)
//   ixyz: three oscillators + i eps xyz            (order eps)
// Wavefunctions are Gaussian-weighted Hermite series; every coefficient is an
// exact Gaussian rational.

#pragma once

#include <optional>

#include "ptqm/hermite_series.hpp"
#include "ptqm/multi_index.hpp"
#include "ptqm/rational.hpp"

namespace ptqm {

enum class ModelId { ix3, ix2y, ixyz };

inline int model_arity(ModelId m) {
    switch (m) {
        case ModelId::ix3: return 1;
        case ModelId::ix2y: return 2;
        case ModelId::ixyz: return 3;
    }
    return 1;
}

const char* model_name(ModelId m);

// V3 * s for the model's cubic coupling (x^3, x^2 y, or xyz), exact.
HermiteSeries cubic_coupling_times(ModelId model, const HermiteSeries& s);

// phi = N i^{|index|} a e^{-r^2/2} [H_index + eps P + eps^2 Q],
// E = E0 + eps A + eps^2 B.
struct PerturbedEigenstate {
    ModelId model = ModelId::ix3;
    MultiIndex index;
    HermiteSeries first_order;                  // P (coefficients imaginary)
    std::optional<HermiteSeries> second_order;  // Q (ix3 only)
    Rational energy_eps1 = 0;                   // A (vanishes for all models)
    std::optional<Rational> energy_eps2;        // B (ix3 only here)
    std::optional<Rational> norm_eps2;          // a = 1 + norm_eps2 * eps^2

    Rational unperturbed_energy_times2() const {  // 2*E0 = 2|index| + arity
        return Rational(2 * index.total() + index.arity());
    }
};

// Solve sum_k p_k (|k| - |n|) H_k = (A - i V3) H_n exactly. A comes out zero
// for all three models; asserted, not assumed.
PerturbedEigenstate first_order_state(ModelId model, const MultiIndex& index);

// Order eps^2 for the ix3 model: fills Q, B and the normalization constant.
PerturbedEigenstate second_order_state_ix3(int n);

// eps^2 coefficient of a_n fixed by int phi^2 = (-1)^n + O(eps^3), exact.
// At order eps (no Q computed) the correction vanishes and 0 is returned.
Rational pt_normalize(const PerturbedEigenstate& state);

// Residuals of (H - E) phi per power of eps, all of which must vanish
// identically; order is 1 or 2.
std::vector<HermiteSeries> schrodinger_residual(const PerturbedEigenstate& state, int order);

// Printed closed forms from the perturbative analysis; used as golden oracles
// in tests and exposed for the CLI.
HermiteSeries ix3_iP_closed_form(int n);           // i P_n
HermiteSeries ix3_Q_closed_form(int n);            // Q_n
Rational ix3_B_closed_form(int n);                 // (30 n^2 + 30 n + 11)/8
Rational ix3_norm_eps2_closed_form(int n);         // (2n+1)(82 n^2 + 82 n + 87)/144
HermiteSeries ix2y_iP_closed_form(int m, int n);   // i P_mn
HermiteSeries ixyz_iP_closed_form(int k, int l, int m);  // i P_klm

}  // namespace ptqm
