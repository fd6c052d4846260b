// Copyright 2026 The cvent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvent/fock.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvent/errors.h"

namespace cvent {

namespace {

using cplx = std::complex<double>;

double log_factorial(std::size_t n) {
    return std::lgamma(static_cast<double>(n) + 1);
}

double log_binomial(std::size_t n, std::size_t k) {
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// a_mode |psi>, exact on the truncated vector (lowering never leaves it).
std::vector<cplx> lower(const FockVector &s, std::size_t mode) {
    std::vector<cplx> out(s.amplitudes.size(), 0.0);
    const std::size_t L = s.levels();
    if (s.modes == 1) {
        for (std::size_t n = 0; n + 1 < L; ++n) {
            out[n] = std::sqrt(static_cast<double>(n + 1)) * s.amplitudes[n + 1];
        }
        return out;
    }
    for (std::size_t na = 0; na < L; ++na) {
        for (std::size_t nb = 0; nb < L; ++nb) {
            std::size_t ma = na + (mode == 0 ? 1 : 0);
            std::size_t mb = nb + (mode == 1 ? 1 : 0);
            if (ma < L && mb < L) {
                double n = static_cast<double>(mode == 0 ? ma : mb);
                out[na * L + nb] = std::sqrt(n) * s.amplitudes[ma * L + mb];
            }
        }
    }
    return out;
}

cplx inner(const std::vector<cplx> &x, const std::vector<cplx> &y) {
    cplx acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

FockVector lowered_state(const FockVector &s, std::vector<cplx> amplitudes) {
    FockVector t = s;
    t.amplitudes = std::move(amplitudes);
    return t;
}

}  // namespace

double FockVector::norm() const {
    double acc = 0;
    for (const cplx &c : amplitudes) {
        acc += std::norm(c);
    }
    return std::sqrt(acc);
}

bool FockVector::normalized(double tolerance) const {
    return std::abs(norm() - 1) <= tolerance;
}

cplx FockVector::amplitude(std::size_t n) const {
    if (modes != 1) {
        throw InvalidArgument("single-index amplitude on a two-mode vector");
    }
    return n < levels() ? amplitudes[n] : cplx(0.0);
}

cplx FockVector::amplitude(std::size_t n_a, std::size_t n_b) const {
    if (modes != 2) {
        throw InvalidArgument("two-index amplitude on a single-mode vector");
    }
    return (n_a < levels() && n_b < levels()) ? amplitudes[n_a * levels() + n_b] : cplx(0.0);
}

FockVector fock_vacuum(std::size_t modes, std::size_t cutoff) {
    if (modes != 1 && modes != 2) {
        throw InvalidArgument("Fock vectors support one or two modes");
    }
    FockVector v;
    v.modes = modes;
    v.cutoff = cutoff;
    std::size_t dim = modes == 1 ? cutoff + 1 : (cutoff + 1) * (cutoff + 1);
    v.amplitudes.assign(dim, 0.0);
    v.amplitudes[0] = 1.0;
    return v;
}

FockVector fock_squeezed_vacuum(double gain, std::size_t cutoff) {
    if (!(gain > 0) || !std::isfinite(gain)) {
        throw InvalidArgument("squeezing gain must be positive and finite");
    }
    if (cutoff < 4 || cutoff % 2 != 0) {
        throw InvalidArgument("cutoff must be even and at least 4");
    }
    // V+ = exp(-2r): r > 0 squeezes the amplitude quadrature.
    double r = -0.5 * std::log(gain);
    double t = std::tanh(r);
    FockVector v = fock_vacuum(1, cutoff);
    double c = 1 / std::sqrt(std::cosh(r));
    v.amplitudes[0] = c;
    for (std::size_t n = 2; n <= cutoff; n += 2) {
        c *= -t * std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n));
        v.amplitudes[n] = c;
    }
    v.leakage = std::max(0.0, 1 - v.norm() * v.norm());
    return v;
}

FockVector fock_product(const FockVector &first, const FockVector &second) {
    if (first.modes != 1 || second.modes != 1) {
        throw InvalidArgument("fock_product takes two single-mode vectors");
    }
    if (first.cutoff != second.cutoff) {
        throw InvalidArgument("fock_product needs equal cutoffs");
    }
    FockVector v = fock_vacuum(2, first.cutoff);
    const std::size_t L = first.levels();
    for (std::size_t a = 0; a < L; ++a) {
        for (std::size_t b = 0; b < L; ++b) {
            v.amplitudes[a * L + b] = first.amplitudes[a] * second.amplitudes[b];
        }
    }
    v.leakage = std::max(0.0, 1 - v.norm() * v.norm());
    return v;
}

FockVector fock_beamsplitter(const FockVector &input, double transmissivity, double max_leakage) {
    if (input.modes != 2) {
        throw InvalidArgument("fock_beamsplitter needs a two-mode vector");
    }
    if (!(transmissivity > 0 && transmissivity < 1)) {
        throw InvalidArgument("transmissivity must lie in (0, 1)");
    }
    const double t = std::sqrt(transmissivity);
    const double r = std::sqrt(1 - transmissivity);
    const std::size_t L = input.levels();
    FockVector out = fock_vacuum(2, input.cutoff);
    out.amplitudes[0] = 0;
    // |m, n> = a^dag^m b^dag^n / sqrt(m! n!) |00>, with
    // a^dag -> t a^dag + r b^dag and b^dag -> r a^dag - t b^dag.
    for (std::size_t m = 0; m < L; ++m) {
        for (std::size_t n = 0; n < L; ++n) {
            cplx amp = input.amplitudes[m * L + n];
            if (amp == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j <= m; ++j) {
                for (std::size_t k = 0; k <= n; ++k) {
                    std::size_t p = j + k;
                    std::size_t q = m + n - p;
                    if (p >= L || q >= L) {
                        continue;
                    }
                    double log_mag = log_binomial(m, j) + log_binomial(n, k) +
                                     0.5 * (log_factorial(p) + log_factorial(q) - log_factorial(m) - log_factorial(n));
                    double coeff = std::exp(log_mag) * std::pow(t, static_cast<double>(j)) *
                                   std::pow(r, static_cast<double>(m - j + k)) *
                                   std::pow(t, static_cast<double>(n - k)) * (((n - k) % 2) ? -1.0 : 1.0);
                    out.amplitudes[p * L + q] += coeff * amp;
                }
            }
        }
    }
    double norm2 = out.norm() * out.norm();
    out.leakage = std::max(0.0, 1 - norm2);
    if (out.leakage > max_leakage) {
        throw CutoffTooSmall("beamsplitter truncation leakage " + std::to_string(out.leakage) +
                             " exceeds the allowed " + std::to_string(max_leakage));
    }
    return out;
}

Eigen::VectorXd fock_quadrature_mean(const FockVector &state) {
    double norm2 = state.norm() * state.norm();
    if (norm2 <= 0) {
        throw InvalidArgument("zero Fock vector");
    }
    Eigen::VectorXd mean(2 * state.modes);
    for (std::size_t i = 0; i < state.modes; ++i) {
        cplx a = inner(state.amplitudes, lower(state, i)) / norm2;
        mean(2 * i) = 2 * a.real();
        mean(2 * i + 1) = 2 * a.imag();
    }
    return mean;
}

Eigen::MatrixXd fock_quadrature_covariance(const FockVector &state) {
    double norm2 = state.norm() * state.norm();
    if (norm2 <= 0) {
        throw InvalidArgument("zero Fock vector");
    }
    const std::size_t M = state.modes;
    std::vector<std::vector<cplx>> lowered;
    for (std::size_t i = 0; i < M; ++i) {
        lowered.push_back(lower(state, i));
    }
    // <a_i a_j>, <a_i^dag a_j>
    Eigen::MatrixXcd aa(M, M), ada(M, M);
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = 0; j < M; ++j) {
            aa(i, j) = inner(state.amplitudes, lower(lowered_state(state, lowered[j]), i)) / norm2;
            ada(i, j) = inner(lowered[i], lowered[j]) / norm2;
        }
    }
    // X = alpha a + conj(alpha) a^dag with alpha = 1 (X+) or -i (X-).
    const cplx alphas[2] = {cplx(1, 0), cplx(0, -1)};
    Eigen::VectorXd mean = fock_quadrature_mean(state);
    Eigen::MatrixXd cov(2 * M, 2 * M);
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t qi = 0; qi < 2; ++qi) {
            for (std::size_t j = 0; j < M; ++j) {
                for (std::size_t qj = 0; qj < 2; ++qj) {
                    cplx ak = alphas[qi];
                    cplx al = alphas[qj];
                    double delta = i == j ? 1.0 : 0.0;
                    // <a_i a_j^dag> = <a_j^dag a_i> + delta; <a_i^dag a_j^dag> = conj <a_j a_i>.
                    cplx kl = ak * al * aa(i, j) + ak * std::conj(al) * (ada(j, i) + delta) +
                              std::conj(ak) * al * ada(i, j) + std::conj(ak) * std::conj(al) * std::conj(aa(j, i));
                    cplx lk = al * ak * aa(j, i) + al * std::conj(ak) * (ada(i, j) + delta) +
                              std::conj(al) * ak * ada(j, i) + std::conj(al) * std::conj(ak) * std::conj(aa(i, j));
                    std::size_t row = 2 * i + qi;
                    std::size_t col = 2 * j + qj;
                    cov(row, col) = 0.5 * (kl + lk).real() - mean(row) * mean(col);
                }
            }
        }
    }
    return cov;
}

}  // namespace cvent
