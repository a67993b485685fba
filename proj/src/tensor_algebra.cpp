// Copyright 2026 The ftdsim Authors
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

#include "ftd/tensor_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cmath>
#include <numeric>
#include <sstream>

#include <fmt/format.h>

namespace ftd {

BipartiteDims::BipartiteDims(std::size_t dim_a, std::size_t dim_b) : dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a < 2 || dim_b < 2) {
    throw DimensionError(fmt::format("bipartite dims must both be >= 2, got ({}, {})", dim_a, dim_b));
  }
}

void BipartiteDims::require_square(const ComplexMatrix& m, const char* what) const {
  const auto n = static_cast<Eigen::Index>(total());
  if (m.rows() != n || m.cols() != n) {
    throw DimensionError(fmt::format("{}: expected {}x{} matrix for dims ({}, {}), got {}x{}", what, n, n,
                                     dim_a_, dim_b_, m.rows(), m.cols()));
  }
}

ComplexMatrix identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return ComplexMatrix::Identity(k, k);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const BipartiteDims& dims, Subsystem traced) {
  dims.require_square(m, "partial_trace");
  const auto da = static_cast<Eigen::Index>(dims.a());
  const auto db = static_cast<Eigen::Index>(dims.b());
  if (traced == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Eigen::Index k = 0; k < db; ++k)
    for (Eigen::Index l = 0; l < db; ++l)
      for (Eigen::Index i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const BipartiteDims& dims) {
  dims.require_square(m, "partial_transpose");
  const auto da = static_cast<Eigen::Index>(dims.a());
  const auto db = static_cast<Eigen::Index>(dims.b());
  ComplexMatrix out(m.rows(), m.cols());
  // <i k| m^{T_B} |j l> = <i l| m |j k>
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index k = 0; k < db; ++k)
      for (Eigen::Index j = 0; j < da; ++j)
        for (Eigen::Index l = 0; l < db; ++l) out(i * db + k, j * db + l) = m(i * db + l, j * db + k);
  return out;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m - m.adjoint());
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermiticity_defect(m) <= tol; }

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - identity(static_cast<std::size_t>(m.rows()))) <= tol;
}

ComplexMatrix hermitize(const ComplexMatrix& m) { return (m + m.adjoint()) * 0.5; }

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermitian_eigen: matrix is not square");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance) {
    throw NotHermitianError(fmt::format("hermitian_eigen: max|m - m^dagger| = {:.3e} exceeds {:.0e}", defect,
                                        kHermitianTolerance));
  }
  const Eigen::Index n = m.rows();
  ComplexMatrix a = hermitize(m);
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double threshold = kJacobiThreshold * std::max(1.0, a.norm());

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > threshold; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const cplx e = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase-rotate q so the (p,q) entry is real, then a real Jacobi
        // rotation annihilates it.
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx ce = std::conj(e);
        // W restricted to (p,q): [[c, s], [-s*conj(e), c*conj(e)]]
        for (Eigen::Index i = 0; i < n; ++i) {
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = c * aip - s * ce * aiq;
          a(i, q) = s * aip + c * ce * aiq;
          const cplx vip = v(i, p);
          const cplx viq = v(i, q);
          v(i, p) = c * vip - s * ce * viq;
          v(i, q) = s * vip + c * ce * viq;
        }
        for (Eigen::Index j = 0; j < n; ++j) {
          const cplx apj = a(p, j);
          const cplx aqj = a(q, j);
          a(p, j) = c * apj - s * e * aqj;
          a(q, j) = s * apj + c * e * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

std::vector<double> hermitian_spectrum(const ComplexMatrix& m) {
  const auto eig = hermitian_eigen(m);
  return {eig.values.data(), eig.values.data() + eig.values.size()};
}

ComplexMatrix unitary_evolution(const ComplexMatrix& h, double t) {
  const auto eig = hermitian_eigen(h);
  ComplexVector phases(eig.values.size());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) phases(k) = std::exp(cplx(0.0, -eig.values(k) * t));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  const double amag = std::abs(a(r, c));
  const double bmag = std::abs(b(r, c));
  if (amag == 0.0 || bmag == 0.0) return max_abs(a - b);
  const cplx phase = (a(r, c) / amag) / (b(r, c) / bmag);
  return max_abs(a - phase * b);
}

ComplexMatrix pauli(int which) {
  const cplx i(0.0, 1.0);
  ComplexMatrix p(2, 2);
  switch (which) {
    case 0: p << 1.0, 0.0, 0.0, 1.0; break;
    case 1: p << 0.0, 1.0, 1.0, 0.0; break;
    case 2: p << 0.0, -i, i, 0.0; break;
    case 3: p << 1.0, 0.0, 0.0, -1.0; break;
    default: throw std::out_of_range("pauli index must be 0..3");
  }
  return p;
}

namespace {

double parse_real(std::string_view s, const std::string& token) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed complex entry '" + token + "'");
  }
  return value;
}

}  // namespace

cplx parse_complex(const std::string& token) {
  std::string_view s(token);
  if (s.empty()) throw std::invalid_argument("empty complex entry");
  const bool imaginary = s.back() == 'j' || s.back() == 'i';
  if (!imaginary) return {parse_real(s, token), 0.0};
  s.remove_suffix(1);
  // Split at the last sign that is not an exponent sign and not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto coefficient = [&](std::string_view im) {
    if (im.empty() || im == "+") return 1.0;
    if (im == "-") return -1.0;
    return parse_real(im, token);
  };
  if (split == std::string_view::npos) return {0.0, coefficient(s)};
  return {parse_real(s.substr(0, split), token), coefficient(s.substr(split))};
}

std::string format_complex(cplx z) { return fmt::format("{:.17g}{:+.17g}j", z.real(), z.imag()); }

ComplexMatrix parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    rows.push_back(std::move(tokens));
  }
  if (rows.empty() || rows.front().size() != 2) throw std::invalid_argument("matrix text: expected 'rows cols' header");
  const auto nr = static_cast<Eigen::Index>(parse_real(rows[0][0], rows[0][0]));
  const auto nc = static_cast<Eigen::Index>(parse_real(rows[0][1], rows[0][1]));
  if (nr <= 0 || nc <= 0) throw std::invalid_argument("matrix text: dimensions must be positive");
  if (static_cast<Eigen::Index>(rows.size()) - 1 != nr) {
    throw std::invalid_argument(fmt::format("matrix text: header says {} rows, found {}", nr, rows.size() - 1));
  }
  ComplexMatrix m(nr, nc);
  for (Eigen::Index i = 0; i < nr; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i) + 1];
    if (static_cast<Eigen::Index>(r.size()) != nc) {
      throw std::invalid_argument(fmt::format("matrix text: row {} has {} entries, expected {}", i, r.size(), nc));
    }
    for (Eigen::Index j = 0; j < nc; ++j) {
      m(i, j) = parse_complex(r[static_cast<std::size_t>(j)]);
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        throw std::invalid_argument(fmt::format("matrix text: non-finite entry at ({}, {})", i, j));
      }
    }
  }
  return m;
}

std::string format_matrix_text(const ComplexMatrix& m) {
  std::string out = fmt::format("{} {}\n", m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += format_complex(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace ftd
