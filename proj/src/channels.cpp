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

#include "ftd/channels.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "ftd/kernels.hpp"
#include "ftd/random.hpp"

namespace ftd {

Channel::Channel(std::vector<ComplexMatrix> kraus, std::optional<BipartiteDims> dims)
    : kraus_(std::move(kraus)), dims_(dims) {
  if (kraus_.empty()) throw InvalidChannelError("channel: empty Kraus list");
  const Eigen::Index n = kraus_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& k : kraus_) {
    if (k.rows() != n || k.cols() != n) throw InvalidChannelError("channel: Kraus operators must be square and equal size");
    sum += k.adjoint() * k;
  }
  if (dims_ && dims_->total() != static_cast<std::size_t>(n)) {
    throw DimensionError(fmt::format("channel: {}x{} Kraus operators for dims ({}, {})", n, n, dims_->a(), dims_->b()));
  }
  const double defect = max_abs(sum - ComplexMatrix::Identity(n, n));
  if (defect > kTracePreservingTolerance) {
    throw InvalidChannelError(fmt::format("channel: sum K^dagger K deviates from I by {:.3e}", defect));
  }
}

Channel Channel::unitary(const ComplexMatrix& u, std::optional<BipartiteDims> dims) { return Channel({u}, dims); }

Channel Channel::identity(std::size_t dimension, std::optional<BipartiteDims> dims) {
  return Channel({ftd::identity(dimension)}, dims);
}

ComplexMatrix Channel::apply(const ComplexMatrix& m) const {
  if (m.rows() != kraus_.front().rows() || m.cols() != kraus_.front().cols()) {
    throw DimensionError(fmt::format("channel apply: {}x{} input for a {}-dimensional channel", m.rows(), m.cols(),
                                     kraus_.front().rows()));
  }
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (const auto& k : kraus_) out.noalias() += k * m * k.adjoint();
  return out;
}

DensityOperator apply(const Channel& ch, const DensityOperator& rho) {
  if (ch.dims() && !(*ch.dims() == rho.dims())) throw DimensionError("apply: channel and state dims differ");
  return {ch.apply(rho.matrix()), rho.dims()};
}

bool is_unital(const Channel& ch) {
  const auto n = static_cast<Eigen::Index>(ch.dimension());
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& k : ch.kraus()) sum += k * k.adjoint();
  return max_abs(sum - ComplexMatrix::Identity(n, n)) <= kUnitalTolerance;
}

namespace {

ComplexMatrix kraus_gram(const Channel& ch) {
  const auto& ks = ch.kraus();
  const auto m = static_cast<Eigen::Index>(ks.size());
  ComplexMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      g(i, j) = (ks[static_cast<std::size_t>(i)].adjoint() * ks[static_cast<std::size_t>(j)]).trace();
  return hermitize(g);
}

}  // namespace

std::size_t effective_kraus_rank(const Channel& ch, double tol) {
  const auto values = hermitian_eigen(kraus_gram(ch)).values;
  const double scale = static_cast<double>(ch.dimension());
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (values(i) > tol * scale) ++rank;
  return rank;
}

std::optional<ComplexMatrix> as_unitary(const Channel& ch) {
  if (ch.kraus().size() == 1) {
    if (is_unitary(ch.kraus().front())) return ch.kraus().front();
    return std::nullopt;
  }
  const auto eig = hermitian_eigen(kraus_gram(ch));
  if (effective_kraus_rank(ch) != 1) return std::nullopt;
  // All K_i are multiples of one operator; the top Gram eigenvector picks it.
  const Eigen::Index top = eig.values.size() - 1;
  const auto n = static_cast<Eigen::Index>(ch.dimension());
  ComplexMatrix u = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < ch.kraus().size(); ++i) u += eig.vectors(static_cast<Eigen::Index>(i), top) * ch.kraus()[i];
  u /= std::sqrt((u.adjoint() * u).trace().real() / static_cast<double>(n));
  if (!is_unitary(u, 1e-8)) return std::nullopt;
  return u;
}

namespace {

// Basis states and pairwise superpositions (|j> + |k>)/sqrt2, (|j> + i|k>)/sqrt2.
std::vector<ComplexVector> structured_probes(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<ComplexVector> out;
  for (Eigen::Index j = 0; j < n; ++j) out.push_back(ComplexVector::Unit(n, j));
  const double h = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexVector plus = ComplexVector::Zero(n);
      plus(j) = h;
      plus(k) = h;
      out.push_back(plus);
      ComplexVector phased = ComplexVector::Zero(n);
      phased(j) = h;
      phased(k) = cplx(0.0, h);
      out.push_back(phased);
    }
  return out;
}

double image_purity(const Channel& ch, const ComplexVector& v) {
  const ComplexMatrix image = ch.apply(v * v.adjoint());
  return (image * image).trace().real();
}

}  // namespace

PurityCheck is_pure_state_preserving(const Channel& ch, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("is_pure_state_preserving: trials must be >= 1");
  PurityCheck result;
  auto check = [&](const ComplexVector& v) {
    ++result.states_checked;
    const double p = image_purity(ch, v);
    if (p < 1.0 - kPurityTolerance) {
      result.preserving = false;
      result.witness = v;
      result.witness_purity = p;
      return false;
    }
    return true;
  };
  for (const auto& v : structured_probes(ch.dimension()))
    if (!check(v)) return result;
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t)
    if (!check(haar_vector(ch.dimension(), rng))) return result;
  return result;
}

ComplexMatrix swap_operator(const BipartiteDims& dims) {
  if (dims.a() != dims.b()) {
    throw DimensionError(fmt::format("SWAP needs equal factor dimensions, got ({}, {})", dims.a(), dims.b()));
  }
  const auto d = static_cast<Eigen::Index>(dims.a());
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k) s(k * d + j, j * d + k) = 1.0;
  return s;
}

std::string to_string(UnitaryTag tag) {
  switch (tag) {
    case UnitaryTag::Local: return "Local";
    case UnitaryTag::LocalSwap: return "LocalSwap";
    case UnitaryTag::NotProductPreserving: return "NotProductPreserving";
  }
  return "?";
}

namespace {

constexpr double kOverlapTolerance = 1e-6;

struct ProductImage {
  ComplexVector a;  // unit vector on A
  ComplexVector b;  // on B, carries norm and phase
  double gap = 0.0; // second Schmidt coefficient
};

ProductImage factor_product(const ComplexVector& v, const BipartiteDims& dims) {
  const auto da = static_cast<Eigen::Index>(dims.a());
  const auto db = static_cast<Eigen::Index>(dims.b());
  ComplexMatrix m(da, db);
  for (Eigen::Index j = 0; j < da; ++j)
    for (Eigen::Index k = 0; k < db; ++k) m(j, k) = v(j * db + k);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  return {svd.matrixU().col(0), s(0) * svd.matrixV().col(0).conjugate(), s.size() > 1 ? s(1) : 0.0};
}

enum class Branch { FirstFactorRotates, SecondFactorRotates, Neither };

// For two orthogonal product images x_a (x) x_b and y_a (x) y_b, their sum is
// product only when one factor pair is orthogonal and the other parallel.
Branch pair_branch(const ProductImage& x, const ProductImage& y) {
  const double oa = std::abs(x.a.dot(y.a));
  const double ob = std::abs(x.b.normalized().dot(y.b.normalized()));
  if (oa < kOverlapTolerance && ob > 1.0 - kOverlapTolerance) return Branch::FirstFactorRotates;
  if (ob < kOverlapTolerance && oa > 1.0 - kOverlapTolerance) return Branch::SecondFactorRotates;
  return Branch::Neither;
}

struct LocalFactorization {
  std::optional<std::pair<ComplexMatrix, ComplexMatrix>> factors;
  std::string reason;
};

// Follows the constructive argument for a unitary whose basis images are
// product: the branch of every pair must be the same, moving along A must
// rotate only the A factor (and along B only the B factor), and the phases
// must obey theta_jk = theta_j0 + theta_0k. Then w = U_A (x) U_B with
// U_A|j> = e^{i theta_j0} psi_j0 and U_B|k> = e^{i theta_0k} phi_0k.
LocalFactorization factor_local(const ComplexMatrix& w, const BipartiteDims& dims,
                                const std::vector<ProductImage>& images) {
  const std::size_t da = dims.a();
  const std::size_t db = dims.b();
  auto image = [&](std::size_t j, std::size_t k) -> const ProductImage& { return images[j * db + k]; };

  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t jj = j + 1; jj < da; ++jj)
        if (pair_branch(image(j, k), image(jj, k)) != Branch::FirstFactorRotates) {
          return {std::nullopt, fmt::format("images of |{}{}> and |{}{}> break the local branch", j, k, jj, k)};
        }
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t kk = k + 1; kk < db; ++kk)
        if (pair_branch(image(j, k), image(j, kk)) != Branch::SecondFactorRotates) {
          return {std::nullopt, fmt::format("images of |{}{}> and |{}{}> break the local branch", j, k, j, kk)};
        }

  // Phase fixing: theta_00 = 0 by taking b0 from the image of |00>.
  const auto na = static_cast<Eigen::Index>(da);
  const auto nb = static_cast<Eigen::Index>(db);
  const ComplexVector a0 = image(0, 0).a;
  const ComplexVector b0 = image(0, 0).b.normalized();
  ComplexMatrix ua(na, na);
  ComplexMatrix ub(nb, nb);
  auto column = [&](std::size_t j, std::size_t k) -> ComplexVector {
    return w.col(static_cast<Eigen::Index>(j * db + k));
  };
  for (std::size_t j = 0; j < da; ++j) {
    const ComplexVector v = column(j, 0);
    ComplexVector a = ComplexVector::Zero(na);  // (I (x) <b0|) v
    for (Eigen::Index x = 0; x < na; ++x)
      for (Eigen::Index y = 0; y < nb; ++y) a(x) += std::conj(b0(y)) * v(x * nb + y);
    ua.col(static_cast<Eigen::Index>(j)) = a;
  }
  for (std::size_t k = 0; k < db; ++k) {
    const ComplexVector v = column(0, k);
    ComplexVector b = ComplexVector::Zero(nb);  // (<a0| (x) I) v
    for (Eigen::Index x = 0; x < na; ++x)
      for (Eigen::Index y = 0; y < nb; ++y) b(y) += std::conj(a0(x)) * v(x * nb + y);
    ub.col(static_cast<Eigen::Index>(k)) = b;
  }
  // Phase law on every basis image: theta_jk - theta_j0 - theta_0k = 0.
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t k = 0; k < db; ++k) {
      const ComplexVector predicted = kron(ComplexVector(ua.col(static_cast<Eigen::Index>(j))),
                                           ComplexVector(ub.col(static_cast<Eigen::Index>(k))));
      const cplx overlap = predicted.dot(column(j, k));
      if (std::abs(overlap - 1.0) > kOverlapTolerance) {
        const double theta = std::arg(overlap);
        return {std::nullopt, fmt::format("phase law violated at |{}{}> (residual phase {:.3e})", j, k, theta)};
      }
    }

  // Superposition product vectors (|j> + |j'>)(|k> + |k'>) must stay product.
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t jj = j + 1; jj < da; ++jj)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t kk = k + 1; kk < db; ++kk) {
          const ComplexVector v = 0.5 * (column(j, k) + column(j, kk) + column(jj, k) + column(jj, kk));
          const double gap = factor_product(v, dims).gap;
          if (gap > kSchmidtTolerance) {
            return {std::nullopt, fmt::format("image of (|{}>+|{}>)(|{}>+|{}>) is entangled", j, jj, k, kk)};
          }
        }

  const double residual = max_abs(w - kron(ua, ub));
  if (residual > kFactorTolerance) {
    return {std::nullopt, fmt::format("factor reconstruction residual {:.3e}", residual)};
  }
  return {std::make_pair(std::move(ua), std::move(ub)), {}};
}

std::vector<ProductImage> basis_images(const ComplexMatrix& w, const BipartiteDims& dims) {
  std::vector<ProductImage> out;
  out.reserve(dims.total());
  for (std::size_t c = 0; c < dims.total(); ++c) out.push_back(factor_product(w.col(static_cast<Eigen::Index>(c)), dims));
  return out;
}

}  // namespace

UnitaryClass classify_product_preserving_unitary(const ComplexMatrix& u, const BipartiteDims& dims) {
  dims.require_square(u, "classify_product_preserving_unitary");
  if (!is_unitary(u, 1e-9)) {
    throw NotUnitaryError(fmt::format("classify_product_preserving_unitary: input is not unitary (max|U^dagger U - I| = {:.3e})",
                                      max_abs(u.adjoint() * u - identity(dims.total()))));
  }
  const auto images = basis_images(u, dims);
  for (std::size_t c = 0; c < images.size(); ++c) {
    if (images[c].gap > kSchmidtTolerance) {
      return {UnitaryTag::NotProductPreserving, std::nullopt,
              fmt::format("image of |{}{}> is entangled (Schmidt gap {:.3e})", c / dims.b(), c % dims.b(), images[c].gap)};
    }
  }

  // The branch is decided by the first pair along A at k = 0 and must then
  // hold for every pair; factor_local checks the rest.
  const Branch branch = pair_branch(images[0], images[dims.b()]);
  if (branch == Branch::FirstFactorRotates) {
    auto local = factor_local(u, dims, images);
    if (local.factors) return {UnitaryTag::Local, std::move(local.factors), {}};
    return {UnitaryTag::NotProductPreserving, std::nullopt, local.reason};
  }
  if (branch == Branch::SecondFactorRotates) {
    if (dims.a() != dims.b()) {
      return {UnitaryTag::NotProductPreserving, std::nullopt,
              "moving along A rotates the B factor, impossible for unequal factor dimensions"};
    }
    // u = (U_A (x) U_B) S  <=>  u S = U_A (x) U_B.
    const ComplexMatrix w = u * swap_operator(dims);
    auto local = factor_local(w, dims, basis_images(w, dims));
    if (local.factors) return {UnitaryTag::LocalSwap, std::move(local.factors), {}};
    return {UnitaryTag::NotProductPreserving, std::nullopt, local.reason};
  }
  return {UnitaryTag::NotProductPreserving, std::nullopt, "image of (|0>+|1>)|0> is entangled"};
}

std::string to_string(ReconstructionFailure f) {
  switch (f) {
    case ReconstructionFailure::NotUnital: return "NotUnital";
    case ReconstructionFailure::NotPurePreserving: return "NotPurePreserving";
    case ReconstructionFailure::PhaseInconsistent: return "PhaseInconsistent";
  }
  return "?";
}

ComplexMatrix reconstruct_unitary_from_channel(const Channel& ch) {
  if (!is_unital(ch)) throw ReconstructionError(ReconstructionFailure::NotUnital, "channel is not unital");
  const std::size_t d = ch.dimension();
  const auto n = static_cast<Eigen::Index>(d);

  // Every structured probe must have a pure image; a top eigenvalue short of 1
  // by more than kProjectorGap makes projector extraction ill-conditioned.
  auto top_eigen = [&](const ComplexVector& v) {
    const auto eig = hermitian_eigen(ch.apply(v * v.adjoint()));
    if (eig.values(n - 1) < 1.0 - kProjectorGap) {
      throw ReconstructionError(ReconstructionFailure::NotPurePreserving,
                                fmt::format("image of a probe state has top eigenvalue {:.9f}", eig.values(n - 1)), v);
    }
    return ComplexVector(eig.vectors.col(n - 1));
  };
  const auto probes = structured_probes(d);
  std::vector<ComplexVector> psi;
  for (std::size_t j = 0; j < d; ++j) psi.push_back(top_eigen(probes[j]));
  for (std::size_t p = d; p < probes.size(); ++p) top_eigen(probes[p]);

  // Phases: Lambda((|0> + |j>)(<0| + <j|)/2) = (psi_0 + z_j psi_j)(...)^dagger / 2.
  ComplexMatrix v(n, n);
  v.col(0) = psi[0];
  const double h = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 1; j < n; ++j) {
    ComplexVector chi = ComplexVector::Zero(n);
    chi(0) = h;
    chi(j) = h;
    const ComplexMatrix image = ch.apply(chi * chi.adjoint());
    const cplx z = 2.0 * psi[static_cast<std::size_t>(j)].dot(image * psi[0]);
    if (std::abs(std::abs(z) - 1.0) > kProjectorGap) {
      throw ReconstructionError(ReconstructionFailure::PhaseInconsistent,
                                fmt::format("relative phase z_{} has modulus {:.9f}", j, std::abs(z)));
    }
    v.col(j) = (z / std::abs(z)) * psi[static_cast<std::size_t>(j)];
  }

  if (!is_unitary(v, 1e-8)) {
    throw ReconstructionError(ReconstructionFailure::PhaseInconsistent, "reconstructed operator is not unitary");
  }
  std::vector<ComplexVector> checks = probes;
  Rng rng(0x5eed);
  for (int r = 0; r < 8; ++r) checks.push_back(haar_vector(d, rng));
  for (const auto& x : checks) {
    const ComplexMatrix rho = x * x.adjoint();
    const double err = max_abs(ch.apply(rho) - v * rho * v.adjoint());
    if (err > kFactorTolerance) {
      throw ReconstructionError(ReconstructionFailure::PhaseInconsistent,
                                fmt::format("reconstruction residual {:.3e} on a verification state", err));
    }
  }
  return v;
}

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Found: return "Found";
    case WitnessStatus::NoWitnessExists: return "NoWitnessExists";
    case WitnessStatus::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

std::vector<ComplexVector> local_probe_states(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  std::vector<ComplexVector> out;
  for (Eigen::Index j = 0; j < n; ++j) out.push_back(ComplexVector::Unit(n, j));
  const double h = 1.0 / std::sqrt(2.0);
  const cplx phases[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = j + 1; k < n; ++k)
      for (const cplx w : phases) {
        ComplexVector v = ComplexVector::Zero(n);
        v(j) = h;
        v(k) = w * h;
        out.push_back(v);
      }
  return out;
}

WitnessSearch find_entangled_to_product_witness(const ComplexMatrix& u, const BipartiteDims& dims, std::size_t budget,
                                                std::uint64_t seed) {
  WitnessSearch result;
  const auto cls = classify_product_preserving_unitary(u, dims);
  if (cls.tag != UnitaryTag::NotProductPreserving) {
    result.status = WitnessStatus::NoWitnessExists;
    return result;
  }
  const ComplexMatrix inverse = u.adjoint();

  std::vector<ComplexVector> candidates;
  const auto grid_a = local_probe_states(dims.a());
  const auto grid_b = local_probe_states(dims.b());
  for (const auto& a : grid_a)
    for (const auto& b : grid_b) candidates.push_back(kron(a, b));

  ComplexVector best;
  double best_gap = -1.0;
  auto consider = [&](const std::vector<ComplexVector>& batch) {
    const auto gaps = kernels::parallel::image_schmidt_gaps(inverse, batch, dims);
    const std::size_t i = kernels::first_argmax(gaps);
    result.candidates_tried += batch.size();
    if (gaps[i] > best_gap) {
      best_gap = gaps[i];
      best = batch[i];
    }
  };
  consider(candidates);

  Rng rng(seed);
  constexpr std::size_t kChunk = 64;
  std::size_t drawn = 0;
  while (best_gap <= kWitnessGap && drawn < budget) {
    std::vector<ComplexVector> batch;
    for (; batch.size() < kChunk && drawn < budget; ++drawn) {
      const ComplexVector a = haar_vector(dims.a(), rng);
      const ComplexVector b = haar_vector(dims.b(), rng);
      batch.push_back(kron(a, b));
    }
    consider(batch);
  }

  result.schmidt_gap = best_gap;
  result.product = PureState::normalized(best, dims);
  result.entangled = PureState::normalized(inverse * best, dims);
  result.status = best_gap > kWitnessGap ? WitnessStatus::Found : WitnessStatus::BudgetExhausted;
  return result;
}

Channel depolarizing_channel(double q) {
  if (!(q >= 0.0 && q <= 16.0 / 15.0)) throw std::invalid_argument("depolarizing_channel: q outside [0, 16/15]");
  std::vector<ComplexMatrix> kraus;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double w = (a == 0 && b == 0) ? 1.0 - 15.0 * q / 16.0 : q / 16.0;
      kraus.push_back(std::sqrt(w) * kron(pauli(a), pauli(b)));
    }
  return Channel(std::move(kraus), BipartiteDims(2, 2));
}

Channel one_sided_dephasing_channel(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("one_sided_dephasing_channel: q outside [0, 1]");
  return Channel({std::sqrt(1.0 - q) * identity(4), std::sqrt(q) * kron(pauli(3), pauli(0))}, BipartiteDims(2, 2));
}

Channel amplitude_damping_channel(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("amplitude_damping_channel: gamma outside [0, 1]");
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma);
  return Channel({k0, k1});
}

Channel constant_channel(const ComplexVector& phi0, std::optional<BipartiteDims> dims) {
  const ComplexVector unit = phi0.normalized();
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 0; k < unit.size(); ++k) kraus.push_back(unit * ComplexVector::Unit(unit.size(), k).adjoint());
  return Channel(std::move(kraus), dims);
}

}  // namespace ftd
