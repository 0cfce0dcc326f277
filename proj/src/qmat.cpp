#include "bqc/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bqc {

namespace {

constexpr double kSqrtReject = 1e-8;

void require_dim(std::size_t dim) {
  if (dim != 2 && dim != 4 && dim != 8) {
    throw std::invalid_argument("matrix dimension must be 2, 4 or 8, got " + std::to_string(dim));
  }
}

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

const char *to_string(QubitLabel q) {
  switch (q) {
    case QubitLabel::A: return "A";
    case QubitLabel::B: return "B";
    case QubitLabel::C: return "C";
  }
  return "?";
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { require_dim(dim); }

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<cplx> row_major) : ComplexMatrix(dim) {
  if (row_major.size() != dim * dim) throw std::invalid_argument("initializer size must be dim*dim");
  std::size_t k = 0;
  for (const auto &v : row_major) {
    (*this)(k / dim, k % dim) = v;
    ++k;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double> &d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<cplx> &v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

std::size_t ComplexMatrix::qubits() const {
  switch (dim_) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: return 0;
  }
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) += o(i, j);
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) -= o(i, j);
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) (*this)(i, j) *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  require_same_dim(a, b);
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  const std::size_t n = a.dim() * b.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) r(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return r;
}

double hermiticity_defect(const ComplexMatrix &m) {
  double d = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix &m, double tol) {
  const double defect = hermiticity_defect(m);
  if (defect > tol) {
    std::ostringstream os;
    os << "matrix is not Hermitian (defect " << defect << ")";
    throw NotHermitian(os.str());
  }

  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  // Symmetrize so round-off in the input cannot bias the rotations.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx h = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }
  }

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale += std::norm(a(i, j));
  scale = std::sqrt(scale);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-17 * scale || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        const cplx phase = a(p, q) / g;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // J = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p, q) plane.
        const cplx jpp = c;
        const cplx jpq = s;
        const cplx jqp = -s * std::conj(phase);
        const cplx jqq = c * std::conj(phase);

        // A <- A J (columns p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        // A <- J^dagger A (rows p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  Eigensystem es{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
  }
  return es;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, double tol) {
  return hermitian_eigensystem(m, tol).values;
}

cplx determinant(const ComplexMatrix &m) {
  const std::size_t n = m.dim();
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  ComplexMatrix lu = m;
  cplx det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(lu(r, col)) > std::abs(lu(piv, col))) piv = r;
    if (lu(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(piv, j), lu(col, j));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx f = lu(r, col) / lu(col, col);
      for (std::size_t j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return det;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m) {
  const Eigensystem es = hermitian_eigensystem(m);
  const std::size_t n = m.dim();
  ComplexMatrix r(n);
  for (std::size_t k = 0; k < n; ++k) {
    double w = es.values[k];
    if (w < -kSqrtReject) {
      std::ostringstream os;
      os << "matrix is not positive semidefinite (eigenvalue " << w << ")";
      throw NotPSD(os.str());
    }
    if (w <= 0.0) continue;
    const double sw = std::sqrt(w);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vi = es.vectors(i, k) * sw;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += vi * std::conj(es.vectors(j, k));
    }
  }
  return r;
}

DensityMatrix::DensityMatrix(const ComplexMatrix &m) : m_(m) {
  if (m.dim() != 2 && m.dim() != 4 && m.dim() != 8) throw InvalidDensityMatrix("density matrix must have dim 2, 4 or 8");
  if (hermiticity_defect(m) > kHermitianTol) throw InvalidDensityMatrix("density matrix is not Hermitian");
  if (std::abs(m.trace() - 1.0) > kTraceTol) throw InvalidDensityMatrix("density matrix trace differs from 1");
  const auto ev = hermitian_eigenvalues(m, kHermitianTol);
  if (ev.back() < -kPsdTol) throw InvalidDensityMatrix("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::trusted(const ComplexMatrix &m) { return DensityMatrix(m, Trusted{}); }

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double p = 0.0;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) p += std::norm(m_(i, j));
  return p;
}

ComplexMatrix partial_trace_positions(const ComplexMatrix &rho, unsigned traced_mask) {
  const std::size_t nq = rho.qubits();
  if (nq < 2) throw BadSubsystem("partial trace needs at least two qubits");
  const unsigned full = (1u << nq) - 1u;
  traced_mask &= full;
  if (traced_mask == 0 || traced_mask == full) throw BadSubsystem("traced set must be a nonempty proper subset");

  // Bit position of qubit q inside a basis index (qubit 0 is most significant).
  auto shift = [nq](std::size_t q) { return nq - 1 - q; };
  std::vector<std::size_t> kept, traced;
  for (std::size_t q = 0; q < nq; ++q) ((traced_mask >> q) & 1u ? traced : kept).push_back(q);

  ComplexMatrix out(std::size_t{1} << kept.size());
  auto compose = [&](std::size_t kept_index, std::size_t traced_index) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < kept.size(); ++k)
      if ((kept_index >> (kept.size() - 1 - k)) & 1u) idx |= std::size_t{1} << shift(kept[k]);
    for (std::size_t k = 0; k < traced.size(); ++k)
      if ((traced_index >> (traced.size() - 1 - k)) & 1u) idx |= std::size_t{1} << shift(traced[k]);
    return idx;
  };
  const std::size_t dk = out.dim();
  const std::size_t dt = std::size_t{1} << traced.size();
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) {
      cplx s = 0.0;
      for (std::size_t t = 0; t < dt; ++t) s += rho(compose(i, t), compose(j, t));
      out(i, j) = s;
    }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, QubitSet traced) {
  if (rho.dim() != 8) throw BadSubsystem("labelled partial trace expects a three-qubit state");
  if (traced.empty() || traced.size() == 3) throw BadSubsystem("traced set must be a nonempty proper subset of {A,B,C}");
  return DensityMatrix::trusted(partial_trace_positions(rho.matrix(), traced.mask()));
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, Party party) {
  if (rho.dim() != 4) throw std::invalid_argument("partial transpose expects a two-qubit matrix");
  ComplexMatrix r(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::size_t a = i >> 1, b = i & 1u, c = j >> 1, d = j & 1u;
      if (party == Party::First)
        std::swap(a, c);
      else
        std::swap(b, d);
      r((a << 1) | b, (c << 1) | d) = rho(i, j);
    }
  return r;
}

ComplexMatrix partial_transpose(const DensityMatrix &rho, Party party) { return partial_transpose(rho.matrix(), party); }

ComplexMatrix swap_qubits(const ComplexMatrix &rho) {
  if (rho.dim() != 4) throw std::invalid_argument("swap_qubits expects a two-qubit matrix");
  auto sw = [](std::size_t i) { return ((i & 1u) << 1) | (i >> 1); };
  ComplexMatrix r(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(sw(i), sw(j)) = rho(i, j);
  return r;
}

double entropy_of_spectrum(const std::vector<double> &eigenvalues) {
  double s = 0.0;
  for (double w : eigenvalues) {
    if (w <= 0.0) continue;  // clamped: 0 log 0 = 0
    s -= w * std::log2(w);
  }
  return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityMatrix &rho) { return entropy_of_spectrum(hermitian_eigenvalues(rho.matrix())); }

}  // namespace bqc
