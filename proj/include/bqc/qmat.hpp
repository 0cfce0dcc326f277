#pragma once

// Dense complex matrices for one, two and three qubits.
//
// Everything here works on dimensions 2, 4 and 8 only. Storage is a fixed
// 8x8 array so matrices are plain values with no heap traffic. Qubits are
// ordered A, B, C from the most significant bit: basis index = 4a + 2b + c
// with R -> 0 and L -> 1.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqc {

using cplx = std::complex<double>;

class NotHermitian : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotPSD : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BadSubsystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidDensityMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class QubitLabel { A = 0, B = 1, C = 2 };

constexpr std::array<QubitLabel, 3> kAllQubits{QubitLabel::A, QubitLabel::B, QubitLabel::C};

const char *to_string(QubitLabel q);

/// Set of qubit labels, stored as a bitmask over positions A=0, B=1, C=2.
class QubitSet {
 public:
  constexpr QubitSet() = default;
  constexpr QubitSet(std::initializer_list<QubitLabel> labels) {
    for (auto q : labels) bits_ |= bit(q);
  }

  constexpr bool contains(QubitLabel q) const { return (bits_ & bit(q)) != 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>((bits_ & 1u) + ((bits_ >> 1) & 1u) + ((bits_ >> 2) & 1u));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr QubitSet complement() const {
    QubitSet s;
    s.bits_ = ~bits_ & 0x7u;
    return s;
  }
  /// Bit i set means qubit position i (A=0) is in the set.
  constexpr unsigned mask() const { return bits_; }

  friend constexpr bool operator==(QubitSet, QubitSet) = default;

 private:
  static constexpr unsigned bit(QubitLabel q) { return 1u << static_cast<unsigned>(q); }
  unsigned bits_ = 0;
};

class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 8;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::initializer_list<cplx> row_major);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<double> &d);
  /// |v><v| for a vector of length 2, 4 or 8.
  static ComplexMatrix outer(const std::vector<cplx> &v);

  std::size_t dim() const { return dim_; }
  /// Number of qubits, log2(dim).
  std::size_t qubits() const;

  cplx &operator()(std::size_t r, std::size_t c) { return data_[r * kMaxDim + c]; }
  const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * kMaxDim + c]; }

  cplx trace() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;

  ComplexMatrix &operator+=(const ComplexMatrix &o);
  ComplexMatrix &operator-=(const ComplexMatrix &o);
  ComplexMatrix &operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

  /// Largest entrywise modulus of (a - b); dimensions must agree.
  friend double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

 private:
  std::size_t dim_ = 0;
  std::array<cplx, kMaxDim * kMaxDim> data_{};
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// max |M - M^dagger| over all entries.
double hermiticity_defect(const ComplexMatrix &m);

struct Eigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalization. Throws NotHermitian above `tol`.
Eigensystem hermitian_eigensystem(const ComplexMatrix &m, double tol = 1e-10);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, double tol = 1e-10);

/// LU determinant with partial pivoting.
cplx determinant(const ComplexMatrix &m);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [-1e-8, 0) are clamped to zero; anything more negative throws NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix &m);

/// A Hermitian, unit-trace, PSD matrix of dimension 2, 4 or 8.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPsdTol = 1e-10;

  /// Validates every invariant; throws InvalidDensityMatrix.
  explicit DensityMatrix(const ComplexMatrix &m);
  /// Skips validation. For callers that construct rho from a normalized
  /// state and already know the invariants hold.
  static DensityMatrix trusted(const ComplexMatrix &m);

  const ComplexMatrix &matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  std::size_t qubits() const { return m_.qubits(); }
  const cplx &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  double purity() const;

 private:
  struct Trusted {};
  DensityMatrix(const ComplexMatrix &m, Trusted) : m_(m) {}
  ComplexMatrix m_;
};

/// Traces out every qubit whose position bit is set in `traced_mask`
/// (bit 0 = first/most significant qubit). Works for 2 and 3 qubits.
ComplexMatrix partial_trace_positions(const ComplexMatrix &rho, unsigned traced_mask);

/// Three-qubit partial trace by label. Throws BadSubsystem for an empty or
/// full set.
DensityMatrix partial_trace(const DensityMatrix &rho, QubitSet traced);

enum class Party { First, Second };

/// Transpose on one factor of a two-qubit matrix.
ComplexMatrix partial_transpose(const ComplexMatrix &rho, Party party);
ComplexMatrix partial_transpose(const DensityMatrix &rho, Party party);

/// Exchanges the two factors of a two-qubit matrix.
ComplexMatrix swap_qubits(const ComplexMatrix &rho);

/// Base-2 von Neumann entropy with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix &rho);
double entropy_of_spectrum(const std::vector<double> &eigenvalues);

}  // namespace bqc
