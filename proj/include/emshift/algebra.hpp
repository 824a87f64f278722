#pragma once

// Fixed-size complex matrices and the Weyl-basis Dirac matrix set.
//
// Conventions: metric diag(+1,-1,-1,-1); spatial indices 1..3 are (x,y,z);
// spin components pair (2,3)->1, (3,1)->2, (1,2)->3.

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>

namespace emshift {

using Complex = std::complex<double>;

/// Dense N x N complex matrix with value semantics. Entries are indexed
/// (row, col) from zero.
template <std::size_t N>
class Matrix {
public:
  constexpr Matrix() = default;

  static constexpr Matrix zero() { return Matrix{}; }

  static constexpr Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * N + c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * N + c];
  }

  Matrix adjoint() const {
    Matrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::array<Complex, N * N> entries_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

/// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

template <std::size_t N>
Matrix<N> anticommutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b + b * a;
}

template <std::size_t N>
Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b - b * a;
}

/// Pauli matrix sigma_p for p in {1,2,3}.
Matrix2 pauli(int p);

/// [[upper_left, 0], [0, lower_right]]
Matrix4 block_diag(const Matrix2& upper_left, const Matrix2& lower_right);

/// [[0, upper_right], [lower_left, 0]]
Matrix4 block_offdiag(const Matrix2& upper_right, const Matrix2& lower_left);

/// Minkowski metric g^{mu nu} = diag(+1,-1,-1,-1).
double metric(int mu, int nu);

/// Weyl-basis gamma^mu for mu in {0,1,2,3}. Throws std::out_of_range otherwise.
Matrix4 gamma(int mu);

/// gamma^5 in its explicit block form diag(-I2, +I2).
Matrix4 gamma5();

/// i gamma^0 gamma^1 gamma^2 gamma^3 evaluated by multiplication.
Matrix4 gamma5_from_product();

/// sigma^{ab} = i gamma^a gamma^b for distinct spatial a, b. Throws
/// std::invalid_argument when a == b and std::out_of_range for indices
/// outside 1..3.
Matrix4 sigma_ab(int a, int b);

/// Spin-vector component carried by the pair (a, b): (2,3)->1, (3,1)->2,
/// (1,2)->3, and the same p for the reversed pair.
int spin_component(int a, int b);

/// The ordered pair (a, b) whose sigma^{ab} is the p-th spin component.
std::array<int, 2> spin_pair(int p);

/// (I4 + sign * gamma^5) / 2 for sign = +1 or -1.
Matrix4 chiral_projector(int sign);

/// The five Dirac matrices in one bundle, so consumers can be fed a
/// substituted set (used by the verification runner's negative controls).
struct GammaSet {
  std::array<Matrix4, 4> gamma;
  Matrix4 gamma5;

  static GammaSet weyl();
};

}  // namespace emshift
