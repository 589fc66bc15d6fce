#pragma once

#include <stdexcept>
#include <string>

namespace charex {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed irrep label (negative m entry, non-monotone parts, bad text form).
class invalid_label_error : public error {
 public:
  using error::error;
};

/// Weyl's formula requested at (nearly) coincident eigenvalues.
class degenerate_eigenvalues_error : public error {
 public:
  using error::error;
};

/// Zero eigenvalue combined with a negative determinant power, or a pole of a
/// closed-form generating function at an evaluation point.
class singular_input_error : public error {
 public:
  using error::error;
};

/// Generating-function parameter outside the domain where the series
/// converges on the unit circle.
class convergence_domain_error : public error {
 public:
  using error::error;
};

/// Series product whose convolution window is not finite.
class unsupported_support_error : public error {
 public:
  using error::error;
};

/// Enumeration cutoffs produce more terms than the configured maximum.
class resource_limit_error : public error {
 public:
  using error::error;
};

/// Torus quadrature requested for a rank where the grid cost is prohibitive.
class unsupported_rank_error : public error {
 public:
  using error::error;
};

/// Propagated failure from an eigensolver or factorization.
class numerical_error : public error {
 public:
  using error::error;
};

}  // namespace charex
