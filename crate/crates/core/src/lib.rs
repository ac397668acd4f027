//! Exact exterior algebra over a finite-dimensional space.
//!
//! The crate is organized bottom-up:
//!
//! * [`index`] enumerates placements, injections and combinations over
//!   `{1..n}` and computes permutation parity.
//! * [`scalar`] fixes the coefficient field. Everything is generic over
//!   [`Scalar`]; the exact instantiation is [`Rational`].
//! * [`matrix`] and [`determinant`] provide dense matrices, minors and three
//!   independent determinant engines.
//! * [`tensor`] holds dense tensors and the alternation projector.
//! * [`multivector`] is the Grassmann algebra: wedge, left-multiplication
//!   operators, the dual pairing and contraction.
//! * [`compound`] is the exterior power of a linear map (compound matrices).
//! * [`forms`] carries differential forms with polynomial coefficients.
//! * [`json`] is the canonical JSON wire format, [`random`] the seeded
//!   generators and [`check`] the property-suite runner used by the CLI.

pub mod check;
pub mod compound;
pub mod determinant;
pub mod error;
pub mod forms;
pub mod index;
pub mod json;
pub mod matrix;
pub mod multivector;
pub mod random;
pub mod scalar;
pub mod tensor;

pub use compound::{apply_map, exterior_power_map};
pub use determinant::{cauchy_binet, det_laplace, det_leibniz, det_subsets, minor};
pub use error::{Error, Result};
pub use forms::{Monomial, PolyForm, Polynomial};
pub use index::{Combination, Injection, Permutation, Placement, Sign};
pub use matrix::Matrix;
pub use multivector::{Clutch, Dual, GradedElement, Multivector};
pub use scalar::Scalar;
pub use tensor::Tensor;

/// Exact rational scalar in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub type RatMatrix = Matrix<Rational>;
pub type RatTensor = Tensor<Rational>;
pub type RatMultivector = Multivector<Rational>;
pub type RatGraded = GradedElement<Rational>;
pub type RatPolynomial = Polynomial<Rational>;
pub type RatForm = PolyForm<Rational>;

/// Floating-point instantiations, useful for quick numerical work. Equality
/// based laws only hold up to rounding here.
pub type F64Matrix = Matrix<f64>;
pub type F64Multivector = Multivector<f64>;
