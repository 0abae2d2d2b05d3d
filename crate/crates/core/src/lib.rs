pub mod braids;
pub mod check;
pub mod error;
pub mod expr;
pub mod groups;
pub mod iterants;
pub mod physics;
pub mod sample;
pub mod scalar;
pub mod scalars;
pub mod su3;
pub mod suites;

pub use error::{AlgebraError, Result};
pub use groups::{builtin_group, Elem, Group, Perm};
pub use iterants::{perm_matrix, Iterant, Matrix};
pub use scalar::{Conj, Field, Scalar};
pub use scalars::{Cyclotomic, CyclotomicField, LaurentPoly};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

/// Iterants with exact cyclotomic coefficients.
pub type CycIterant = Iterant<Cyclotomic>;
/// Iterants whose coefficients still carry the framing variable `t`.
pub type LaurentIterant = Iterant<LaurentPoly>;
pub type RatIterant = Iterant<Rational>;
pub type F64Iterant = Iterant<f64>;
pub type CycMatrix = Matrix<Cyclotomic>;
pub type RatMatrix = Matrix<Rational>;
pub type F64Matrix = Matrix<f64>;
