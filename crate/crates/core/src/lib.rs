//! Graded commutative algebra over prime fields and the rationals:
//! Gröbner bases, free resolutions, Betti tables and Hilbert series, with
//! tools for quadratic almost complete intersections and edge ideals.
//!
//! Everything is generic over [`Field`]. The aliases below fix the field to
//! `F_32003` or `Q`.
//!
//! ```
//! use kaci::{parse::parse_ideal_file, resolution::betti_numbers, F32003, MonomialOrder};
//!
//! let src = "ring Fp[x,y,z]; ideal (x*y, y*z);";
//! let ideal = parse_ideal_file::<F32003>(src, MonomialOrder::Grevlex).unwrap().ideal().unwrap();
//! assert_eq!(betti_numbers(&ideal).totals(), vec![1, 2, 1]);
//! ```

pub mod aci;
pub mod betti;
pub mod complex;
pub mod edge;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod monomial_ideal;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod tpoly;
pub mod verify;

pub use betti::BettiTable;
pub use error::{Error, Result};
pub use field::{Field, Fp, Rat, F32003};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use poly::Polynomial;
pub use ring::{Ideal, RingDescriptor};

pub type Poly = Polynomial<F32003>;
pub type PolyQ = Polynomial<Rat>;
pub type IdealFp = Ideal<F32003>;
pub type IdealQ = Ideal<Rat>;
pub type GroebnerBasisFp = groebner::GroebnerBasis<F32003>;
pub type ComplexFp = complex::GradedComplex<F32003>;
