//! Exact combinatorics of multisegments on a cuspidal line: derivatives and
//! integrals in the Langlands and Zelevinsky classifications, the
//! Mœglin–Waldspurger algorithm, exotic duality, highest derivatives, and a
//! bounded-enumeration law checker.
//!
//! ```
//! use multiseg::{lang, Multisegment, Segment};
//!
//! let m: Multisegment = "[0,5]+[0,4]+[1,2]+[2,6]+[2,3]".parse().unwrap();
//! let d = Segment::new(0, 2).unwrap();
//! let n = lang::st_derivative_lang(&m, d).finite().unwrap();
//! assert_eq!(n.to_string(), "[0,5]+[1,2]+[2,4]+[2,6]+[3]");
//! assert_eq!(lang::st_integral_lang(&n, d), m);
//! ```

pub mod calculus;
pub mod duality;
mod error;
pub mod highest;
pub mod lang;
mod multisegment;
#[doc(hidden)]
pub mod mutation;
pub mod mw;
pub mod oracle;
mod parse;
mod segment;
pub mod zel;

pub use calculus::{derivative, epsilon_r, eta_vector, integral, Classification, Side};
pub use error::{Error, Result};
pub use multisegment::{DerivOutcome, LineLabel, Multisegment};
pub use parse::{format_multisegment, parse_multisegment, parse_segment};
pub use segment::Segment;
