//! Quantum cohomology of Grassmannians, the SU(r) Verlinde algebra, and the
//! two routes to the strange-duality count M(r, k, g).
//!
//! ```
//! use verlinde_qh::{duality, Shape, QClass, quantum_product};
//!
//! let gr24 = Shape::from_rn(2, 4).unwrap();
//! let s1 = QClass::basis(gr24, [2, 4].into());
//! let s21 = QClass::basis(gr24, [1, 3].into());
//! let p = quantum_product(gr24, &s1, &s21).unwrap();
//! assert_eq!(p.len(), 2);
//!
//! assert_eq!(duality::m_via_gw(2, 2, 2).unwrap(), 10.into());
//! ```

pub mod cache;
pub mod duality;
pub mod error;
pub mod fusion;
pub mod json;
pub mod lr;
pub mod quantum;
pub mod schubert;
pub mod selftest;

pub use error::{Error, Result};
pub use fusion::{FusionElement, FusionRing, RTildeElement, RTildeTerm, SuRep};
pub use quantum::{gw_number, gw_twisted, quantum_product, shift, unshift, GwQuery, QClass};
pub use schubert::{CohClass, Partition, Shape, Subset};
