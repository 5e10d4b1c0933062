//! Deciding free metabelian groups from finite presentations, and comparing
//! groups through their finite quotients.

pub mod fingerprint;
pub mod fitting;
pub mod grobner;
pub mod laurent;
pub mod magnus;
pub mod presentations;

pub use laurent::{ExpVec, LaurentError, LaurentPoly};
pub use presentations::{GroupPresentation, PresMatrix, Word};
