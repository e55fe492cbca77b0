//! Exact rational polyhedral geometry: double description, placing
//! triangulations and Hilbert bases of pointed cones.
//!
//! Integer data is `i128` with checked arithmetic throughout.

mod cone;
pub(crate) mod dd;
pub(crate) mod lattice;
mod vrep;

pub use cone::PointedCone;
pub use lattice::IVec;
pub use vrep::{v_to_h, HRep, HalfSpace, VRep};
