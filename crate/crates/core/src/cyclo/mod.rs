//! Exact arithmetic in cyclotomic fields Q(zeta_M) and exact bookkeeping of
//! roots of unity.
//!
//! Values are `CycNum`s: rational coordinate vectors with respect to the
//! power basis 1, zeta_M, ..., zeta_M^(phi(M)-1), reduced modulo the M-th
//! cyclotomic polynomial. Since Phi_M is irreducible over Q this is a field,
//! so exact division is total on nonzero elements.

mod config;
mod cycnum;
mod root;
mod tables;
mod zerosum;

pub use config::{conductor_cap, set_conductor_cap};
pub use cycnum::CycNum;
pub use root::{certify_order_form, RootOfUnity};
pub use tables::{cyclotomic_poly, divisors, euler_phi, factorize};
pub use zerosum::torsion_sum_is_zero;
