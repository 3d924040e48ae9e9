//! Special functions needed by the expansions: Bessel and Airy zeros,
//! `J_nu(x)`, `Ai'` at the Airy zeros, log-gamma and a gamma ratio.

mod airy;
mod bessel;
mod gamma;
mod tables;

pub use airy::{airy_prime_at_zero, airy_zero};
pub use bessel::{besselj, besselj_zero};
pub use gamma::{gamma_ratio_half, ln_gamma};
