//! Γ-Euler characteristics of translation groupoids `G ⋉ X` for circle and
//! O(2) representations, their spheres, balls and symplectic quotients.
//!
//! Values are exact integers ([`EulerValue`]). Each quantity is available both
//! from a closed form ([`formulas`]) and as a sum over an orbit-type
//! stratification ([`strata`]); [`oracle`] holds brute-force censuses that
//! check the group-theoretic inputs.
//!
//! ```
//! use gamma_euler::{chi_gamma_s1_rep, parse_gamma, Context, WeightVector};
//!
//! let v = WeightVector::new(vec![2, 3]);
//! let gamma = parse_gamma("Z^2").unwrap();
//! let chi = chi_gamma_s1_rep(&v, &gamma, &Context::default()).unwrap();
//! assert_eq!(chi.to_string(), "-13");
//! ```

pub mod error;
pub mod euler;
pub mod formulas;
pub mod groups;
pub mod oracle;
pub mod strata;
pub mod syntax;
pub mod verify;

pub use error::{Error, Result};
pub use euler::EulerValue;
pub use formulas::{
    chi_gamma_o2, chi_gamma_o2_real_rep, chi_gamma_o2_rep, chi_gamma_s1_ball, chi_gamma_s1_rep, chi_gamma_s1_rep_real,
    chi_gamma_s1_sphere, chi_gamma_symplectic_quotient, chi_gamma_z2_quotient, chi_orbit_hom_dihedral_closed,
    chi_orbit_hom_o2_closed, chi_zl_fl_o2_real_rep, chi_zl_fl_o2_rep, chi_zl_fl_s1, O2Representation, WeightVector,
};
pub use groups::{chi_orbit_hom, Context, FiniteGroup, GammaFamily, GammaGroup, IsotropyClass};
pub use strata::{evaluate_gamma_euler, Stratification, Stratum, StratumLabel};
pub use syntax::{format_gamma, parse_gamma};
