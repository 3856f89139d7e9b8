//! Finitely presented and finite groups: homomorphism enumeration,
//! conjugation orbits, abelianization, and the `χ(H\Hom(Γ,H))` dispatch.

mod finite;
mod homs;
mod isotropy;
mod presentation;
mod snf;

pub use finite::{FiniteGroup, VERIFY_ORDER_LIMIT};
pub(crate) use homs::check_budget;
pub use homs::{conjugation_orbit_count, enumerate_homs, HomTuple, DEFAULT_BUDGET};
pub use isotropy::{chi_orbit_hom, Context, IsotropyClass};
pub use presentation::{cyclically_reduce, GammaFamily, GammaGroup, Presentation, Word};
pub use snf::{abelianization, chi_hom_to_circle, count_homs_to_cyclic, invariant_factors, Abelianization};
