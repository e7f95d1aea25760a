//! Finitely generated abelian groups over exact integers.

mod group;
mod hom;
mod presentation;
mod snf;
mod subgroup;

pub use group::{FinAbGroup, GroupElement};
pub use hom::{cokernel, image_subgroup, GroupHom};
pub use presentation::{normalize_presentation, Normalized, PresentedGroup};
pub use snf::{integer_kernel, smith_normal_form, solve, SmithForm};
pub use subgroup::{intersect_subgroups, subgroup_contains, tor2, Subgroup};
