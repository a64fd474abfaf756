//! Ruled surfaces over an elliptic curve, double covers of their blow-ups,
//! and the families showing the genus bounds are sharp.

pub mod ampleness;
pub mod families;
pub mod lattice;

pub use ampleness::{claim_line_bundle, min_l_dot_d, AmplenessReport, SearchBox};
pub use families::{
    build_example, certificate, ex53_parameters, verify_sharpness, Check, ExampleData, Family, SharpnessReport,
};
pub use lattice::{
    adjunction_genus, branch_n, canonical, double_cover_invariants, fiber_genus_from_branch, halve_even_class,
    intersect, s2_of_smooth_branch, self_intersection, DivisorClass, SurfaceKind, SurfaceModel,
};
