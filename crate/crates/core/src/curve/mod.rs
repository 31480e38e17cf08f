//! Plane curves over finite fields: the scatter curve of an instance, its
//! points, local structure at a point, and resultants.

pub mod bivar;
pub mod local;
pub mod points;
pub mod resultant;
pub mod scatter;
pub mod univar;

pub use bivar::BivarPoly;
pub use local::{branch_series, geometric_transform, is_ordinary, multiplicity};
pub use points::{count_affine, hasse_weil_gap, points_at_infinity, AffineCount, HasseWeil, PointFilter};
pub use resultant::resultant_in_y;
pub use scatter::{build_scatter_curve, cyclotomic_product, f_of_x_ux_expand, scatter_numerator};
pub use univar::Poly1;
