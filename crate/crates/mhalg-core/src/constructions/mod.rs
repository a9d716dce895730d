//! Builders for concrete multiplier Hopf algebroids.

mod algebroids;
mod crossed;
mod fin_hopf;
mod groupoid;

pub use algebroids::{
    convolution_algebroid, convolution_star, function_algebroid, function_algebroid_of_category, function_star,
    inversion_matrix,
};
pub use crossed::{check_action, crossed_product_algebroid, tensor_algebroid, ActionData};
pub use fin_hopf::{cyclic_group_algebra, make_fin_hopf, FinHopf};
pub use groupoid::{Arrow, FiniteCategory, FiniteGroupoid};
