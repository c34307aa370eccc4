//! Explicit modular representations of `SL₂(p)` over `GF(p)`: polynomial modules,
//! transvectants, certified tensor decompositions and a few structural tests.

pub mod decompose;
pub mod error;
pub mod feit;
pub mod field;
pub mod heart;
pub mod jordan;
pub mod matrix;
pub mod poly;
pub mod transvectant;

pub use decompose::{clebsch_gordan_decompose, lambda2_s2_decompose, Certificate, Decomposition, Summand, SymmetricSplit};
pub use error::{RepError, Result};
pub use feit::{feit_bound, feit_bound_check, FeitVerdict};
pub use heart::{permutation_module_heart, MatrixModule, PermutationHeart};
pub use jordan::{jordan_block_analysis, torus_fixed_points, JordanReport, TorusFixed};
pub use matrix::GFpMatrix;
pub use poly::{action_matrix, build_ve, Form, Mat2, PolyModule};
pub use transvectant::{nonzero_witness, theta_matrix, transvectant, NonZeroWitness};
