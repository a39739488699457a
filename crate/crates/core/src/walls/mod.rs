//! Young walls for `B_n^(1)`.

pub mod decompose;
pub mod layout;
pub mod pattern;
pub mod wall;

pub use decompose::{decompose, Cells, TrianglePieces, Trigger, WallDecomposition};
pub use layout::WallLayout;
pub use pattern::{BlockShape, Ground, GroundKind};
pub use wall::{e_saturate, vector_eps_phi, wall_component, WallColumn, WallCrystal, YoungWall};
