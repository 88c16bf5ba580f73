pub mod algebra;
pub mod construction;
pub mod error;
pub mod geometry;
pub mod io_render;
pub mod numeric;
pub mod symmetry;

pub use error::{Error, Result};
pub use numeric::{Angle, Point, Tolerance};
