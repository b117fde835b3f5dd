//! Text and SVG pictures of diagrams, braids and cells, read bottom to top.

mod ascii;
mod svg;

pub use ascii::{braid_ascii, cell_ascii, diagram_ascii};
pub use svg::{braid_svg, cell_svg, diagram_svg};
