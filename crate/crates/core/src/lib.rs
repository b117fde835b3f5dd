//! Train track diagrams, coloured braids, and the braiding on the
//! endomorphisms of a weak unit.
//!
//! * [`diagrams`]: the free train track category, canonical forms under
//!   interchange, and contraction certificates.
//! * [`braids`]: coloured Artin braids with exact equality.
//! * [`geometry`]: train configurations, paths, and braid extraction.
//! * [`twocells`]: tracked 2-cells, the generator cells, the braiding
//!   `T_{f,g}` and the axiom suites.
//! * [`dsl`] and [`render`]: the text front end.

pub mod braids;
pub mod colour;
pub mod diagrams;
pub mod dsl;
pub mod geometry;
pub mod random;
pub mod render;
pub mod twocells;

pub use braids::{braids_equal, ColouredBraid, Handedness, Letter, Sign};
pub use colour::{Colour, ColourSet, ColourWord};
pub use diagrams::{DiagramWord, Generator, Level};
pub use geometry::{braid_of_path, ConfigPath, Configuration};
pub use twocells::TrackedTwoCell;
