//! Diagrams reproduced from pictures, used as regression fixtures.

use super::{DiagramWord, Generator};

/// The graph pictured with the definition of a removable right edge.
///
/// Three inputs. Reading bottom to top: trains `n1` (on strand 0) and `f`
/// (strand 2), splits `B`, `A`, `g0`, `D`, merge `C`, train `m`, merge `H`,
/// train `F`, merges `E` and `g1`. Trains `n1`, `m`, `F` have colour `x`.
/// Once `f` is erased, the only removable right edge runs from `g0`
/// (level 4) to `g1` (level 11).
pub fn removable_edge_figure() -> DiagramWord {
    let x = || Generator::train("x");
    DiagramWord::from_pairs(
        3,
        [
            (0, x()),
            (2, Generator::train("f")),
            (1, Generator::Beta),
            (0, Generator::Beta),
            (4, Generator::Beta),
            (3, Generator::Beta),
            (1, Generator::Alpha),
            (2, x()),
            (3, Generator::Alpha),
            (0, x()),
            (1, Generator::Alpha),
            (2, Generator::Alpha),
        ],
    )
    .expect("figure levels are well formed")
}

/// Levels of the named nodes `g0` and `g1` in [`removable_edge_figure`].
pub const FIGURE_G0: usize = 4;
pub const FIGURE_G1: usize = 11;
/// Level of the train `f` on the rightmost track.
pub const FIGURE_F: usize = 1;
