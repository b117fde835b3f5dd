//! 2-cells between train track diagrams, carried as explicit motions of
//! the trains between canonical embeddings.
//!
//! A cell's braid is read off its path; vertical composition concatenates
//! paths, horizontal composition unstacks the blocks, runs the two cells
//! side by side and restacks them.

mod generators;
mod suite;

use thiserror::Error;

use crate::braids::ColouredBraid;
use crate::colour::ColourWord;
use crate::diagrams::{DiagramError, DiagramWord};
use crate::geometry::{
    braid_of_path, comparison_path, embed, stacking_gap, stacking_path_with_gap, ConfigPath,
    Configuration, GeometryError,
};

pub use generators::{braiding_cell, braiding_steps, generator_cell, CellKind};
pub use suite::{
    all_words, measure_handedness, oriented, random_cell, run_axiom_suite, Check, Failure, Report,
    SuiteConfig, CHECKS, GEOMETRIC_HANDEDNESS,
};

pub(crate) use crate::geometry::layout::unstack_tensor_path;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("cell boundaries do not meet: {left} against {right}")]
    BoundaryMismatch { left: String, right: String },
    #[error("unknown cell `{0}`")]
    UnknownCell(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// A 2-cell `source ⇒ target` between canonical diagrams, together with a
/// path from `embed(source)` to `embed(target)`. Train ids along the path
/// are arbitrary; the endpoints agree with the embeddings up to ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedTwoCell {
    source: DiagramWord,
    target: DiagramWord,
    path: ConfigPath,
}

impl TrackedTwoCell {
    pub fn new(source: &DiagramWord, target: &DiagramWord, path: ConfigPath) -> Result<Self, CellError> {
        let source = source.canonicalize();
        let target = target.canonicalize();
        if source.inputs() != target.inputs() || source.outputs() != target.outputs() {
            return Err(CellError::BoundaryMismatch {
                left: source.to_string(),
                right: target.to_string(),
            });
        }
        for (end, word) in [(path.start(), &source), (path.end(), &target)] {
            if !end.same_positions(&embed(word)?) {
                return Err(GeometryError::Discontinuous(format!(
                    "path does not end at the embedding of {word}"
                ))
                .into());
            }
        }
        Ok(TrackedTwoCell {
            source,
            target,
            path: path.simplified(),
        })
    }

    pub fn source(&self) -> &DiagramWord {
        &self.source
    }

    pub fn target(&self) -> &DiagramWord {
        &self.target
    }

    pub fn path(&self) -> &ConfigPath {
        &self.path
    }
}

pub fn identity_cell(d: &DiagramWord) -> TrackedTwoCell {
    let canonical = d.canonicalize();
    let path = ConfigPath::constant(embed(&canonical).expect("canonical"));
    TrackedTwoCell {
        source: canonical.clone(),
        target: canonical,
        path,
    }
}

pub fn invert_cell(u: &TrackedTwoCell) -> TrackedTwoCell {
    TrackedTwoCell {
        source: u.target.clone(),
        target: u.source.clone(),
        path: u.path.reverse(),
    }
}

pub fn vcompose(u: &TrackedTwoCell, v: &TrackedTwoCell) -> Result<TrackedTwoCell, CellError> {
    if u.target != v.source {
        return Err(CellError::BoundaryMismatch {
            left: u.target.to_string(),
            right: v.source.to_string(),
        });
    }
    Ok(TrackedTwoCell {
        source: u.source.clone(),
        target: v.target.clone(),
        path: u.path.then(&v.path)?.simplified(),
    })
}

pub fn extract_braid(cell: &TrackedTwoCell) -> Result<ColouredBraid, GeometryError> {
    braid_of_path(&cell.path)
}

fn identity_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// From the canonical embedding to the literal layout of `word`.
fn to_literal(word: &DiagramWord) -> Result<ConfigPath, GeometryError> {
    comparison_path(word, &word.canonical_order(), &identity_order(word.len()))
}

/// Horizontal room needed to run `u` with `v`'s block parked `gap` to the
/// right, and then `v` with `u`'s target parked.
fn clearance(u: &ConfigPath, v: &ConfigPath) -> i64 {
    match (u.x_range(), v.x_range()) {
        (Some((_, umax)), Some((vmin, _))) => (umax - vmin).floor().to_integer() + 1,
        _ => 0,
    }
}

/// Runs `left` with the configuration `parked` held fixed beside it, then
/// `right` translated by `gap`, keeping `left`'s end fixed.
fn side_by_side(left: &ConfigPath, right: &ConfigPath, gap: i64) -> Result<ConfigPath, GeometryError> {
    let dx = crate::geometry::coord(gap);
    let zero = crate::geometry::coord(0);
    let offset = left.start().max_id().map_or(0, |m| m + 1);
    let parked_right = right.start().translate(dx, zero).relabel(offset);
    let first = left
        .keyframes()
        .iter()
        .map(|k| k.union(&parked_right))
        .collect::<Result<Vec<_>, _>>()?;
    let parked_left = left.end();
    let second = right
        .keyframes()
        .iter()
        .map(|k| parked_left.union(&k.translate(dx, zero).relabel(offset)))
        .collect::<Result<Vec<Configuration>, _>>()?;
    let mut keyframes = first;
    keyframes.extend(second);
    Ok(ConfigPath::new(keyframes)?.simplified())
}

/// `u # v` for `u: D1 ⇒ D1'` and `v: D2 ⇒ D2'`, a cell `D1#D2 ⇒ D1'#D2'`.
pub fn hcompose(u: &TrackedTwoCell, v: &TrackedTwoCell) -> Result<TrackedTwoCell, CellError> {
    if u.source.outputs() != v.source.inputs() {
        return Err(CellError::BoundaryMismatch {
            left: u.source.to_string(),
            right: v.source.to_string(),
        });
    }
    let source = u.source.compose(&v.source)?;
    let target = u.target.compose(&v.target)?;
    let gap = stacking_gap(&u.source, &v.source)
        .max(stacking_gap(&u.target, &v.target))
        .max(clearance(&u.path, &v.path));
    let path = to_literal(&source)?
        .then(&stacking_path_with_gap(&u.source, &v.source, gap)?.reverse())?
        .then(&side_by_side(&u.path, &v.path, gap)?)?
        .then(&stacking_path_with_gap(&u.target, &v.target, gap)?)?
        .then(&to_literal(&target)?.reverse())?;
    TrackedTwoCell::new(&source, &target, path)
}

/// `u ⊗ v`, a cell `D1⊗D2 ⇒ D1'⊗D2'`.
pub fn tensor_cells(u: &TrackedTwoCell, v: &TrackedTwoCell) -> Result<TrackedTwoCell, CellError> {
    let source = u.source.tensor(&v.source);
    let target = u.target.tensor(&v.target);
    let gap = (1 + u.source.max_width().max(u.target.max_width()) as i64)
        .max(clearance(&u.path, &v.path));
    let path = to_literal(&source)?
        .then(&unstack_tensor_path(&u.source, &v.source, gap)?)?
        .then(&side_by_side(&u.path, &v.path, gap)?)?
        .then(&unstack_tensor_path(&u.target, &v.target, gap)?.reverse())?
        .then(&to_literal(&target)?.reverse())?;
    TrackedTwoCell::new(&source, &target, path)
}

/// Whiskers `cell` by identities: `left # cell # right`, where either side
/// may be absent.
pub fn whisker(
    left: Option<&DiagramWord>,
    cell: &TrackedTwoCell,
    right: Option<&DiagramWord>,
) -> Result<TrackedTwoCell, CellError> {
    let mut out = cell.clone();
    if let Some(r) = right {
        out = hcompose(&out, &identity_cell(r))?;
    }
    if let Some(l) = left {
        out = hcompose(&identity_cell(l), &out)?;
    }
    Ok(out)
}

/// Trains composed in series on one strand.
pub fn serial(word: &ColourWord) -> DiagramWord {
    DiagramWord::serial(word.letters())
}

#[cfg(test)]
mod tests;
