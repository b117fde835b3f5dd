use std::fmt;
use std::str::FromStr;

use super::{hcompose, identity_cell, invert_cell, serial, vcompose, CellError, TrackedTwoCell};
use crate::colour::ColourWord;
use crate::diagrams::DiagramWord;
use crate::geometry::{embed, ConfigPath, Configuration, LabelledPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    /// `β#α ⇒ id_I`
    E,
    /// `(Iα)#α ⇒ (αI)#α`
    A,
    /// `β#(βI) ⇒ β#(Iβ)`
    B,
    /// `(If)#α ⇒ α#f`
    L,
    /// `(fI)#α ⇒ α#f`
    R,
    /// `β#(If) ⇒ f#β`
    Lbar,
    /// `β#(fI) ⇒ f#β`
    Rbar,
}

impl CellKind {
    pub const ALL: [CellKind; 7] = [
        CellKind::E,
        CellKind::A,
        CellKind::B,
        CellKind::L,
        CellKind::R,
        CellKind::Lbar,
        CellKind::Rbar,
    ];

    pub fn takes_colours(self) -> bool {
        !matches!(self, CellKind::E | CellKind::A | CellKind::B)
    }

    fn boundary(self, f: &DiagramWord) -> (DiagramWord, DiagramWord) {
        let id = DiagramWord::identity(1).expect("one strand");
        let (alpha, beta) = (DiagramWord::alpha(), DiagramWord::beta());
        let seq = |parts: &[&DiagramWord]| {
            parts[1..]
                .iter()
                .try_fold(parts[0].clone(), |acc, d| acc.compose(d))
                .expect("generator boundaries compose")
        };
        match self {
            CellKind::E => (seq(&[&beta, &alpha]), id),
            CellKind::A => (
                seq(&[&id.tensor(&alpha), &alpha]),
                seq(&[&alpha.tensor(&id), &alpha]),
            ),
            CellKind::B => (
                seq(&[&beta, &beta.tensor(&id)]),
                seq(&[&beta, &id.tensor(&beta)]),
            ),
            CellKind::L => (seq(&[&id.tensor(f), &alpha]), seq(&[&alpha, f])),
            CellKind::R => (seq(&[&f.tensor(&id), &alpha]), seq(&[&alpha, f])),
            CellKind::Lbar => (seq(&[&beta, &id.tensor(f)]), seq(&[f, &beta])),
            CellKind::Rbar => (seq(&[&beta, &f.tensor(&id)]), seq(&[f, &beta])),
        }
    }
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellKind::E => "E",
            CellKind::A => "A",
            CellKind::B => "B",
            CellKind::L => "L",
            CellKind::R => "R",
            CellKind::Lbar => "Lbar",
            CellKind::Rbar => "Rbar",
        })
    }
}

impl FromStr for CellKind {
    type Err = CellError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CellKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| CellError::UnknownCell(s.to_string()))
    }
}

/// Straight-line motion between two embeddings with the same train
/// sequence; the `i`-th train of one goes to the `i`-th train of the other.
fn interpolate(source: &DiagramWord, target: &DiagramWord) -> Result<ConfigPath, CellError> {
    let start = embed(source)?;
    let end = embed(target)?;
    let by_level = |c: &Configuration| {
        let mut points = c.points().to_vec();
        points.sort_by_key(|p| p.id);
        points
    };
    let (from, to) = (by_level(&start), by_level(&end));
    let moved = from
        .iter()
        .zip(&to)
        .map(|(p, q)| LabelledPoint::new(p.id, q.x, q.y, q.colour.clone()))
        .collect();
    Ok(ConfigPath::new(vec![start, Configuration::new(moved)?])?)
}

/// A generator cell; `f` is the colour word of `L`, `R`, `Lbar` and `Rbar`
/// and is ignored by the trainless cells.
pub fn generator_cell(kind: CellKind, f: &ColourWord, inverse: bool) -> Result<TrackedTwoCell, CellError> {
    let (source, target) = kind.boundary(&serial(f));
    let (source, target) = (source.canonicalize(), target.canonicalize());
    let cell = TrackedTwoCell::new(&source, &target, interpolate(&source, &target)?)?;
    Ok(if inverse { invert_cell(&cell) } else { cell })
}

/// The seven cells whose vertical composite is `T_{f,g}: f#g ⇒ g#f`.
pub fn braiding_steps(f: &ColourWord, g: &ColourWord) -> Result<Vec<TrackedTwoCell>, CellError> {
    let (df, dg) = (serial(f), serial(g));
    let id = DiagramWord::identity(1).expect("one strand");
    let (alpha, beta) = (DiagramWord::alpha(), DiagramWord::beta());
    let e = generator_cell(CellKind::E, f, false)?;
    let step1 = hcompose(
        &identity_cell(&df),
        &hcompose(&invert_cell(&e), &identity_cell(&dg))?,
    )?;
    let step2 = hcompose(
        &generator_cell(CellKind::Lbar, f, true)?,
        &identity_cell(&alpha.compose(&dg)?),
    )?;
    let step3 = hcompose(
        &identity_cell(&beta.compose(&id.tensor(&df))?),
        &generator_cell(CellKind::R, g, true)?,
    )?;
    let step4 = identity_cell(step3.target());
    let step5 = hcompose(
        &identity_cell(&beta.compose(&dg.tensor(&id))?),
        &generator_cell(CellKind::L, f, false)?,
    )?;
    let step6 = hcompose(
        &generator_cell(CellKind::Rbar, g, false)?,
        &identity_cell(&alpha.compose(&df)?),
    )?;
    let step7 = hcompose(&identity_cell(&dg), &hcompose(&e, &identity_cell(&df))?)?;
    Ok(vec![step1, step2, step3, step4, step5, step6, step7])
}

/// The braiding `T_{f,g}: f#g ⇒ g#f` on endomorphisms of the unit strand.
pub fn braiding_cell(f: &ColourWord, g: &ColourWord) -> Result<TrackedTwoCell, CellError> {
    let steps = braiding_steps(f, g)?;
    steps[1..].iter().try_fold(steps[0].clone(), |acc, s| vcompose(&acc, s))
}
