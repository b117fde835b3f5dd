//! The free semi-monoidal train track category.
//!
//! A morphism `I^p -> I^q` is represented by a levelled word: one generator
//! per level, each placed at an offset into the strands of the current
//! slice. Words are read bottom to top. Two words denote the same morphism
//! exactly when they are related by interchange moves, which is decided by
//! [`DiagramWord::canonicalize`].

mod canon;
pub mod fixtures;
mod graph;
mod json;

use std::fmt;

use thiserror::Error;

use crate::colour::{Colour, ColourError, ColourSet};

pub use canon::Representatives;
pub use graph::{
    CertificateStep, ContractionCertificate, EdgeId, Endpoint, NodeId, TrackGraph,
};
pub use json::{CertificateJson, DiagramJson, GeneratorJson};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("level {level}: generator needs {needed} strands at offset {offset}, but only {width} are present")]
    WidthViolation {
        level: usize,
        offset: usize,
        needed: usize,
        width: usize,
    },
    #[error("diagram has an empty boundary at slice {0}")]
    EmptyObject(usize),
    #[error(transparent)]
    UnknownColour(#[from] ColourError),
    #[error("boundary mismatch: {left} outputs against {right} inputs")]
    BoundaryMismatch { left: usize, right: usize },
    #[error("interchange class has more than {0} representatives")]
    CapExceeded(usize),
    #[error("levels {0} and {1} cannot be interchanged")]
    NotSwappable(usize, usize),
    #[error("node order is not a linear extension of the dependency order")]
    InvalidOrder,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("invalid certificate step {step}: {reason}")]
    InvalidCertificate { step: usize, reason: String },
}

/// One of the three generator shapes of a train track diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// The merge `II -> I`.
    Alpha,
    /// The split `I -> II`.
    Beta,
    /// A coloured train `I -> I`.
    Train(Colour),
}

impl Generator {
    pub fn arity_in(&self) -> usize {
        match self {
            Generator::Alpha => 2,
            Generator::Beta | Generator::Train(_) => 1,
        }
    }

    pub fn arity_out(&self) -> usize {
        match self {
            Generator::Beta => 2,
            Generator::Alpha | Generator::Train(_) => 1,
        }
    }

    pub fn colour(&self) -> Option<&Colour> {
        match self {
            Generator::Train(c) => Some(c),
            _ => None,
        }
    }

    pub fn train(name: &str) -> Generator {
        Generator::Train(Colour::new(name).expect("valid colour literal"))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Alpha => f.write_str("alpha"),
            Generator::Beta => f.write_str("beta"),
            Generator::Train(c) => write!(f, "{c}"),
        }
    }
}

/// A generator placed at `offset` strands from the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Level {
    pub offset: usize,
    pub generator: Generator,
}

impl Level {
    pub fn new(offset: usize, generator: Generator) -> Self {
        Level { offset, generator }
    }
}

/// A validated level word describing a morphism `I^p -> I^q`, `p, q >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagramWord {
    inputs: usize,
    levels: Vec<Level>,
    outputs: usize,
}

impl DiagramWord {
    /// Validates the width bookkeeping of a level word.
    pub fn new(inputs: usize, levels: Vec<Level>) -> Result<Self, DiagramError> {
        if inputs == 0 {
            return Err(DiagramError::EmptyObject(0));
        }
        let mut width = inputs;
        for (t, level) in levels.iter().enumerate() {
            let needed = level.generator.arity_in();
            if level.offset + needed > width {
                return Err(DiagramError::WidthViolation {
                    level: t,
                    offset: level.offset,
                    needed,
                    width,
                });
            }
            width = width - needed + level.generator.arity_out();
            if width == 0 {
                return Err(DiagramError::EmptyObject(t + 1));
            }
        }
        Ok(DiagramWord {
            inputs,
            levels,
            outputs: width,
        })
    }

    /// Like [`DiagramWord::new`], additionally checking every train colour
    /// against `colours`.
    pub fn build(
        colours: &ColourSet,
        inputs: usize,
        levels: Vec<Level>,
    ) -> Result<Self, DiagramError> {
        for level in &levels {
            if let Some(c) = level.generator.colour() {
                colours.check(c)?;
            }
        }
        DiagramWord::new(inputs, levels)
    }

    /// Shorthand for `(offset, generator)` pairs.
    pub fn from_pairs(
        inputs: usize,
        pairs: impl IntoIterator<Item = (usize, Generator)>,
    ) -> Result<Self, DiagramError> {
        DiagramWord::new(
            inputs,
            pairs.into_iter().map(|(k, g)| Level::new(k, g)).collect(),
        )
    }

    /// The identity on `I^n`: `n` bare strands.
    pub fn identity(n: usize) -> Result<Self, DiagramError> {
        DiagramWord::new(n, Vec::new())
    }

    pub fn alpha() -> Self {
        DiagramWord::from_pairs(2, [(0, Generator::Alpha)]).expect("alpha is valid")
    }

    pub fn beta() -> Self {
        DiagramWord::from_pairs(1, [(0, Generator::Beta)]).expect("beta is valid")
    }

    pub fn train(colour: Colour) -> Self {
        DiagramWord::from_pairs(1, [(0, Generator::Train(colour))]).expect("train is valid")
    }

    /// Trains composed in series on one strand, bottom first.
    pub fn serial(colours: &[Colour]) -> Self {
        DiagramWord::from_pairs(
            1,
            colours.iter().map(|c| (0, Generator::Train(c.clone()))),
        )
        .expect("serial trains are valid")
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Slice widths `w_0 = p, ..., w_L = q`.
    pub fn widths(&self) -> Vec<usize> {
        let mut widths = Vec::with_capacity(self.levels.len() + 1);
        let mut w = self.inputs;
        widths.push(w);
        for level in &self.levels {
            w = w - level.generator.arity_in() + level.generator.arity_out();
            widths.push(w);
        }
        widths
    }

    pub fn max_width(&self) -> usize {
        self.widths().into_iter().max().unwrap_or(self.inputs)
    }

    pub fn train_count(&self) -> usize {
        self.levels
            .iter()
            .filter(|l| matches!(l.generator, Generator::Train(_)))
            .count()
    }

    pub fn colours(&self) -> impl Iterator<Item = &Colour> {
        self.levels.iter().filter_map(|l| l.generator.colour())
    }

    /// Serial composition, `self` at the bottom.
    pub fn compose(&self, other: &DiagramWord) -> Result<DiagramWord, DiagramError> {
        if self.outputs != other.inputs {
            return Err(DiagramError::BoundaryMismatch {
                left: self.outputs,
                right: other.inputs,
            });
        }
        let mut levels = self.levels.clone();
        levels.extend(other.levels.iter().cloned());
        DiagramWord::new(self.inputs, levels)
    }

    /// Parallel composition: `self`'s levels first, then `other`'s levels
    /// shifted right past `self`'s outputs.
    pub fn tensor(&self, other: &DiagramWord) -> DiagramWord {
        let shift = self.outputs;
        let mut levels = self.levels.clone();
        levels.extend(
            other
                .levels
                .iter()
                .map(|l| Level::new(l.offset + shift, l.generator.clone())),
        );
        DiagramWord::new(self.inputs + other.inputs, levels)
            .expect("tensor of valid diagrams is valid")
    }

    /// Whether levels `t` and `t + 1` act on disjoint strand intervals.
    pub fn swappable(&self, t: usize) -> bool {
        if t + 1 >= self.levels.len() {
            return false;
        }
        let lower = &self.levels[t];
        let upper = &self.levels[t + 1];
        upper.offset + upper.generator.arity_in() <= lower.offset
            || upper.offset >= lower.offset + lower.generator.arity_out()
    }

    /// Performs the interchange move exchanging levels `t` and `t + 1`.
    pub fn interchange(&self, t: usize) -> Result<DiagramWord, DiagramError> {
        if !self.swappable(t) {
            return Err(DiagramError::NotSwappable(t, t + 1));
        }
        let lower = &self.levels[t];
        let upper = &self.levels[t + 1];
        let (new_lower, new_upper) = if upper.offset + upper.generator.arity_in() <= lower.offset {
            let shifted = lower.offset + upper.generator.arity_out() - upper.generator.arity_in();
            (upper.clone(), Level::new(shifted, lower.generator.clone()))
        } else {
            let shifted =
                upper.offset + lower.generator.arity_in() - lower.generator.arity_out();
            (Level::new(shifted, upper.generator.clone()), lower.clone())
        };
        let mut levels = self.levels.clone();
        levels[t] = new_lower;
        levels[t + 1] = new_upper;
        DiagramWord::new(self.inputs, levels)
    }

    /// Equality of isotopy classes.
    pub fn equals(&self, other: &DiagramWord) -> bool {
        self.inputs == other.inputs
            && self.outputs == other.outputs
            && self.levels.len() == other.levels.len()
            && self.canonicalize() == other.canonicalize()
    }
}

impl fmt::Display for DiagramWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::print(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Generator {
        Generator::train("a")
    }
    fn b() -> Generator {
        Generator::train("b")
    }

    #[test]
    fn build_examples() {
        let alpha = DiagramWord::from_pairs(2, [(0, Generator::Alpha)]).unwrap();
        assert_eq!((alpha.inputs(), alpha.outputs()), (2, 1));

        let split = DiagramWord::from_pairs(1, [(0, Generator::Beta), (1, a())]).unwrap();
        assert_eq!(split.widths(), vec![1, 2, 2]);

        assert!(matches!(
            DiagramWord::from_pairs(1, [(0, Generator::Alpha)]),
            Err(DiagramError::WidthViolation { level: 0, .. })
        ));
        assert_eq!(DiagramWord::identity(0), Err(DiagramError::EmptyObject(0)));
    }

    #[test]
    fn build_checks_colours() {
        let set = ColourSet::parse("a").unwrap();
        assert!(DiagramWord::build(&set, 1, vec![Level::new(0, a())]).is_ok());
        assert!(matches!(
            DiagramWord::build(&set, 1, vec![Level::new(0, b())]),
            Err(DiagramError::UnknownColour(_))
        ));
    }

    #[test]
    fn compose_examples() {
        let alpha = DiagramWord::alpha();
        let beta = DiagramWord::beta();
        assert_eq!(
            alpha.compose(&beta).unwrap(),
            DiagramWord::from_pairs(2, [(0, Generator::Alpha), (0, Generator::Beta)]).unwrap()
        );
        let fa = DiagramWord::from_pairs(1, [(0, a())]).unwrap();
        let fb = DiagramWord::from_pairs(1, [(0, b())]).unwrap();
        assert_eq!(
            fa.compose(&fb).unwrap(),
            DiagramWord::from_pairs(1, [(0, a()), (0, b())]).unwrap()
        );
        assert_eq!(
            beta.compose(&fa),
            Err(DiagramError::BoundaryMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn tensor_examples() {
        let fa = DiagramWord::from_pairs(1, [(0, a())]).unwrap();
        let fb = DiagramWord::from_pairs(1, [(0, b())]).unwrap();
        assert_eq!(
            fa.tensor(&fb),
            DiagramWord::from_pairs(2, [(0, a()), (1, b())]).unwrap()
        );
        let t = DiagramWord::beta().tensor(&DiagramWord::alpha());
        assert_eq!((t.inputs(), t.outputs()), (3, 3));
    }

    #[test]
    fn interchange_moves_offsets() {
        // alpha at offset 0 below a train on strand 2 (offset 1 after the merge).
        let d = DiagramWord::from_pairs(3, [(0, Generator::Alpha), (1, a())]).unwrap();
        let swapped = d.interchange(0).unwrap();
        assert_eq!(
            swapped,
            DiagramWord::from_pairs(3, [(2, a()), (0, Generator::Alpha)]).unwrap()
        );
        assert_eq!(swapped.interchange(0).unwrap(), d);

        let serial = DiagramWord::from_pairs(1, [(0, a()), (0, b())]).unwrap();
        assert_eq!(serial.interchange(0), Err(DiagramError::NotSwappable(0, 1)));
    }

    #[test]
    fn equality_of_classes() {
        let d1 = DiagramWord::from_pairs(2, [(0, a()), (1, b())]).unwrap();
        let d2 = DiagramWord::from_pairs(2, [(1, b()), (0, a())]).unwrap();
        assert!(d1.equals(&d2));
        assert!(d1.equals(&d1));
        let ab = DiagramWord::from_pairs(1, [(0, a()), (0, b())]).unwrap();
        let ba = DiagramWord::from_pairs(1, [(0, b()), (0, a())]).unwrap();
        assert!(!ab.equals(&ba));
    }
}
