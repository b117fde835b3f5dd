//! The free braided monoidal category on a colour set: coloured Artin braid
//! words, with equality decided exactly through the faithful action of the
//! braid group on the free group.
//!
//! Words are kept as built; only equality is semantic.

mod free_group;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colour::{Colour, ColourWord};

pub use free_group::FreeGroupWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("generator index {index} is out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("boundary mismatch: target {left} against source {right}")]
    BoundaryMismatch { left: ColourWord, right: ColourWord },
    #[error("sign must be 1 or -1, got {0}")]
    BadSign(i64),
}

/// Crossing sign, also used as the global handedness of block braidings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Sign, BraidError> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(BraidError::BadSign(other)),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+1",
            Sign::Negative => "-1",
        })
    }
}

pub type Handedness = Sign;

/// `sigma_index^sign`, with `index` 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub fn pos(index: usize) -> Self {
        Letter::new(index, Sign::Positive)
    }

    pub fn neg(index: usize) -> Self {
        Letter::new(index, Sign::Negative)
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.index, self.sign.flip())
    }
}

/// A morphism of the free braided monoidal category: a source colour word
/// and a signed Artin word on that many strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColouredBraid {
    source: ColourWord,
    word: Vec<Letter>,
}

impl ColouredBraid {
    pub fn new(source: ColourWord, word: Vec<Letter>) -> Result<Self, BraidError> {
        let strands = source.len();
        if let Some(l) = word.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(BraidError::IndexOutOfRange {
                index: l.index,
                strands,
            });
        }
        Ok(ColouredBraid { source, word })
    }

    pub fn identity(source: ColourWord) -> Self {
        ColouredBraid {
            source,
            word: Vec::new(),
        }
    }

    pub fn source(&self) -> &ColourWord {
        &self.source
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn strands(&self) -> usize {
        self.source.len()
    }

    /// The underlying permutation as a map from final position to the
    /// source position of the strand that ends there.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands()).collect();
        for l in &self.word {
            perm.swap(l.index - 1, l.index);
        }
        perm
    }

    pub fn target(&self) -> ColourWord {
        self.permutation()
            .into_iter()
            .map(|i| self.source.letters()[i].clone())
            .collect()
    }

    /// Diagrammatic composite: `self` first, then `other`.
    pub fn compose(&self, other: &ColouredBraid) -> Result<ColouredBraid, BraidError> {
        let target = self.target();
        if &target != other.source() {
            return Err(BraidError::BoundaryMismatch {
                left: target,
                right: other.source.clone(),
            });
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(ColouredBraid {
            source: self.source.clone(),
            word,
        })
    }

    pub fn tensor(&self, other: &ColouredBraid) -> ColouredBraid {
        let shift = self.strands();
        let mut word = self.word.clone();
        word.extend(
            other
                .word
                .iter()
                .map(|l| Letter::new(l.index + shift, l.sign)),
        );
        ColouredBraid {
            source: self.source.concat(&other.source),
            word,
        }
    }

    pub fn invert(&self) -> ColouredBraid {
        ColouredBraid {
            source: self.target(),
            word: self.word.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The word with adjacent inverse pairs cancelled.
    pub fn freely_reduced(&self) -> ColouredBraid {
        let mut word: Vec<Letter> = Vec::with_capacity(self.word.len());
        for &l in &self.word {
            if word.last() == Some(&l.inverse()) {
                word.pop();
            } else {
                word.push(l);
            }
        }
        ColouredBraid {
            source: self.source.clone(),
            word,
        }
    }

    /// All crossings flipped.
    pub fn mirror(&self) -> ColouredBraid {
        ColouredBraid {
            source: self.source.clone(),
            word: self.word.iter().map(|l| l.inverse()).collect(),
        }
    }

    /// Sum of the crossing signs; a homomorphism to the integers.
    pub fn exponent_sum(&self) -> i64 {
        self.word.iter().map(|l| i64::from(l.sign.as_i8())).sum()
    }

    /// Images of the free generators under the braid's automorphism.
    pub fn action(&self) -> Vec<FreeGroupWord> {
        let n = self.strands();
        let mut images: Vec<FreeGroupWord> =
            (1..=n as i32).map(FreeGroupWord::generator).collect();
        for l in &self.word {
            let letter = free_group::letter_images(n, l.index, l.sign == Sign::Positive);
            for img in images.iter_mut() {
                *img = img.substitute(&letter);
            }
        }
        images
    }

    pub fn is_identity(&self) -> bool {
        self.action()
            .iter()
            .enumerate()
            .all(|(k, img)| img.letters() == [k as i32 + 1])
    }

    /// Semantic equality: same boundary colour words and the same action on
    /// the free group.
    pub fn equals(&self, other: &ColouredBraid) -> bool {
        self.source == other.source
            && self.target() == other.target()
            && self.action() == other.action()
    }

    /// Moves the `w` block left past the `v` block; every crossing has sign
    /// `handedness`. Each letter of `w`, leftmost first, is carried across
    /// `v` by a descending run of generators.
    pub fn block_braiding(v: &ColourWord, w: &ColourWord, handedness: Handedness) -> ColouredBraid {
        let (m, n) = (v.len(), w.len());
        let mut word = Vec::with_capacity(m * n);
        for j in 1..=n {
            for i in (j..m + j).rev() {
                word.push(Letter::new(i, handedness));
            }
        }
        ColouredBraid {
            source: v.concat(w),
            word,
        }
    }
}

pub fn braids_equal(b1: &ColouredBraid, b2: &ColouredBraid) -> bool {
    b1.equals(b2)
}

impl fmt::Display for ColouredBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ", self.source)?;
        if self.word.is_empty() {
            return f.write_str("id");
        }
        for (i, l) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match l.sign {
                Sign::Positive => write!(f, "s{}", l.index)?,
                Sign::Negative => write!(f, "s{}^-1", l.index)?,
            }
        }
        Ok(())
    }
}

/// `{"source": ["a","b"], "word": [[1,1],[1,-1]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidJson {
    pub source: Vec<Colour>,
    pub word: Vec<(usize, i64)>,
}

impl From<&ColouredBraid> for BraidJson {
    fn from(b: &ColouredBraid) -> Self {
        BraidJson {
            source: b.source.letters().to_vec(),
            word: b
                .word
                .iter()
                .map(|l| (l.index, i64::from(l.sign.as_i8())))
                .collect(),
        }
    }
}

impl TryFrom<BraidJson> for ColouredBraid {
    type Error = BraidError;

    fn try_from(json: BraidJson) -> Result<Self, BraidError> {
        let word = json
            .word
            .into_iter()
            .map(|(i, s)| Ok(Letter::new(i, Sign::from_i64(s)?)))
            .collect::<Result<Vec<_>, BraidError>>()?;
        ColouredBraid::new(ColourWord(json.source), word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(names: &[&str]) -> ColourWord {
        ColourWord::from_names(names)
    }

    fn braid(names: &[&str], letters: &[(usize, i8)]) -> ColouredBraid {
        ColouredBraid::new(
            w(names),
            letters
                .iter()
                .map(|&(i, s)| Letter::new(i, if s > 0 { Sign::Positive } else { Sign::Negative }))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn free_reduction() {
        let b = braid(&["a", "b", "c"], &[(1, 1), (2, 1), (2, -1), (1, -1), (1, 1), (2, 1)]);
        let r = b.freely_reduced();
        assert_eq!(r.word(), &[Letter::pos(1), Letter::pos(2)]);
        assert!(r.equals(&b));
    }

    #[test]
    fn compose_examples() {
        let s = braid(&["a", "b"], &[(1, 1)]);
        let s_inv = braid(&["b", "a"], &[(1, -1)]);
        assert!(s.compose(&s_inv).unwrap().is_identity());

        let id = ColouredBraid::identity(w(&["a", "b"]));
        assert!(id.compose(&s).unwrap().equals(&s));

        let s_again = braid(&["b", "a"], &[(1, 1)]);
        let full = s.compose(&s_again).unwrap();
        assert_eq!(full.target(), w(&["a", "b"]));
        assert!(!full.is_identity());

        assert!(matches!(
            s.compose(&s),
            Err(BraidError::BoundaryMismatch { .. })
        ));
    }

    #[test]
    fn tensor_examples() {
        let ia = ColouredBraid::identity(w(&["a"]));
        let ib = ColouredBraid::identity(w(&["b"]));
        assert_eq!(ia.tensor(&ib), ColouredBraid::identity(w(&["a", "b"])));

        let s = braid(&["a", "b"], &[(1, 1)]);
        let ic = ColouredBraid::identity(w(&["c"]));
        assert_eq!(s.tensor(&ic).word(), &[Letter::pos(1)]);
        assert_eq!(ic.tensor(&s).word(), &[Letter::pos(2)]);
        assert_eq!(ic.tensor(&s).source(), &w(&["c", "a", "b"]));
    }

    #[test]
    fn invert_examples() {
        let id = ColouredBraid::identity(w(&["a", "b"]));
        assert_eq!(id.invert(), id);
        let b = braid(&["a", "b", "c"], &[(1, 1), (2, -1), (1, 1)]);
        assert_eq!(b.invert().invert(), b);
        assert!(b.compose(&b.invert()).unwrap().is_identity());
    }

    #[test]
    fn equality_examples() {
        let lhs = braid(&["a", "a", "a"], &[(1, 1), (2, 1), (1, 1)]);
        let rhs = braid(&["a", "a", "a"], &[(2, 1), (1, 1), (2, 1)]);
        assert!(braids_equal(&lhs, &rhs));

        let far1 = braid(&["a", "a", "a", "a"], &[(1, 1), (3, 1)]);
        let far2 = braid(&["a", "a", "a", "a"], &[(3, 1), (1, 1)]);
        assert!(braids_equal(&far1, &far2));

        let pos = braid(&["a", "a"], &[(1, 1)]);
        let neg = braid(&["a", "a"], &[(1, -1)]);
        assert!(!braids_equal(&pos, &neg));
        // Image of x_1 differs: x1 x2 x1^-1 against x2.
        assert_eq!(pos.action()[0].letters(), &[1, 2, -1]);
        assert_eq!(neg.action()[0].letters(), &[2]);
    }

    #[test]
    fn colours_matter_for_equality() {
        let ab = ColouredBraid::identity(w(&["a", "b"]));
        let ba = ColouredBraid::identity(w(&["b", "a"]));
        assert!(!braids_equal(&ab, &ba));
    }

    #[test]
    fn permutation_examples() {
        let id = ColouredBraid::identity(w(&["a", "b", "c"]));
        assert_eq!(id.permutation(), vec![0, 1, 2]);
        let s = braid(&["a", "b"], &[(1, 1)]);
        assert_eq!(s.permutation(), vec![1, 0]);
        // Block rotation by |w|: v = (a, b), w = (c, d, e).
        let block = ColouredBraid::block_braiding(&w(&["a", "b"]), &w(&["c", "d", "e"]), Sign::Positive);
        assert_eq!(block.permutation(), vec![2, 3, 4, 0, 1]);
        assert_eq!(block.target(), w(&["c", "d", "e", "a", "b"]));
    }

    #[test]
    fn block_braiding_examples() {
        let single = ColouredBraid::block_braiding(&w(&["a"]), &w(&["b"]), Sign::Positive);
        assert_eq!(single, braid(&["a", "b"], &[(1, 1)]));
        let empty = ColouredBraid::block_braiding(&w(&[]), &w(&["a", "b"]), Sign::Negative);
        assert_eq!(empty, ColouredBraid::identity(w(&["a", "b"])));
        let two_one = ColouredBraid::block_braiding(&w(&["a", "b"]), &w(&["c"]), Sign::Positive);
        assert_eq!(two_one.word(), &[Letter::pos(2), Letter::pos(1)]);
    }

    #[test]
    fn json_format() {
        let b = braid(&["a", "b"], &[(1, 1), (1, -1)]);
        let json = serde_json::to_string(&BraidJson::from(&b)).unwrap();
        assert_eq!(json, r#"{"source":["a","b"],"word":[[1,1],[1,-1]]}"#);
        let back: BraidJson = serde_json::from_str(&json).unwrap();
        assert_eq!(ColouredBraid::try_from(back).unwrap(), b);
        let bad: BraidJson = serde_json::from_str(r#"{"source":["a"],"word":[[1,1]]}"#).unwrap();
        assert!(ColouredBraid::try_from(bad).is_err());
    }
}
