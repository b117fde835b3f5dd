//! Colours label the (1,1) train generators and the strands of coloured braids.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Names that the diagram language reserves for its own atoms.
pub const RESERVED: [&str; 3] = ["alpha", "beta", "id"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColourError {
    #[error("`{0}` is not a valid colour identifier")]
    InvalidIdentifier(String),
    #[error("`{0}` is reserved and cannot be used as a colour")]
    Reserved(String),
    #[error("colour `{0}` is declared twice")]
    Duplicate(String),
    #[error("a colour set must contain at least one colour")]
    Empty,
    #[error("unknown colour `{0}`")]
    Unknown(String),
}

/// A single colour identifier.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Colour(String);

impl Colour {
    pub fn new(name: impl Into<String>) -> Result<Self, ColourError> {
        let name = name.into();
        let mut chars = name.chars();
        let valid = match chars.next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            }
            _ => false,
        };
        if !valid {
            return Err(ColourError::InvalidIdentifier(name));
        }
        if RESERVED.contains(&name.as_str()) {
            return Err(ColourError::Reserved(name));
        }
        Ok(Colour(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for Colour {
    type Error = ColourError;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        Colour::new(value)
    }
}

impl From<Colour> for String {
    fn from(c: Colour) -> String {
        c.0
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The finite, ordered set of colours a diagram or braid may use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Colour>", into = "Vec<Colour>")]
pub struct ColourSet {
    colours: Vec<Colour>,
}

impl ColourSet {
    pub fn new(colours: Vec<Colour>) -> Result<Self, ColourError> {
        if colours.is_empty() {
            return Err(ColourError::Empty);
        }
        for (i, c) in colours.iter().enumerate() {
            if colours[..i].contains(c) {
                return Err(ColourError::Duplicate(c.to_string()));
            }
        }
        Ok(ColourSet { colours })
    }

    /// Parses a comma separated list such as `a,b,c`.
    pub fn parse(list: &str) -> Result<Self, ColourError> {
        let colours = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(Colour::new)
            .collect::<Result<Vec<_>, _>>()?;
        ColourSet::new(colours)
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn contains(&self, c: &Colour) -> bool {
        self.colours.contains(c)
    }

    pub fn get(&self, name: &str) -> Result<&Colour, ColourError> {
        self.colours
            .iter()
            .find(|c| c.as_str() == name)
            .ok_or_else(|| ColourError::Unknown(name.to_string()))
    }

    pub fn check(&self, c: &Colour) -> Result<(), ColourError> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(ColourError::Unknown(c.to_string()))
        }
    }
}

impl TryFrom<Vec<Colour>> for ColourSet {
    type Error = ColourError;

    fn try_from(value: Vec<Colour>) -> Result<Self, Self::Error> {
        ColourSet::new(value)
    }
}

impl From<ColourSet> for Vec<Colour> {
    fn from(set: ColourSet) -> Vec<Colour> {
        set.colours
    }
}

/// A word of colours: an object of the free braided monoidal category.
/// The empty word is the unit object.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColourWord(pub Vec<Colour>);

impl ColourWord {
    pub fn empty() -> Self {
        ColourWord(Vec::new())
    }

    /// Builds a word from identifiers, panicking on invalid names. Intended
    /// for literals in tests and fixtures.
    pub fn from_names(names: &[&str]) -> Self {
        ColourWord(
            names
                .iter()
                .map(|n| Colour::new(*n).expect("valid colour literal"))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Colour] {
        &self.0
    }

    pub fn concat(&self, other: &ColourWord) -> ColourWord {
        let mut letters = self.0.clone();
        letters.extend(other.0.iter().cloned());
        ColourWord(letters)
    }
}

impl fmt::Display for ColourWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromIterator<Colour> for ColourWord {
    fn from_iter<T: IntoIterator<Item = Colour>>(iter: T) -> Self {
        ColourWord(iter.into_iter().collect())
    }
}
