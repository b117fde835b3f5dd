//! Configurations of coloured train points in the plane, piecewise-linear
//! paths between them, and the extraction of braids from paths.
//!
//! Coordinates are exact rationals. The linear order of a configuration is
//! the lexicographic `(x, y)` order of its points.

pub(crate) mod layout;
mod sweep;

use std::collections::HashMap;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colour::{Colour, ColourWord};
use crate::diagrams::DiagramError;

pub use layout::{
    comparison_path, embed, interchange_path, layout, stacking_path, stacking_path_with_gap,
    stacking_gap, theta,
};
pub use sweep::braid_of_path;

pub type Coord = Rational64;

pub fn coord(n: i64) -> Coord {
    Coord::from_integer(n)
}

/// `n + 1/2`
pub fn half(n: i64) -> Coord {
    Coord::new(2 * n + 1, 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("diagram is not in canonical form")]
    NotCanonical,
    #[error("two points share the key ({x}, {y})")]
    KeyCollision { x: Coord, y: Coord },
    #[error("points {0} and {1} collide along the path")]
    DegeneratePath(u32, u32),
    #[error("keyframes disagree on their point sets")]
    MismatchedKeyframes,
    #[error("paths do not meet: {0}")]
    Discontinuous(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelledPoint {
    pub id: u32,
    pub x: Coord,
    pub y: Coord,
    pub colour: Colour,
}

impl LabelledPoint {
    pub fn new(id: u32, x: Coord, y: Coord, colour: Colour) -> Self {
        LabelledPoint { id, x, y, colour }
    }

    pub fn key(&self) -> (Coord, Coord) {
        (self.x, self.y)
    }
}

/// A finite set of labelled points, kept sorted by id.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Configuration {
    points: Vec<LabelledPoint>,
}

impl Configuration {
    pub fn new(mut points: Vec<LabelledPoint>) -> Result<Self, GeometryError> {
        points.sort_by_key(|p| p.id);
        let mut keys: Vec<_> = points.iter().map(LabelledPoint::key).collect();
        keys.sort();
        if let Some(w) = keys.windows(2).find(|w| w[0] == w[1]) {
            return Err(GeometryError::KeyCollision {
                x: w[0].0,
                y: w[0].1,
            });
        }
        if points.windows(2).any(|w| w[0].id == w[1].id) {
            return Err(GeometryError::MismatchedKeyframes);
        }
        Ok(Configuration { points })
    }

    pub fn empty() -> Self {
        Configuration { points: Vec::new() }
    }

    pub fn points(&self) -> &[LabelledPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn translate(&self, dx: Coord, dy: Coord) -> Configuration {
        Configuration {
            points: self
                .points
                .iter()
                .map(|p| LabelledPoint::new(p.id, p.x + dx, p.y + dy, p.colour.clone()))
                .collect(),
        }
    }

    /// Disjoint union; ids must not clash.
    pub fn union(&self, other: &Configuration) -> Result<Configuration, GeometryError> {
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        Configuration::new(points)
    }

    pub fn relabel(&self, offset: u32) -> Configuration {
        Configuration {
            points: self
                .points
                .iter()
                .map(|p| LabelledPoint::new(p.id + offset, p.x, p.y, p.colour.clone()))
                .collect(),
        }
    }

    pub fn max_id(&self) -> Option<u32> {
        self.points.last().map(|p| p.id)
    }

    /// Same coloured positions, ignoring ids.
    pub fn same_positions(&self, other: &Configuration) -> bool {
        let mut a: Vec<_> = self.points.iter().map(|p| (p.x, p.y, &p.colour)).collect();
        let mut b: Vec<_> = other.points.iter().map(|p| (p.x, p.y, &p.colour)).collect();
        a.sort();
        b.sort();
        a == b
    }

    pub fn x_range(&self) -> Option<(Coord, Coord)> {
        let min = self.points.iter().map(|p| p.x).min()?;
        let max = self.points.iter().map(|p| p.x).max()?;
        Some((min, max))
    }

    pub fn flip_y(&self) -> Configuration {
        Configuration {
            points: self
                .points
                .iter()
                .map(|p| LabelledPoint::new(p.id, p.x, -p.y, p.colour.clone()))
                .collect(),
        }
    }
}

/// Colours of the points in ascending `(x, y)` order.
pub fn linearize(config: &Configuration) -> ColourWord {
    let mut points: Vec<&LabelledPoint> = config.points.iter().collect();
    points.sort_by_key(|p| p.key());
    points.into_iter().map(|p| p.colour.clone()).collect()
}

/// Keyframes joined by coordinatewise linear motion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigPath {
    keyframes: Vec<Configuration>,
}

impl ConfigPath {
    pub fn new(keyframes: Vec<Configuration>) -> Result<Self, GeometryError> {
        let Some(first) = keyframes.first() else {
            return Err(GeometryError::MismatchedKeyframes);
        };
        let signature: Vec<(u32, &Colour)> =
            first.points.iter().map(|p| (p.id, &p.colour)).collect();
        for k in &keyframes[1..] {
            let sig: Vec<(u32, &Colour)> = k.points.iter().map(|p| (p.id, &p.colour)).collect();
            if sig != signature {
                return Err(GeometryError::MismatchedKeyframes);
            }
        }
        Ok(ConfigPath { keyframes })
    }

    pub fn constant(config: Configuration) -> Self {
        ConfigPath {
            keyframes: vec![config],
        }
    }

    pub fn keyframes(&self) -> &[Configuration] {
        &self.keyframes
    }

    pub fn start(&self) -> &Configuration {
        &self.keyframes[0]
    }

    pub fn end(&self) -> &Configuration {
        self.keyframes.last().expect("paths have a keyframe")
    }

    pub fn reverse(&self) -> ConfigPath {
        let mut keyframes = self.keyframes.clone();
        keyframes.reverse();
        ConfigPath { keyframes }
    }

    /// Follows `self` with `next`. The paths must meet: `next` starts where
    /// `self` ends, up to a renaming of ids, which is matched by position.
    pub fn then(&self, next: &ConfigPath) -> Result<ConfigPath, GeometryError> {
        let end = self.end();
        let by_position: HashMap<(Coord, Coord), &LabelledPoint> =
            end.points.iter().map(|p| (p.key(), p)).collect();
        if end.len() != next.start().len() {
            return Err(GeometryError::Discontinuous(format!(
                "{} points against {}",
                end.len(),
                next.start().len()
            )));
        }
        let mut rename = HashMap::new();
        for p in &next.start().points {
            match by_position.get(&p.key()) {
                Some(q) if q.colour == p.colour => {
                    rename.insert(p.id, q.id);
                }
                _ => {
                    return Err(GeometryError::Discontinuous(format!(
                        "no {} point at ({}, {})",
                        p.colour, p.x, p.y
                    )))
                }
            }
        }
        let mut keyframes = self.keyframes.clone();
        for k in &next.keyframes[1..] {
            let points = k
                .points
                .iter()
                .map(|p| LabelledPoint::new(rename[&p.id], p.x, p.y, p.colour.clone()))
                .collect();
            keyframes.push(Configuration::new(points).map_err(|_| GeometryError::MismatchedKeyframes)?);
        }
        Ok(ConfigPath { keyframes })
    }

    /// Keyframes with repeated neighbours removed.
    pub fn simplified(&self) -> ConfigPath {
        let mut keyframes: Vec<Configuration> = Vec::with_capacity(self.keyframes.len());
        for k in &self.keyframes {
            if keyframes.last() != Some(k) {
                keyframes.push(k.clone());
            }
        }
        ConfigPath { keyframes }
    }

    pub fn map(&self, f: impl Fn(&Configuration) -> Configuration) -> ConfigPath {
        ConfigPath {
            keyframes: self.keyframes.iter().map(f).collect(),
        }
    }

    pub fn x_range(&self) -> Option<(Coord, Coord)> {
        self.keyframes
            .iter()
            .filter_map(Configuration::x_range)
            .reduce(|(a, b), (c, d)| (a.min(c), b.max(d)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colour(n: &str) -> Colour {
        Colour::new(n).unwrap()
    }

    #[test]
    fn linearize_sorts_by_x_then_y() {
        let c = Configuration::new(vec![
            LabelledPoint::new(0, coord(2), half(0), colour("a")),
            LabelledPoint::new(1, coord(1), half(3), colour("b")),
            LabelledPoint::new(2, coord(1), half(1), colour("c")),
        ])
        .unwrap();
        assert_eq!(linearize(&c), ColourWord::from_names(&["c", "b", "a"]));
        assert_eq!(linearize(&Configuration::empty()), ColourWord::empty());
    }

    #[test]
    fn configurations_reject_coincident_points() {
        let err = Configuration::new(vec![
            LabelledPoint::new(0, coord(1), half(0), colour("a")),
            LabelledPoint::new(1, coord(1), half(0), colour("b")),
        ]);
        assert!(matches!(err, Err(GeometryError::KeyCollision { .. })));
    }

    #[test]
    fn then_matches_ids_by_position() {
        let p = ConfigPath::new(vec![
            Configuration::new(vec![LabelledPoint::new(0, coord(1), half(0), colour("a"))]).unwrap(),
            Configuration::new(vec![LabelledPoint::new(0, coord(2), half(0), colour("a"))]).unwrap(),
        ])
        .unwrap();
        let q = ConfigPath::new(vec![
            Configuration::new(vec![LabelledPoint::new(7, coord(2), half(0), colour("a"))]).unwrap(),
            Configuration::new(vec![LabelledPoint::new(7, coord(3), half(0), colour("a"))]).unwrap(),
        ])
        .unwrap();
        let pq = p.then(&q).unwrap();
        assert_eq!(pq.keyframes().len(), 3);
        assert_eq!(pq.end().points()[0].id, 0);
        assert!(q.then(&p).is_err());
    }
}
