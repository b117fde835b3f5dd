//! Braid extraction by sweeping a piecewise-linear path.
//!
//! Points are kept in `(x, y)` order. Within one linear segment the order
//! can only change at instants where two points share an `x` coordinate;
//! those instants are exact rationals. Between such an instant and a
//! generic neighbouring time the orders differ by a permutation of points
//! that are vertically aligned at the instant. It is written as a bubble
//! sort of adjacent swaps, each signed by comparing heights at the instant:
//! the swap is positive when the point moving up the order is the higher
//! one. Because the signs come from a total height order, every reduced
//! decomposition gives the same braid, so simultaneous swaps need no
//! perturbation.

use std::cmp::Ordering;

use super::{ConfigPath, Configuration, Coord, GeometryError, linearize};
use crate::braids::{ColouredBraid, Letter, Sign};

struct Segment<'a> {
    from: &'a Configuration,
    to: &'a Configuration,
}

impl Segment<'_> {
    fn at(&self, i: usize, t: Coord) -> (Coord, Coord) {
        let (p, q) = (&self.from.points()[i], &self.to.points()[i]);
        (p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t)
    }

    fn order_at(&self, t: Coord) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.from.len()).collect();
        let keys: Vec<_> = order.iter().map(|&i| self.at(i, t)).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        order
    }

    /// Instants in `[0, 1]` where two points share an `x` coordinate
    /// without sharing it for the whole segment. Also detects collisions.
    fn events(&self) -> Result<Vec<Coord>, GeometryError> {
        let (zero, one) = (Coord::from_integer(0), Coord::from_integer(1));
        let n = self.from.len();
        let mut times = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (a0, a1) = (&self.from.points()[i], &self.to.points()[i]);
                let (b0, b1) = (&self.from.points()[j], &self.to.points()[j]);
                let dx0 = a0.x - b0.x;
                let dx_rate = (a1.x - a0.x) - (b1.x - b0.x);
                let dy0 = a0.y - b0.y;
                let dy_rate = (a1.y - a0.y) - (b1.y - b0.y);
                let collide = || GeometryError::DegeneratePath(a0.id, b0.id);
                if dx_rate == zero {
                    if dx0 == zero {
                        // Same vertical line throughout: heights must not meet.
                        let dy1 = dy0 + dy_rate;
                        if dy0 == zero || dy1 == zero || (dy0 > zero) != (dy1 > zero) {
                            return Err(collide());
                        }
                    }
                    continue;
                }
                let t = -dx0 / dx_rate;
                if t < zero || t > one {
                    continue;
                }
                if dy0 + dy_rate * t == zero {
                    return Err(collide());
                }
                times.push(t);
            }
        }
        times.sort();
        times.dedup();
        Ok(times)
    }
}

/// Appends adjacent swaps turning `before` into `after`, signed by the
/// heights at the instant `t`.
fn transition(
    segment: &Segment<'_>,
    t: Coord,
    before: &[usize],
    after: &[usize],
    word: &mut Vec<Letter>,
) {
    let mut rank = vec![0; before.len()];
    for (r, &i) in after.iter().enumerate() {
        rank[i] = r;
    }
    let mut current = before.to_vec();
    let heights: Vec<Coord> = (0..before.len()).map(|i| segment.at(i, t).1).collect();
    loop {
        let mut swapped = false;
        for k in 0..current.len().saturating_sub(1) {
            let (p, q) = (current[k], current[k + 1]);
            if rank[p] > rank[q] {
                debug_assert_eq!(segment.at(p, t).0, segment.at(q, t).0);
                let sign = match heights[p].cmp(&heights[q]) {
                    Ordering::Greater => Sign::Positive,
                    _ => Sign::Negative,
                };
                word.push(Letter::new(k + 1, sign));
                current.swap(k, k + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}

/// The coloured braid traced by a path, with source `linearize(start)`.
pub fn braid_of_path(path: &ConfigPath) -> Result<ColouredBraid, GeometryError> {
    let source = linearize(path.start());
    let mut word = Vec::new();
    let (zero, one) = (Coord::from_integer(0), Coord::from_integer(1));
    for pair in path.keyframes().windows(2) {
        let segment = Segment {
            from: &pair[0],
            to: &pair[1],
        };
        if pair[0] == pair[1] {
            continue;
        }
        let events = segment.events()?;
        // Anchor instants, with a generic time between each neighbouring pair.
        let mut anchors = vec![zero];
        anchors.extend(events.iter().copied().filter(|&t| t > zero && t < one));
        anchors.push(one);
        let mut times: Vec<(Coord, bool)> = Vec::new();
        for (k, &a) in anchors.iter().enumerate() {
            if k > 0 {
                times.push(((anchors[k - 1] + a) / Coord::from_integer(2), false));
            }
            times.push((a, true));
        }
        let orders: Vec<Vec<usize>> = times.iter().map(|&(t, _)| segment.order_at(t)).collect();
        for k in 1..times.len() {
            let instant = if times[k].1 { times[k].0 } else { times[k - 1].0 };
            if orders[k - 1] != orders[k] {
                transition(&segment, instant, &orders[k - 1], &orders[k], &mut word);
            }
        }
    }
    ColouredBraid::new(source, word).map_err(|_| GeometryError::MismatchedKeyframes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braids::Letter;
    use crate::colour::Colour;
    use crate::geometry::{coord, half, LabelledPoint};

    fn pt(id: u32, x: i64, y: Coord, c: &str) -> LabelledPoint {
        LabelledPoint::new(id, coord(x), y, Colour::new(c).unwrap())
    }

    fn path(frames: Vec<Vec<LabelledPoint>>) -> ConfigPath {
        ConfigPath::new(frames.into_iter().map(|f| Configuration::new(f).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn constant_path_is_identity() {
        let p = path(vec![vec![pt(0, 1, half(0), "a"), pt(1, 2, half(0), "b")]]);
        let b = braid_of_path(&p).unwrap();
        assert!(b.word().is_empty());
        assert_eq!(b.source(), &crate::colour::ColourWord::from_names(&["a", "b"]));
    }

    #[test]
    fn mover_below_gives_negative_crossing() {
        // a moves right, passing under b.
        let p = path(vec![
            vec![pt(0, 1, half(0), "a"), pt(1, 2, half(1), "b")],
            vec![pt(0, 3, half(0), "a"), pt(1, 2, half(1), "b")],
        ]);
        let b = braid_of_path(&p).unwrap();
        assert_eq!(b.word(), &[Letter::neg(1)]);
        assert_eq!(b.target(), crate::colour::ColourWord::from_names(&["b", "a"]));
    }

    #[test]
    fn rightward_below_then_leftward_above_is_not_identity() {
        let p = path(vec![
            vec![pt(0, 1, half(0), "a"), pt(1, 2, half(1), "a")],
            vec![pt(0, 3, half(0), "a"), pt(1, 2, half(1), "a")],
            vec![pt(0, 3, half(2), "a"), pt(1, 2, half(1), "a")],
            vec![pt(0, 1, half(2), "a"), pt(1, 2, half(1), "a")],
        ]);
        let b = braid_of_path(&p).unwrap();
        // a passes right below b (-1); then b is the point moving up the
        // order while a passes above it leftwards (-1).
        assert_eq!(b.word(), &[Letter::neg(1), Letter::neg(1)]);
        assert!(!b.is_identity());
    }

    #[test]
    fn collisions_are_reported() {
        let p = path(vec![
            vec![pt(0, 1, half(0), "a"), pt(1, 3, half(0), "b")],
            vec![pt(0, 3, half(0), "a"), pt(1, 1, half(0), "b")],
        ]);
        assert!(matches!(
            braid_of_path(&p),
            Err(GeometryError::DegeneratePath(0, 1))
        ));
    }

    #[test]
    fn simultaneous_swaps_are_resolved() {
        // A vertical pair passes a single point at the same instant.
        let p = path(vec![
            vec![pt(0, 1, half(0), "a"), pt(1, 3, half(1), "b"), pt(2, 3, half(2), "c")],
            vec![pt(0, 1, half(0), "a"), pt(1, -1, half(1), "b"), pt(2, -1, half(2), "c")],
        ]);
        let b = braid_of_path(&p).unwrap();
        assert_eq!(b.word(), &[Letter::neg(1), Letter::neg(2)]);
        assert_eq!(b.target(), crate::colour::ColourWord::from_names(&["b", "c", "a"]));
    }
}
