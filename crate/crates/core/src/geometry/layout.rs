//! Plane embeddings of diagrams and the standard motions between them.
//!
//! The train at level `t`, offset `k` sits at `(k + 1, t + 1/2)`. Merges and
//! splits carry no point.

use super::{coord, half, ConfigPath, Configuration, Coord, GeometryError, LabelledPoint, linearize};
use crate::colour::ColourWord;
use crate::diagrams::{DiagramError, DiagramWord, Generator};

/// Train positions of any level word; the train at level `t` gets id
/// `ids[t]`.
pub fn layout(word: &DiagramWord, ids: &[u32]) -> Configuration {
    let points = word
        .levels()
        .iter()
        .enumerate()
        .filter_map(|(t, level)| match &level.generator {
            Generator::Train(c) => Some(LabelledPoint::new(
                ids[t],
                coord(level.offset as i64 + 1),
                half(t as i64),
                c.clone(),
            )),
            _ => None,
        })
        .collect();
    Configuration::new(points).expect("trains of a level word occupy distinct positions")
}

fn level_ids(word: &DiagramWord) -> Vec<u32> {
    (0..word.len() as u32).collect()
}

/// The embedding of a canonical diagram; train ids are level indices.
pub fn embed(word: &DiagramWord) -> Result<Configuration, GeometryError> {
    if !word.is_canonical() {
        return Err(GeometryError::NotCanonical);
    }
    Ok(layout(word, &level_ids(word)))
}

/// The colour word and configuration of the canonical representative.
pub fn theta(word: &DiagramWord) -> (ColourWord, Configuration) {
    let canonical = word.canonicalize();
    let config = layout(&canonical, &level_ids(&canonical));
    (linearize(&config), config)
}

/// The motion realizing the interchange of levels `t` and `t + 1`.
pub fn interchange_path(word: &DiagramWord, t: usize) -> Result<ConfigPath, GeometryError> {
    let swapped = word.interchange(t)?;
    let before = level_ids(word);
    let mut after = before.clone();
    after.swap(t, t + 1);
    ConfigPath::new(vec![layout(word, &before), layout(&swapped, &after)])
}

/// The motion between two representatives of `base`'s interchange class,
/// given as node orders, through single interchange moves. Ids are the
/// node indices of `base`.
pub fn comparison_path(
    base: &DiagramWord,
    from: &[usize],
    to: &[usize],
) -> Result<ConfigPath, GeometryError> {
    let route = base.interchange_route(from, to)?;
    let keyframes = route
        .iter()
        .map(|order| {
            let word = base.reorder(order)?;
            let ids: Vec<u32> = order.iter().map(|&n| n as u32).collect();
            Ok(layout(&word, &ids))
        })
        .collect::<Result<Vec<_>, DiagramError>>()?;
    Ok(ConfigPath::new(keyframes)?.simplified())
}

/// Horizontal gap used when two blocks are placed side by side.
pub fn stacking_gap(lower: &DiagramWord, upper: &DiagramWord) -> i64 {
    1 + lower.max_width().max(upper.max_width()) as i64
}

/// The motion from the side-by-side placement of `lower` and `upper` to
/// the stacked placement of `lower ; upper`.
pub fn stacking_path(lower: &DiagramWord, upper: &DiagramWord) -> Result<ConfigPath, GeometryError> {
    stacking_path_with_gap(lower, upper, stacking_gap(lower, upper))
}

/// As [`stacking_path`], with the upper block starting `gap` units to the
/// right. The upper block is lifted clear of the lower one, carried left,
/// and lowered into place.
pub fn stacking_path_with_gap(
    lower: &DiagramWord,
    upper: &DiagramWord,
    gap: i64,
) -> Result<ConfigPath, GeometryError> {
    if lower.outputs() != upper.inputs() {
        return Err(DiagramError::BoundaryMismatch {
            left: lower.outputs(),
            right: upper.inputs(),
        }
        .into());
    }
    if gap < stacking_gap(lower, upper) {
        return Err(GeometryError::Discontinuous(format!(
            "gap {gap} is too small for the blocks"
        )));
    }
    let fixed = embed(lower)?;
    let moving = embed(upper)?.relabel(lower.len() as u32);
    let rise = coord(lower.len() as i64);
    let keyframes = [
        (coord(gap), coord(0)),
        (coord(gap), rise + 1),
        (coord(0), rise + 1),
        (coord(0), rise),
    ]
    .into_iter()
    .map(|(dx, dy)| fixed.union(&moving.translate(dx, dy)))
    .collect::<Result<Vec<_>, _>>()?;
    Ok(ConfigPath::new(keyframes)?.simplified())
}

/// Translates a canonical tensor product's right block from its embedded
/// position to a side-by-side position `gap` units right of the origin.
pub(crate) fn unstack_tensor_path(
    left: &DiagramWord,
    right: &DiagramWord,
    gap: i64,
) -> Result<ConfigPath, GeometryError> {
    let fixed = embed(left)?;
    let moving = embed(right)?.relabel(left.len() as u32);
    let shift = coord(left.outputs() as i64);
    let rise = coord(left.len() as i64);
    let keyframes = [
        (shift, rise),
        (coord(gap), rise),
        (coord(gap), coord(0)),
    ]
    .into_iter()
    .map(|(dx, dy): (Coord, Coord)| fixed.union(&moving.translate(dx, dy)))
    .collect::<Result<Vec<_>, _>>()?;
    Ok(ConfigPath::new(keyframes)?.simplified())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braids::{ColouredBraid, Sign};
    use crate::colour::Colour;
    use crate::geometry::braid_of_path;

    fn c(n: &str) -> Colour {
        Colour::new(n).unwrap()
    }
    fn tr(n: &str) -> Generator {
        Generator::train(n)
    }
    fn positions(config: &Configuration) -> Vec<(String, Coord, Coord)> {
        config
            .points()
            .iter()
            .map(|p| (p.colour.to_string(), p.x, p.y))
            .collect()
    }

    #[test]
    fn embed_examples() {
        let ab = DiagramWord::serial(&[c("a"), c("b")]);
        assert_eq!(
            positions(&embed(&ab).unwrap()),
            vec![("a".into(), coord(1), half(0)), ("b".into(), coord(1), half(1))]
        );
        let t = DiagramWord::train(c("a")).tensor(&DiagramWord::train(c("b")));
        assert_eq!(
            positions(&embed(&t).unwrap()),
            vec![("a".into(), coord(1), half(0)), ("b".into(), coord(2), half(1))]
        );
        let loop_ = DiagramWord::from_pairs(1, [(0, Generator::Beta), (1, tr("a")), (0, Generator::Alpha)])
            .unwrap();
        assert_eq!(
            positions(&embed(&loop_).unwrap()),
            vec![("a".into(), coord(2), half(1))]
        );
        let non_canonical = DiagramWord::from_pairs(2, [(1, tr("a")), (0, tr("b"))]).unwrap();
        assert_eq!(embed(&non_canonical), Err(GeometryError::NotCanonical));
    }

    #[test]
    fn linearize_examples() {
        let ab = DiagramWord::serial(&[c("a"), c("b")]);
        assert_eq!(linearize(&embed(&ab).unwrap()), ColourWord::from_names(&["a", "b"]));
        let t = DiagramWord::train(c("b")).tensor(&DiagramWord::train(c("a")));
        assert_eq!(linearize(&embed(&t).unwrap()), ColourWord::from_names(&["b", "a"]));
    }

    #[test]
    fn theta_examples() {
        let split_merge = DiagramWord::from_pairs(1, [(0, Generator::Beta), (0, Generator::Alpha)]).unwrap();
        let (word, config) = theta(&split_merge);
        assert!(word.is_empty() && config.is_empty());
        let (word, _) = theta(&DiagramWord::serial(&[c("a"), c("b")]));
        assert_eq!(word, ColourWord::from_names(&["a", "b"]));
    }

    #[test]
    fn interchange_of_parallel_trains_is_trivial() {
        let t = DiagramWord::from_pairs(2, [(0, tr("a")), (1, tr("b"))]).unwrap();
        let b = braid_of_path(&interchange_path(&t, 0).unwrap()).unwrap();
        assert!(b.word().is_empty());
    }

    #[test]
    fn interchange_past_a_merge_is_trivial() {
        // The train moves from x = 2 to x = 3 as it passes below the merge.
        let d = DiagramWord::from_pairs(3, [(0, Generator::Alpha), (1, tr("a"))]).unwrap();
        let path = interchange_path(&d, 0).unwrap();
        assert_eq!(path.start().points()[0].x, coord(2));
        assert_eq!(path.end().points()[0].x, coord(3));
        assert!(braid_of_path(&path).unwrap().word().is_empty());
    }

    #[test]
    fn interchange_on_one_strand_is_refused() {
        let serial = DiagramWord::serial(&[c("a"), c("b")]);
        assert!(matches!(
            interchange_path(&serial, 0),
            Err(GeometryError::Diagram(DiagramError::NotSwappable(0, 1)))
        ));
    }

    #[test]
    fn stacking_examples() {
        let fa = DiagramWord::train(c("a"));
        let fb = DiagramWord::train(c("b"));
        let b = braid_of_path(&stacking_path(&fa, &fb).unwrap()).unwrap();
        assert!(b.is_identity());
        assert_eq!(b.source(), &ColourWord::from_names(&["a", "b"]));

        let bare = DiagramWord::identity(1).unwrap();
        assert!(braid_of_path(&stacking_path(&fa, &bare).unwrap()).unwrap().word().is_empty());

        // c passes b but not a: keys end as (a, c, b).
        let ab = DiagramWord::train(c("a")).tensor(&DiagramWord::train(c("b")));
        let c_id = DiagramWord::train(c("c")).tensor(&DiagramWord::identity(1).unwrap());
        let path = stacking_path(&ab, &c_id).unwrap();
        let b = braid_of_path(&path).unwrap();
        assert_eq!(b.target(), ColourWord::from_names(&["a", "c", "b"]));
        assert_eq!(b.word().len(), 1);
        assert_eq!(b.exponent_sum(), -1);
        assert!(matches!(
            stacking_path(&fa, &ab),
            Err(GeometryError::Diagram(DiagramError::BoundaryMismatch { .. }))
        ));
    }

    #[test]
    fn stacking_over_a_block_is_a_block_braiding() {
        // Trains a, b on strands 2 and 3; c lands on strand 1 above them.
        let id = DiagramWord::identity(1).unwrap();
        let lower = id
            .tensor(&DiagramWord::train(c("a")))
            .tensor(&DiagramWord::train(c("b")));
        let upper = DiagramWord::train(c("c")).tensor(&DiagramWord::identity(2).unwrap());
        let b = braid_of_path(&stacking_path(&lower, &upper).unwrap()).unwrap();
        let block = ColouredBraid::block_braiding(
            &ColourWord::from_names(&["a", "b"]),
            &ColourWord::from_names(&["c"]),
            Sign::Negative,
        );
        assert!(b.equals(&block));
    }
}
