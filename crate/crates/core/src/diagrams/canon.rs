//! Canonical forms under interchange, and the brute-force enumeration of an
//! interchange class used as an oracle.

use super::{DiagramError, DiagramWord, EdgeId, Level};

/// Strand genealogy of a level word: which edges each node consumes and
/// produces. Edges are indexed densely; `ids` maps them to their
/// `(slice, strand)` identity.
#[derive(Debug, Clone)]
pub(crate) struct Wiring {
    pub ids: Vec<EdgeId>,
    pub inputs: Vec<usize>,
    pub node_ins: Vec<Vec<usize>>,
    pub node_outs: Vec<Vec<usize>>,
    /// Edge consumed by node `t`, or `None` for output edges.
    pub consumer: Vec<Option<usize>>,
    /// Node producing the edge, or `None` for input edges.
    pub producer: Vec<Option<usize>>,
    pub slices: Vec<Vec<usize>>,
}

impl Wiring {
    pub fn of(word: &DiagramWord) -> Wiring {
        let mut ids = Vec::new();
        let mut producer = Vec::new();
        for j in 0..word.inputs() {
            ids.push(EdgeId::new(0, j));
            producer.push(None);
        }
        let mut slice: Vec<usize> = (0..word.inputs()).collect();
        let inputs = slice.clone();
        let mut slices = vec![slice.clone()];
        let mut node_ins = Vec::with_capacity(word.len());
        let mut node_outs = Vec::with_capacity(word.len());
        for (t, level) in word.levels().iter().enumerate() {
            let k = level.offset;
            let ins: Vec<usize> = slice[k..k + level.generator.arity_in()].to_vec();
            let outs: Vec<usize> = (0..level.generator.arity_out())
                .map(|i| {
                    ids.push(EdgeId::new(t + 1, k + i));
                    producer.push(Some(t));
                    ids.len() - 1
                })
                .collect();
            slice.splice(k..k + ins.len(), outs.iter().copied());
            slices.push(slice.clone());
            node_ins.push(ins);
            node_outs.push(outs);
        }
        let mut consumer = vec![None; ids.len()];
        for (t, ins) in node_ins.iter().enumerate() {
            for &e in ins {
                consumer[e] = Some(t);
            }
        }
        Wiring {
            ids,
            inputs,
            node_ins,
            node_outs,
            consumer,
            producer,
            slices,
        }
    }

    /// Offset of node `t` in `slice` if all its inputs are present.
    fn available_at(&self, slice: &[usize], t: usize) -> Option<usize> {
        let ins = &self.node_ins[t];
        let pos = slice.iter().position(|&e| e == ins[0])?;
        (slice.len() >= pos + ins.len() && slice[pos..pos + ins.len()] == ins[..]).then_some(pos)
    }

    fn apply(&self, slice: &mut Vec<usize>, t: usize, pos: usize) {
        slice.splice(
            pos..pos + self.node_ins[t].len(),
            self.node_outs[t].iter().copied(),
        );
    }
}

impl DiagramWord {
    /// The greedy leftmost-available linear extension of the node
    /// dependency order, as a list of the original level indices.
    pub fn canonical_order(&self) -> Vec<usize> {
        let wiring = Wiring::of(self);
        let mut slice = wiring.inputs.clone();
        let mut done = vec![false; self.len()];
        let mut order = Vec::with_capacity(self.len());
        for _ in 0..self.len() {
            let (t, pos) = (0..self.len())
                .filter(|&t| !done[t])
                .filter_map(|t| wiring.available_at(&slice, t).map(|pos| (t, pos)))
                .min_by_key(|&(_, pos)| pos)
                .expect("a level word always has an available node");
            wiring.apply(&mut slice, t, pos);
            done[t] = true;
            order.push(t);
        }
        order
    }

    /// Re-encodes the nodes of `self` in the given order. Fails unless the
    /// order is a linear extension of the dependency order.
    pub fn reorder(&self, order: &[usize]) -> Result<DiagramWord, DiagramError> {
        if order.len() != self.len() {
            return Err(DiagramError::InvalidOrder);
        }
        let wiring = Wiring::of(self);
        let mut slice = wiring.inputs.clone();
        let mut seen = vec![false; self.len()];
        let mut levels = Vec::with_capacity(self.len());
        for &t in order {
            if t >= self.len() || seen[t] {
                return Err(DiagramError::InvalidOrder);
            }
            let pos = wiring
                .available_at(&slice, t)
                .ok_or(DiagramError::InvalidOrder)?;
            wiring.apply(&mut slice, t, pos);
            seen[t] = true;
            levels.push(Level::new(pos, self.levels()[t].generator.clone()));
        }
        DiagramWord::new(self.inputs(), levels)
    }

    /// The normal form of the interchange class.
    pub fn canonicalize(&self) -> DiagramWord {
        self.reorder(&self.canonical_order())
            .expect("canonical order is a linear extension")
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical_order().iter().enumerate().all(|(i, &t)| i == t)
    }

    /// Every level word interchange-equivalent to `self`, i.e. one word per
    /// linear extension of the dependency order.
    pub fn enumerate_representatives(&self, cap: usize) -> Result<Vec<DiagramWord>, DiagramError> {
        Ok(self
            .linear_extensions(cap)?
            .orders
            .iter()
            .map(|o| self.reorder(o).expect("enumerated order is valid"))
            .collect())
    }

    /// All linear extensions of the dependency order, as node orders.
    pub fn linear_extensions(&self, cap: usize) -> Result<Representatives, DiagramError> {
        let wiring = Wiring::of(self);
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.len());
        let mut done = vec![false; self.len()];
        let slice = wiring.inputs.clone();
        extend(&wiring, slice, &mut done, &mut prefix, &mut out, cap)?;
        Ok(Representatives { orders: out })
    }

    /// A sequence of node orders from `from` to `to`, each differing from
    /// the previous one by a single interchange of adjacent levels. Both
    /// must be linear extensions of `self`'s dependency order.
    pub fn interchange_route(
        &self,
        from: &[usize],
        to: &[usize],
    ) -> Result<Vec<Vec<usize>>, DiagramError> {
        self.reorder(from)?;
        self.reorder(to)?;
        let mut current = from.to_vec();
        let mut route = vec![current.clone()];
        for (i, &node) in to.iter().enumerate() {
            let j = current
                .iter()
                .position(|&n| n == node)
                .ok_or(DiagramError::InvalidOrder)?;
            for k in (i..j).rev() {
                current.swap(k, k + 1);
                route.push(current.clone());
            }
        }
        Ok(route)
    }
}

/// The node orders of an interchange class.
#[derive(Debug, Clone)]
pub struct Representatives {
    pub orders: Vec<Vec<usize>>,
}

fn extend(
    wiring: &Wiring,
    slice: Vec<usize>,
    done: &mut [bool],
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<(), DiagramError> {
    if prefix.len() == done.len() {
        if out.len() == cap {
            return Err(DiagramError::CapExceeded(cap));
        }
        out.push(prefix.clone());
        return Ok(());
    }
    for t in 0..done.len() {
        if done[t] {
            continue;
        }
        if let Some(pos) = wiring.available_at(&slice, t) {
            let mut next = slice.clone();
            wiring.apply(&mut next, t, pos);
            done[t] = true;
            prefix.push(t);
            let result = extend(wiring, next, done, prefix, out, cap);
            prefix.pop();
            done[t] = false;
            result?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Generator;

    fn a() -> Generator {
        Generator::train("a")
    }
    fn b() -> Generator {
        Generator::train("b")
    }

    #[test]
    fn canonical_picks_leftmost_available() {
        let d = DiagramWord::from_pairs(2, [(1, a()), (0, b())]).unwrap();
        assert_eq!(
            d.canonicalize(),
            DiagramWord::from_pairs(2, [(0, b()), (1, a())]).unwrap()
        );
        let forced = DiagramWord::from_pairs(1, [(0, Generator::Beta), (0, Generator::Alpha)]).unwrap();
        assert_eq!(forced.canonicalize(), forced);
    }

    #[test]
    fn tensor_order_oracle() {
        // Both level orders of f_b (x) f_a; the canonicalizer picks the left one first.
        let fb = DiagramWord::from_pairs(1, [(0, b())]).unwrap();
        let fa = DiagramWord::from_pairs(1, [(0, a())]).unwrap();
        let t = fb.tensor(&fa);
        let reps = t.enumerate_representatives(10).unwrap();
        assert_eq!(reps.len(), 2);
        let expected = DiagramWord::from_pairs(2, [(0, b()), (1, a())]).unwrap();
        assert!(reps.contains(&expected));
        for r in &reps {
            assert_eq!(r.canonicalize(), expected);
        }
    }

    #[test]
    fn enumeration_counts() {
        let serial = DiagramWord::from_pairs(1, [(0, a()), (0, b())]).unwrap();
        assert_eq!(serial.enumerate_representatives(10).unwrap().len(), 1);
        let three = DiagramWord::from_pairs(3, [(0, a()), (1, a()), (2, a())]).unwrap();
        assert_eq!(three.enumerate_representatives(10).unwrap().len(), 6);
        assert_eq!(
            three.enumerate_representatives(5),
            Err(DiagramError::CapExceeded(5))
        );
    }

    #[test]
    fn route_connects_orders() {
        let three = DiagramWord::from_pairs(3, [(0, a()), (1, a()), (2, b())]).unwrap();
        let route = three.interchange_route(&[0, 1, 2], &[2, 1, 0]).unwrap();
        assert_eq!(route.first().unwrap(), &vec![0, 1, 2]);
        assert_eq!(route.last().unwrap(), &vec![2, 1, 0]);
        assert_eq!(route.len(), 4);
        for step in &route {
            three.reorder(step).unwrap();
        }
    }

    #[test]
    fn reorder_rejects_non_extensions() {
        let serial = DiagramWord::from_pairs(1, [(0, a()), (0, b())]).unwrap();
        assert_eq!(serial.reorder(&[1, 0]), Err(DiagramError::InvalidOrder));
        assert_eq!(serial.reorder(&[0, 0]), Err(DiagramError::InvalidOrder));
    }
}
