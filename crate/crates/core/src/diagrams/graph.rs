//! Plane graphs of train track diagrams and the contraction to the empty
//! graph.
//!
//! The contraction loop erases the (1,1)-valent nodes on the rightmost
//! complete track, then deletes a removable right edge, until nothing is
//! left. Every intermediate graph stays effective; the sequence of moves is
//! recorded as a [`ContractionCertificate`] that can be replayed.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::canon::Wiring;
use super::{DiagramError, DiagramWord, Generator};

/// An edge is named by the slice just above its lower endpoint and its
/// strand position in that slice. Slice 0 holds the input edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId {
    pub level: usize,
    pub strand: usize,
}

impl EdgeId {
    pub fn new(level: usize, strand: usize) -> Self {
        EdgeId { level, strand }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}.{}", self.level, self.strand)
    }
}

/// A node is named by the level it occupies in the original word.
pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Input,
    Output,
    Node(NodeId),
}

#[derive(Debug, Clone)]
struct Node {
    generator: Generator,
    ins: Vec<usize>,
    outs: Vec<usize>,
}

#[derive(Debug, Clone)]
struct Edge {
    id: EdgeId,
    lower: Endpoint,
    upper: Endpoint,
}

/// A progressive plane graph with the level structure of the word it came
/// from. Slice `s` lists, left to right, the edges crossing the horizontal
/// line between level `s - 1` and level `s`.
#[derive(Debug, Clone)]
pub struct TrackGraph {
    nodes: Vec<Option<Node>>,
    edges: Vec<Option<Edge>>,
    slices: Vec<Vec<usize>>,
}

impl TrackGraph {
    pub fn from_word(word: &DiagramWord) -> TrackGraph {
        let wiring = Wiring::of(word);
        let edges = (0..wiring.ids.len())
            .map(|e| {
                Some(Edge {
                    id: wiring.ids[e],
                    lower: wiring.producer[e].map_or(Endpoint::Input, Endpoint::Node),
                    upper: wiring.consumer[e].map_or(Endpoint::Output, Endpoint::Node),
                })
            })
            .collect();
        let nodes = word
            .levels()
            .iter()
            .enumerate()
            .map(|(t, level)| {
                Some(Node {
                    generator: level.generator.clone(),
                    ins: wiring.node_ins[t].clone(),
                    outs: wiring.node_outs[t].clone(),
                })
            })
            .collect();
        TrackGraph {
            nodes,
            edges,
            slices: wiring.slices,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.iter().all(Option::is_none) && self.edges.iter().all(Option::is_none)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.iter().flatten().count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().flatten().count()
    }

    /// `(inputs, outputs)` of a live node.
    pub fn valence(&self, node: NodeId) -> Option<(usize, usize)> {
        self.node(node).map(|n| (n.ins.len(), n.outs.len()))
    }

    pub fn generator(&self, node: NodeId) -> Option<&Generator> {
        self.node(node).map(|n| &n.generator)
    }

    pub fn endpoints(&self, edge: EdgeId) -> Option<(Endpoint, Endpoint)> {
        self.edge_index(edge).map(|e| {
            let edge = self.edges[e].as_ref().expect("live edge");
            (edge.lower, edge.upper)
        })
    }

    fn node(&self, node: NodeId) -> Option<&Node> {
        self.nodes.get(node).and_then(Option::as_ref)
    }

    fn edge(&self, e: usize) -> &Edge {
        self.edges[e].as_ref().expect("live edge")
    }

    fn edge_index(&self, id: EdgeId) -> Option<usize> {
        self.edges
            .iter()
            .position(|e| e.as_ref().is_some_and(|e| e.id == id))
    }

    /// Every node has an input and an output edge, and the incidence data
    /// is consistent. An empty graph counts as effective.
    pub fn check_effective(&self) -> Result<(), String> {
        for (t, node) in self.nodes.iter().enumerate() {
            let Some(node) = node else { continue };
            if node.ins.is_empty() || node.outs.is_empty() {
                return Err(format!(
                    "node {t} has valence ({}, {})",
                    node.ins.len(),
                    node.outs.len()
                ));
            }
            for &e in &node.ins {
                if self.edges[e].as_ref().map(|e| e.upper) != Some(Endpoint::Node(t)) {
                    return Err(format!("node {t} lists an input edge it does not end"));
                }
            }
            for &e in &node.outs {
                if self.edges[e].as_ref().map(|e| e.lower) != Some(Endpoint::Node(t)) {
                    return Err(format!("node {t} lists an output edge it does not start"));
                }
            }
        }
        if self.slices[0].is_empty() && !self.is_empty() {
            return Err("non-empty graph without inputs".into());
        }
        Ok(())
    }

    /// The track that starts at the rightmost input and always leaves a
    /// node by its rightmost output edge. Empty for the empty graph.
    pub fn rightmost_complete_track(&self) -> Vec<EdgeId> {
        self.track_indices()
            .into_iter()
            .map(|e| self.edge(e).id)
            .collect()
    }

    fn track_indices(&self) -> Vec<usize> {
        let mut track = Vec::new();
        let Some(&start) = self.slices[0].last() else {
            return track;
        };
        let mut e = start;
        loop {
            track.push(e);
            match self.edge(e).upper {
                Endpoint::Node(t) => {
                    e = *self
                        .node(t)
                        .expect("live node")
                        .outs
                        .last()
                        .expect("effective node has an output");
                }
                _ => break,
            }
        }
        track
    }

    /// Checks that no edge or node lies strictly to the right of `track`:
    /// at every slice the track's edge is the last one, and every node off
    /// the track sits left of the track edge crossing its level.
    pub fn check_nothing_right_of(&self, track: &[EdgeId]) -> Result<(), String> {
        let indices: Vec<usize> = track
            .iter()
            .map(|&id| self.edge_index(id).ok_or_else(|| format!("{id} is not live")))
            .collect::<Result<_, _>>()?;
        for (s, slice) in self.slices.iter().enumerate() {
            let Some(&last) = slice.last() else {
                if indices.is_empty() {
                    continue;
                }
                return Err(format!("slice {s} is empty but the track is not"));
            };
            if !indices.contains(&last) {
                return Err(format!("slice {s} has material right of the track"));
            }
        }
        for (t, node) in self.nodes.iter().enumerate() {
            let Some(node) = node else { continue };
            let on_track = node.ins.iter().any(|e| indices.contains(e))
                && node.outs.iter().any(|e| indices.contains(e));
            if on_track {
                // A node on the track must be left by its rightmost output.
                let out = *node.outs.last().expect("effective");
                if !indices.contains(&out) {
                    return Err(format!("track leaves node {t} by a non-rightmost edge"));
                }
                continue;
            }
            // Slice t holds the node's inputs; the track edge crossing it
            // must lie further right.
            let slice = &self.slices[t];
            let node_pos = slice.iter().position(|e| node.ins.contains(e));
            let track_pos = slice.iter().position(|e| indices.contains(e));
            match (node_pos, track_pos) {
                (Some(n), Some(k)) if n < k => {}
                _ => return Err(format!("node {t} is not left of the track")),
            }
        }
        Ok(())
    }

    /// Erases a (1,1)-valent node, joining its two edges into one. The
    /// joined edge keeps the identity of the lower edge.
    pub fn erase_unary(&mut self, node: NodeId) -> Result<(), String> {
        let n = self.node(node).ok_or_else(|| format!("node {node} is not live"))?;
        if n.ins.len() != 1 || n.outs.len() != 1 {
            return Err(format!(
                "node {node} has valence ({}, {})",
                n.ins.len(),
                n.outs.len()
            ));
        }
        let (lower, upper) = (n.ins[0], n.outs[0]);
        let top = self.edge(upper).upper;
        self.edges[lower].as_mut().expect("live").upper = top;
        for slice in &mut self.slices {
            for e in slice.iter_mut() {
                if *e == upper {
                    *e = lower;
                }
            }
        }
        if let Endpoint::Node(t) = top {
            let above = self.nodes[t].as_mut().expect("live");
            for e in above.ins.iter_mut() {
                if *e == upper {
                    *e = lower;
                }
            }
        }
        self.edges[upper] = None;
        self.nodes[node] = None;
        Ok(())
    }

    pub fn delete_edge(&mut self, edge: EdgeId) -> Result<(), String> {
        let e = self
            .edge_index(edge)
            .ok_or_else(|| format!("{edge} is not live"))?;
        let Edge { lower, upper, .. } = self.edge(e).clone();
        if let Endpoint::Node(t) = lower {
            self.nodes[t].as_mut().expect("live").outs.retain(|&x| x != e);
        }
        if let Endpoint::Node(t) = upper {
            self.nodes[t].as_mut().expect("live").ins.retain(|&x| x != e);
        }
        for slice in &mut self.slices {
            slice.retain(|&x| x != e);
        }
        self.edges[e] = None;
        Ok(())
    }

    /// The lowest edge of the rightmost track that neither starts in a node
    /// with a single output nor ends in a node with a single input.
    pub fn find_removable_right_edge(&self) -> Result<Option<EdgeId>, DiagramError> {
        let track = self.track_indices();
        for &e in &track {
            if let Endpoint::Node(t) = self.edge(e).upper {
                if self.valence(t) == Some((1, 1)) {
                    return Err(DiagramError::Precondition(format!(
                        "(1,1)-node {t} on the rightmost track"
                    )));
                }
            }
        }
        Ok(self.removable_right_edges().into_iter().next())
    }

    /// All removable edges of the rightmost track, bottom to top.
    pub fn removable_right_edges(&self) -> Vec<EdgeId> {
        self.track_indices()
            .into_iter()
            .filter(|&e| {
                let edge = self.edge(e);
                let starts_ok = match edge.lower {
                    Endpoint::Node(t) => self.node(t).expect("live").outs.len() > 1,
                    _ => true,
                };
                let ends_ok = match edge.upper {
                    Endpoint::Node(t) => self.node(t).expect("live").ins.len() > 1,
                    _ => true,
                };
                starts_ok && ends_ok
            })
            .map(|e| self.edge(e).id)
            .collect()
    }

    /// The lowest (1,1)-valent node on the rightmost track, if any.
    fn unary_on_track(&self) -> Option<NodeId> {
        self.track_indices().into_iter().find_map(|e| match self.edge(e).upper {
            Endpoint::Node(t) if self.valence(t) == Some((1, 1)) => Some(t),
            _ => None,
        })
    }

    fn apply(&mut self, step: &CertificateStep) -> Result<(), String> {
        match step {
            CertificateStep::EraseUnaryNode { node, .. } => self.erase_unary(*node),
            CertificateStep::DeleteEdge { edge, .. } => self.delete_edge(*edge),
        }
    }
}

/// One move of the contraction. Each move records the rightmost complete
/// track of the graph it was applied to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateStep {
    EraseUnaryNode { node: NodeId, track: Vec<EdgeId> },
    DeleteEdge { edge: EdgeId, track: Vec<EdgeId> },
}

impl CertificateStep {
    pub fn track(&self) -> &[EdgeId] {
        match self {
            CertificateStep::EraseUnaryNode { track, .. }
            | CertificateStep::DeleteEdge { track, .. } => track,
        }
    }
}

impl fmt::Display for CertificateStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateStep::EraseUnaryNode { node, .. } => write!(f, "erase node {node}")?,
            CertificateStep::DeleteEdge { edge, .. } => write!(f, "delete edge {edge}")?,
        }
        f.write_str(" on track")?;
        for e in self.track() {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

/// The erase/delete sequence witnessing contraction to the empty graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionCertificate {
    pub steps: Vec<CertificateStep>,
}

impl ContractionCertificate {
    /// Replays the certificate on `word`, checking that every intermediate
    /// graph is effective with nothing right of its rightmost track, that
    /// every recorded track is the actual rightmost track, and that the
    /// final graph is empty.
    pub fn replay(&self, word: &DiagramWord) -> Result<(), DiagramError> {
        let mut graph = TrackGraph::from_word(word);
        let invalid = |step: usize, reason: String| DiagramError::InvalidCertificate { step, reason };
        for (i, step) in self.steps.iter().enumerate() {
            let track = graph.rightmost_complete_track();
            if track != step.track() {
                return Err(invalid(i, "recorded track is not the rightmost track".into()));
            }
            if let CertificateStep::DeleteEdge { edge, .. } = step {
                if !graph.removable_right_edges().contains(edge) {
                    return Err(invalid(i, format!("{edge} is not a removable right edge")));
                }
            }
            graph.apply(step).map_err(|r| invalid(i, r))?;
            graph.check_effective().map_err(|r| invalid(i, r))?;
            let track = graph.rightmost_complete_track();
            graph
                .check_nothing_right_of(&track)
                .map_err(|r| invalid(i, r))?;
        }
        if !graph.is_empty() {
            return Err(invalid(self.steps.len(), "graph is not empty at the end".into()));
        }
        Ok(())
    }

    pub fn erasures(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, CertificateStep::EraseUnaryNode { .. }))
            .count()
    }

    pub fn deletions(&self) -> usize {
        self.steps.len() - self.erasures()
    }
}

impl DiagramWord {
    pub fn rightmost_complete_track(&self) -> Vec<EdgeId> {
        TrackGraph::from_word(self).rightmost_complete_track()
    }

    /// Removable right edge of the word's graph. Trains on the rightmost
    /// track violate the precondition and must be erased first.
    pub fn find_removable_right_edge(&self) -> Result<Option<EdgeId>, DiagramError> {
        TrackGraph::from_word(self).find_removable_right_edge()
    }

    /// Contracts the diagram to the empty graph.
    pub fn contract(&self) -> Result<ContractionCertificate, DiagramError> {
        let mut graph = TrackGraph::from_word(self);
        let budget = graph.node_count() + graph.edge_count();
        let mut steps = Vec::new();
        while !graph.is_empty() {
            while let Some(node) = graph.unary_on_track() {
                let track = graph.rightmost_complete_track();
                graph
                    .erase_unary(node)
                    .map_err(DiagramError::InternalInvariantViolation)?;
                steps.push(CertificateStep::EraseUnaryNode { node, track });
            }
            let track = graph.rightmost_complete_track();
            let edge = graph.find_removable_right_edge()?.ok_or_else(|| {
                DiagramError::InternalInvariantViolation(
                    "no removable right edge after erasing unary nodes".into(),
                )
            })?;
            graph
                .delete_edge(edge)
                .map_err(DiagramError::InternalInvariantViolation)?;
            steps.push(CertificateStep::DeleteEdge { edge, track });
            if steps.len() > budget {
                return Err(DiagramError::InternalInvariantViolation(
                    "contraction exceeded #nodes + #edges steps".into(),
                ));
            }
        }
        Ok(ContractionCertificate { steps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(level: usize, strand: usize) -> EdgeId {
        EdgeId::new(level, strand)
    }

    fn split_merge() -> DiagramWord {
        DiagramWord::from_pairs(1, [(0, Generator::Beta), (0, Generator::Alpha)]).unwrap()
    }

    #[test]
    fn rightmost_tracks() {
        assert_eq!(
            DiagramWord::beta().rightmost_complete_track(),
            vec![e(0, 0), e(1, 1)]
        );
        assert_eq!(
            DiagramWord::alpha().rightmost_complete_track(),
            vec![e(0, 1), e(1, 0)]
        );
        // input -> beta -> right branch -> alpha -> output
        assert_eq!(
            split_merge().rightmost_complete_track(),
            vec![e(0, 0), e(1, 1), e(2, 0)]
        );
    }

    #[test]
    fn removable_edges() {
        assert_eq!(split_merge().find_removable_right_edge(), Ok(Some(e(1, 1))));
        let id = DiagramWord::identity(1).unwrap();
        assert_eq!(id.find_removable_right_edge(), Ok(Some(e(0, 0))));
        let train = DiagramWord::train(crate::colour::Colour::new("a").unwrap());
        assert!(matches!(
            train.find_removable_right_edge(),
            Err(DiagramError::Precondition(_))
        ));
    }

    #[test]
    fn contract_small_cases() {
        let id = DiagramWord::identity(1).unwrap();
        let cert = id.contract().unwrap();
        assert_eq!(
            cert.steps,
            vec![CertificateStep::DeleteEdge {
                edge: e(0, 0),
                track: vec![e(0, 0)]
            }]
        );

        let train = DiagramWord::train(crate::colour::Colour::new("a").unwrap());
        let cert = train.contract().unwrap();
        assert_eq!(
            cert.steps,
            vec![
                CertificateStep::EraseUnaryNode {
                    node: 0,
                    track: vec![e(0, 0), e(1, 0)]
                },
                CertificateStep::DeleteEdge {
                    edge: e(0, 0),
                    track: vec![e(0, 0)]
                },
            ]
        );
        cert.replay(&train).unwrap();
    }

    #[test]
    fn contract_split_merge_regression() {
        let d = split_merge();
        let cert = d.contract().unwrap();
        // Delete the right branch; beta and alpha become (1,1) and are
        // erased; the remaining single edge goes last.
        assert_eq!(
            cert.steps,
            vec![
                CertificateStep::DeleteEdge {
                    edge: e(1, 1),
                    track: vec![e(0, 0), e(1, 1), e(2, 0)]
                },
                CertificateStep::EraseUnaryNode {
                    node: 0,
                    track: vec![e(0, 0), e(1, 0), e(2, 0)]
                },
                CertificateStep::EraseUnaryNode {
                    node: 1,
                    track: vec![e(0, 0), e(2, 0)]
                },
                CertificateStep::DeleteEdge {
                    edge: e(0, 0),
                    track: vec![e(0, 0)]
                },
            ]
        );
        cert.replay(&d).unwrap();
    }

    #[test]
    fn replay_rejects_tampering() {
        let d = split_merge();
        let mut cert = d.contract().unwrap();
        cert.steps.pop();
        assert!(matches!(
            cert.replay(&d),
            Err(DiagramError::InvalidCertificate { .. })
        ));
        let bogus = ContractionCertificate {
            steps: vec![CertificateStep::DeleteEdge {
                edge: e(0, 0),
                track: vec![e(0, 0), e(1, 1), e(2, 0)],
            }],
        };
        assert!(bogus.replay(&d).is_err());
    }
}
