//! JSON wire formats for diagrams and contraction certificates.
//!
//! ```json
//! {"inputs": 2, "levels": [{"offset": 0, "gen": "alpha"}, {"offset": 0, "gen": {"train": "a"}}]}
//! {"steps": [{"erase": 0, "track": [[0, 0], [1, 0]]}, {"delete": [0, 0], "track": [[0, 0]]}]}
//! ```

use serde::{Deserialize, Serialize};

use super::{CertificateStep, ContractionCertificate, DiagramError, DiagramWord, EdgeId, Generator, Level};
use crate::colour::{Colour, ColourSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorJson {
    Named(String),
    Train { train: Colour },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelJson {
    pub offset: usize,
    pub gen: GeneratorJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub inputs: usize,
    pub levels: Vec<LevelJson>,
}

impl From<&DiagramWord> for DiagramJson {
    fn from(word: &DiagramWord) -> Self {
        DiagramJson {
            inputs: word.inputs(),
            levels: word
                .levels()
                .iter()
                .map(|l| LevelJson {
                    offset: l.offset,
                    gen: match &l.generator {
                        Generator::Alpha => GeneratorJson::Named("alpha".into()),
                        Generator::Beta => GeneratorJson::Named("beta".into()),
                        Generator::Train(c) => GeneratorJson::Train { train: c.clone() },
                    },
                })
                .collect(),
        }
    }
}

impl DiagramJson {
    pub fn into_word(self, colours: Option<&ColourSet>) -> Result<DiagramWord, DiagramError> {
        let levels = self
            .levels
            .into_iter()
            .map(|l| {
                let generator = match l.gen {
                    GeneratorJson::Named(name) if name == "alpha" => Generator::Alpha,
                    GeneratorJson::Named(name) if name == "beta" => Generator::Beta,
                    GeneratorJson::Named(name) => {
                        return Err(DiagramError::Precondition(format!(
                            "unknown generator `{name}`"
                        )))
                    }
                    GeneratorJson::Train { train } => Generator::Train(train),
                };
                Ok(Level::new(l.offset, generator))
            })
            .collect::<Result<Vec<_>, _>>()?;
        match colours {
            Some(set) => DiagramWord::build(set, self.inputs, levels),
            None => DiagramWord::new(self.inputs, levels),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StepJson {
    Erase { erase: usize, track: Vec<(usize, usize)> },
    Delete { delete: (usize, usize), track: Vec<(usize, usize)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub steps: Vec<StepJson>,
}

fn pair(e: &EdgeId) -> (usize, usize) {
    (e.level, e.strand)
}

fn edge((level, strand): (usize, usize)) -> EdgeId {
    EdgeId::new(level, strand)
}

impl From<&ContractionCertificate> for CertificateJson {
    fn from(cert: &ContractionCertificate) -> Self {
        CertificateJson {
            steps: cert
                .steps
                .iter()
                .map(|s| match s {
                    CertificateStep::EraseUnaryNode { node, track } => StepJson::Erase {
                        erase: *node,
                        track: track.iter().map(pair).collect(),
                    },
                    CertificateStep::DeleteEdge { edge, track } => StepJson::Delete {
                        delete: pair(edge),
                        track: track.iter().map(pair).collect(),
                    },
                })
                .collect(),
        }
    }
}

impl From<CertificateJson> for ContractionCertificate {
    fn from(json: CertificateJson) -> Self {
        ContractionCertificate {
            steps: json
                .steps
                .into_iter()
                .map(|s| match s {
                    StepJson::Erase { erase, track } => CertificateStep::EraseUnaryNode {
                        node: erase,
                        track: track.into_iter().map(edge).collect(),
                    },
                    StepJson::Delete { delete, track } => CertificateStep::DeleteEdge {
                        edge: edge(delete),
                        track: track.into_iter().map(edge).collect(),
                    },
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_json_shape() {
        let word = DiagramWord::from_pairs(1, [(0, Generator::Beta), (1, Generator::train("a"))]).unwrap();
        let json = serde_json::to_string(&DiagramJson::from(&word)).unwrap();
        assert_eq!(
            json,
            r#"{"inputs":1,"levels":[{"offset":0,"gen":"beta"},{"offset":1,"gen":{"train":"a"}}]}"#
        );
        let back: DiagramJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.into_word(None).unwrap(), word);
    }

    #[test]
    fn rejects_unknown_generator_and_colour() {
        let bad: DiagramJson =
            serde_json::from_str(r#"{"inputs":1,"levels":[{"offset":0,"gen":"gamma"}]}"#).unwrap();
        assert!(bad.into_word(None).is_err());
        let set = ColourSet::parse("a").unwrap();
        let unknown: DiagramJson =
            serde_json::from_str(r#"{"inputs":1,"levels":[{"offset":0,"gen":{"train":"b"}}]}"#)
                .unwrap();
        assert!(matches!(
            unknown.into_word(Some(&set)),
            Err(DiagramError::UnknownColour(_))
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let cert = DiagramWord::identity(1).unwrap().contract().unwrap();
        let json = serde_json::to_string(&CertificateJson::from(&cert)).unwrap();
        assert_eq!(json, r#"{"steps":[{"delete":[0,0],"track":[[0,0]]}]}"#);
        let back: CertificateJson = serde_json::from_str(&json).unwrap();
        assert_eq!(ContractionCertificate::from(back), cert);
    }
}
