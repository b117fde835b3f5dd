//! Property suites over generated and enumerated instances.
//!
//! Every instance draws from its own seeded stream, so reports are the same
//! with and without parallel evaluation.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use super::{
    braiding_cell, extract_braid, generator_cell, hcompose, identity_cell, invert_cell, serial,
    tensor_cells, vcompose, CellError, CellKind, TrackedTwoCell,
};
use crate::braids::{ColouredBraid, Letter, Sign};
use crate::colour::{Colour, ColourSet, ColourWord};
use crate::diagrams::fixtures::{removable_edge_figure, FIGURE_F, FIGURE_G0, FIGURE_G1};
use crate::diagrams::{DiagramWord, EdgeId, Endpoint, TrackGraph};
use crate::geometry::{braid_of_path, comparison_path, theta};
use crate::random::{instance_rng, random_diagram, random_diagram_from, random_letters, random_word, SuiteRng};
use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    TriangleLeft,
    TriangleRight,
    PentagonA,
    Interchange,
    NaturalityConjugation,
    Cocycle,
    Confluence,
    WeakUnit,
    Handedness,
    Contraction,
    BraidRelations,
}

pub const CHECKS: [Check; 11] = [
    Check::TriangleLeft,
    Check::TriangleRight,
    Check::PentagonA,
    Check::Interchange,
    Check::NaturalityConjugation,
    Check::Cocycle,
    Check::Confluence,
    Check::WeakUnit,
    Check::Handedness,
    Check::Contraction,
    Check::BraidRelations,
];

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::TriangleLeft => "triangle_left",
            Check::TriangleRight => "triangle_right",
            Check::PentagonA => "pentagon_A",
            Check::Interchange => "interchange",
            Check::NaturalityConjugation => "naturality_conjugation",
            Check::Cocycle => "cocycle",
            Check::Confluence => "confluence",
            Check::WeakUnit => "weak_unit",
            Check::Handedness => "handedness",
            Check::Contraction => "contraction",
            Check::BraidRelations => "braid_relations",
        }
    }

    /// Randomized instances run when no budget is given.
    pub fn default_budget(self) -> usize {
        match self {
            Check::TriangleLeft | Check::TriangleRight => 100,
            Check::PentagonA => 0,
            Check::Interchange => 200,
            Check::NaturalityConjugation => 100,
            Check::Cocycle => 100,
            Check::Confluence => 500,
            Check::WeakUnit => 500,
            Check::Handedness => 0,
            Check::Contraction => 1000,
            Check::BraidRelations => 10_000,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CHECKS
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub colours: ColourSet,
    pub seed: u64,
    /// Randomized instances; `None` uses the check's default.
    pub budget: Option<usize>,
    /// Crossing sign in which braidings are reported.
    pub handedness: Sign,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            colours: ColourSet::parse("a,b,c").expect("valid colours"),
            seed: 0,
            budget: None,
            handedness: GEOMETRIC_HANDEDNESS,
        }
    }
}

/// The crossing sign of `T_{a,b}` read off the train motions.
pub const GEOMETRIC_HANDEDNESS: Sign = Sign::Negative;

/// Reads the sign of the braiding from `T_{a,b}`; `None` if it is not a
/// single crossing.
pub fn measure_handedness(a: &Colour, b: &Colour) -> Result<Option<Sign>, CellError> {
    let (f, g) = (ColourWord(vec![a.clone()]), ColourWord(vec![b.clone()]));
    let braid = extract_braid(&braiding_cell(&f, &g)?)?;
    let source = f.concat(&g);
    for sign in [Sign::Positive, Sign::Negative] {
        if braid.equals(&ColouredBraid::new(source.clone(), vec![Letter::new(1, sign)]).expect("two strands")) {
            return Ok(Some(sign));
        }
    }
    Ok(None)
}

/// A braid extracted from the train motions, written in the convention
/// where the braiding has sign `handedness`.
pub fn oriented(braid: ColouredBraid, handedness: Sign) -> ColouredBraid {
    if handedness == GEOMETRIC_HANDEDNESS {
        braid
    } else {
        braid.mirror()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub inputs: Value,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Outcome = Option<Failure>;

fn fail(inputs: Value, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Outcome {
    Some(Failure {
        inputs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

fn error(inputs: Value, e: impl fmt::Display) -> Outcome {
    fail(inputs, format!("error: {e}"), "")
}

fn braid(cell: &Result<TrackedTwoCell, CellError>) -> Result<ColouredBraid, String> {
    match cell {
        Ok(c) => extract_braid(c).map_err(|e| e.to_string()),
        Err(e) => Err(e.to_string()),
    }
}

/// Compares the braids of two cells built from `inputs`.
fn compare(
    inputs: Value,
    lhs: Result<TrackedTwoCell, CellError>,
    rhs: Result<TrackedTwoCell, CellError>,
) -> Outcome {
    compare_braids(inputs, braid(&lhs), braid(&rhs))
}

fn compare_braids(inputs: Value, lhs: Result<ColouredBraid, String>, rhs: Result<ColouredBraid, String>) -> Outcome {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l.equals(&r) => None,
        (Ok(l), Ok(r)) => fail(inputs, l, r),
        (Err(e), _) | (_, Err(e)) => error(inputs, e),
    }
}

fn words_json(words: &[&ColourWord]) -> Value {
    Value::Array(words.iter().map(|w| json!(w.to_string())).collect())
}

/// All words of length `1..=max` over `colours`.
pub fn all_words(colours: &[Colour], max: usize) -> Vec<ColourWord> {
    let mut out = Vec::new();
    let mut layer = vec![ColourWord::empty()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w| colours.iter().map(move |c| w.concat(&ColourWord(vec![c.clone()]))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn run_indexed<T: Send>(count: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..count).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..count).map(f).collect()
    }
}

fn collect(check: Check, outcomes: Vec<Outcome>) -> Report {
    Report {
        check: check.name().to_string(),
        instances: outcomes.len(),
        failures: outcomes.into_iter().flatten().collect(),
    }
}

pub fn run_axiom_suite(check: Check, config: &SuiteConfig) -> Report {
    let budget = config.budget.unwrap_or_else(|| check.default_budget());
    let colours = config.colours.colours();
    let outcomes = match check {
        Check::TriangleLeft | Check::TriangleRight => {
            let small = &colours[..colours.len().min(2)];
            let words = all_words(small, 2);
            let mut triples = Vec::new();
            for f in &words {
                for g in &words {
                    for h in &words {
                        triples.push((f.clone(), g.clone(), h.clone()));
                    }
                }
            }
            let exhaustive = triples.len();
            let left = check == Check::TriangleLeft;
            run_indexed(exhaustive + budget, |i| {
                let (f, g, h) = if i < exhaustive {
                    triples[i].clone()
                } else {
                    let rng = &mut instance_rng(config.seed, i);
                    (
                        random_word(rng, colours, 1, 4),
                        random_word(rng, colours, 1, 4),
                        random_word(rng, colours, 1, 4),
                    )
                };
                triangle(left, &f, &g, &h)
            })
        }
        Check::PentagonA => vec![pentagon()],
        Check::Interchange => run_indexed(budget, |i| interchange(&mut instance_rng(config.seed, i), colours)),
        Check::NaturalityConjugation => {
            run_indexed(budget, |i| naturality(&mut instance_rng(config.seed, i), colours))
        }
        Check::Cocycle => run_indexed(budget, |i| cocycle(&mut instance_rng(config.seed, i), colours)),
        Check::Confluence => run_indexed(budget, |i| confluence(&mut instance_rng(config.seed, i), colours)),
        Check::WeakUnit => {
            let mut out = weak_unit_cells();
            out.extend(run_indexed(budget, |i| weak_unit(&mut instance_rng(config.seed, i), colours, i)));
            out
        }
        Check::Handedness => {
            let small = &colours[..colours.len().min(3)];
            let words = all_words(small, 2);
            let pairs: Vec<_> = words
                .iter()
                .flat_map(|f| words.iter().map(move |g| (f.clone(), g.clone())))
                .collect();
            run_indexed(pairs.len(), |i| handedness(&pairs[i].0, &pairs[i].1, config.handedness))
        }
        Check::Contraction => {
            let mut out = vec![figure()];
            out.extend(run_indexed(budget, |i| contraction(&mut instance_rng(config.seed, i), colours)));
            out
        }
        Check::BraidRelations => {
            run_indexed(budget, |i| braid_relation(&mut instance_rng(config.seed, i), colours))
        }
    };
    collect(check, outcomes)
}

fn triangle(left: bool, f: &ColourWord, g: &ColourWord, h: &ColourWord) -> Outcome {
    let inputs = words_json(&[f, g, h]);
    let (df, dg, dh) = (serial(f), serial(g), serial(h));
    let build = || -> Result<(TrackedTwoCell, TrackedTwoCell), CellError> {
        if left {
            // T_{f,gh} = (T_{f,g} # h) then (g # T_{f,h})
            let whole = braiding_cell(f, &g.concat(h))?;
            let first = hcompose(&braiding_cell(f, g)?, &identity_cell(&dh))?;
            let second = hcompose(&identity_cell(&dg), &braiding_cell(f, h)?)?;
            Ok((whole, vcompose(&first, &second)?))
        } else {
            // T_{fg,h} = (f # T_{g,h}) then (T_{f,h} # g)
            let whole = braiding_cell(&f.concat(g), h)?;
            let first = hcompose(&identity_cell(&df), &braiding_cell(g, h)?)?;
            let second = hcompose(&braiding_cell(f, h)?, &identity_cell(&dg))?;
            Ok((whole, vcompose(&first, &second)?))
        }
    };
    match build() {
        Ok((l, r)) => compare(inputs, Ok(l), Ok(r)),
        Err(e) => error(inputs, e),
    }
}

fn pentagon() -> Outcome {
    let build = || -> Result<Outcome, CellError> {
        let id = DiagramWord::identity(1)?;
        let id2 = DiagramWord::identity(2)?;
        let alpha = DiagramWord::alpha();
        let a = generator_cell(CellKind::A, &ColourWord::empty(), false)?;
        let iia = id2.tensor(&alpha);
        let aii = alpha.tensor(&id2);
        let iai = id.tensor(&alpha).tensor(&id);
        // Two steps: A on the top two merges, then on the bottom two.
        let short = vcompose(
            &hcompose(&identity_cell(&iia), &a)?,
            &hcompose(&identity_cell(&aii), &a)?,
        )?;
        // Three steps: I⊗A, then A in the middle, then A⊗I.
        let long = vcompose(
            &vcompose(
                &hcompose(&tensor_cells(&identity_cell(&id), &a)?, &identity_cell(&alpha))?,
                &hcompose(&identity_cell(&iai), &a)?,
            )?,
            &hcompose(&tensor_cells(&a, &identity_cell(&id))?, &identity_cell(&alpha))?,
        )?;
        let inputs = json!({"source": short.source().to_string(), "target": short.target().to_string()});
        if short.source() != long.source() || short.target() != long.target() {
            return Ok(fail(inputs, long.source(), long.target()));
        }
        let lhs = extract_braid(&vcompose(&short, &invert_cell(&long))?)?;
        Ok(if lhs.is_identity() && lhs.source().is_empty() {
            None
        } else {
            fail(inputs, lhs, ColouredBraid::identity(ColourWord::empty()))
        })
    };
    build().unwrap_or_else(|e| error(json!("pentagon"), e))
}

/// A random cell on `inputs` strands: a tensor product of generator cells,
/// braidings and identities.
pub fn random_cell(rng: &mut SuiteRng, colours: &[Colour], inputs: usize) -> Result<TrackedTwoCell, CellError> {
    let mut remaining = inputs;
    let mut acc: Option<TrackedTwoCell> = None;
    while remaining > 0 {
        let piece = random_piece(rng, colours, remaining)?;
        remaining -= piece.source().inputs();
        acc = Some(match acc {
            None => piece,
            Some(a) => tensor_cells(&a, &piece)?,
        });
    }
    acc.ok_or_else(|| CellError::UnknownCell("cell on zero strands".into()))
}

fn random_piece(rng: &mut SuiteRng, colours: &[Colour], max_inputs: usize) -> Result<TrackedTwoCell, CellError> {
    let inverse = rng.gen_bool(0.5);
    let choice = rng.gen_range(0..4);
    let cell = match choice {
        0 => {
            let f = random_word(rng, colours, 1, 2);
            let g = random_word(rng, colours, 1, 2);
            braiding_cell(&f, &g)?
        }
        1 => {
            let kinds: Vec<CellKind> = CellKind::ALL
                .into_iter()
                .filter(|k| match k {
                    CellKind::A => max_inputs >= 3,
                    CellKind::L | CellKind::R => max_inputs >= 2,
                    _ => true,
                })
                .collect();
            let kind = *kinds.choose(rng).expect("kinds");
            let f = random_word(rng, colours, 0, 2);
            generator_cell(kind, &f, inverse)?
        }
        _ => {
            let inputs = rng.gen_range(1..=max_inputs.min(2));
            identity_cell(&random_diagram_from(rng, colours, inputs, 3))
        }
    };
    Ok(if choice == 0 && inverse { invert_cell(&cell) } else { cell })
}

fn interchange(rng: &mut SuiteRng, colours: &[Colour]) -> Outcome {
    // Diagram level: (A⊗B)#(C⊗D) = (A#C)⊗(B#D).
    let a = random_diagram(rng, colours, 3);
    let b = random_diagram(rng, colours, 3);
    let c = random_diagram_from(rng, colours, a.outputs(), 3);
    let d = random_diagram_from(rng, colours, b.outputs(), 3);
    let lhs = a.tensor(&b).compose(&c.tensor(&d));
    let rhs = a.compose(&c).and_then(|ac| Ok(ac.tensor(&b.compose(&d)?)));
    let inputs = json!([a.to_string(), b.to_string(), c.to_string(), d.to_string()]);
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l.equals(&r) => {}
        (Ok(l), Ok(r)) => return fail(inputs, l, r),
        (Err(e), _) | (_, Err(e)) => return error(inputs, e),
    }
    // Cell level, for horizontal and tensor composition.
    let mut build = || -> Result<Outcome, CellError> {
        let strands = rng.gen_range(1..=2);
        let u = random_cell(rng, colours, strands)?;
        let v = random_cell(rng, colours, u.source().outputs())?;
        let inputs = json!({
            "u": [u.source().to_string(), u.target().to_string()],
            "v": [v.source().to_string(), v.target().to_string()],
        });
        let whole = hcompose(&u, &v);
        let u_first = vcompose(
            &hcompose(&u, &identity_cell(v.source()))?,
            &hcompose(&identity_cell(u.target()), &v)?,
        );
        let v_first = vcompose(
            &hcompose(&identity_cell(u.source()), &v)?,
            &hcompose(&u, &identity_cell(v.target()))?,
        );
        if let Some(f) = compare(inputs.clone(), whole.clone(), u_first) {
            return Ok(Some(f));
        }
        if let Some(f) = compare(inputs.clone(), whole, v_first) {
            return Ok(Some(f));
        }
        let whole = tensor_cells(&u, &v);
        let u_first = vcompose(
            &tensor_cells(&u, &identity_cell(v.source()))?,
            &tensor_cells(&identity_cell(u.target()), &v)?,
        );
        if let Some(f) = compare(inputs.clone(), whole.clone(), u_first) {
            return Ok(Some(f));
        }
        let lhs = whole;
        let rhs = vcompose(
            &tensor_cells(&identity_cell(u.source()), &v)?,
            &tensor_cells(&u, &identity_cell(v.target()))?,
        );
        Ok(compare(inputs, lhs, rhs))
    };
    build().unwrap_or_else(|e| error(json!("interchange cells"), e))
}

fn naturality(rng: &mut SuiteRng, colours: &[Colour]) -> Outcome {
    // A braid cell U: x++y ⇒ y++x, and the braiding with a word g.
    let x = random_word(rng, colours, 1, 2);
    let y = random_word(rng, colours, 1, 2);
    let g = random_word(rng, colours, 1, 2);
    let inputs = words_json(&[&x, &y, &g]);
    let build = || -> Result<[Outcome; 3], CellError> {
        let f = x.concat(&y);
        let f2 = y.concat(&x);
        let u = braiding_cell(&x, &y)?;
        let dg = serial(&g);
        let first = compare(
            inputs.clone(),
            vcompose(&hcompose(&u, &identity_cell(&dg))?, &braiding_cell(&f2, &g)?),
            vcompose(&braiding_cell(&f, &g)?, &hcompose(&identity_cell(&dg), &u)?),
        );
        let second = compare(
            inputs.clone(),
            vcompose(&hcompose(&identity_cell(&dg), &u)?, &braiding_cell(&g, &f2)?),
            vcompose(&braiding_cell(&g, &f)?, &hcompose(&u, &identity_cell(&dg))?),
        );
        // The mate equation from β#(If)#α to f.
        let fg = serial(&g);
        let beta = DiagramWord::beta();
        let e = generator_cell(CellKind::E, &ColourWord::empty(), false)?;
        let via_l = vcompose(
            &hcompose(&identity_cell(&beta), &generator_cell(CellKind::L, &g, false)?)?,
            &hcompose(&e, &identity_cell(&fg))?,
        );
        let via_lbar = vcompose(
            &hcompose(&generator_cell(CellKind::Lbar, &g, false)?, &identity_cell(&DiagramWord::alpha()))?,
            &hcompose(&identity_cell(&fg), &e)?,
        );
        let third = compare(inputs.clone(), via_l, via_lbar);
        Ok([first, second, third])
    };
    match build() {
        Ok(outcomes) => outcomes.into_iter().flatten().next(),
        Err(e) => error(inputs, e),
    }
}

fn cocycle(rng: &mut SuiteRng, colours: &[Colour]) -> Outcome {
    // Redraw a few times to favour diagrams with more than one representative.
    let mut d = random_diagram(rng, colours, 6);
    let mut orders = Vec::new();
    for _ in 0..20 {
        let inputs = rng.gen_range(2..=4);
        d = random_diagram_from(rng, colours, inputs, 6);
        orders = match d.linear_extensions(10_000) {
            Ok(r) => r.orders,
            Err(e) => return error(json!(d.to_string()), e),
        };
        if orders.len() > 2 && d.train_count() >= 2 {
            break;
        }
    }
    for _ in 0..4 {
        let from = orders.choose(rng).expect("one extension");
        let to = orders.choose(rng).expect("one extension");
        let mid = orders.choose(rng).expect("one extension");
        let direct = comparison_path(&d, from, to).and_then(|p| braid_of_path(&p));
        let via = comparison_path(&d, from, mid)
            .and_then(|p| p.then(&comparison_path(&d, mid, to)?))
            .and_then(|p| braid_of_path(&p));
        let back = comparison_path(&d, to, from).and_then(|p| braid_of_path(&p.reverse()));
        let inputs = json!({"diagram": d.to_string(), "from": from, "to": to, "via": mid});
        let direct = direct.map_err(|e| e.to_string());
        if let Some(f) = compare_braids(inputs.clone(), direct.clone(), via.map_err(|e| e.to_string())) {
            return Some(f);
        }
        if let Some(f) = compare_braids(inputs, direct, back.map_err(|e| e.to_string())) {
            return Some(f);
        }
    }
    None
}

fn confluence(rng: &mut SuiteRng, colours: &[Colour]) -> Outcome {
    let d = random_diagram(rng, colours, 8);
    let canonical = d.canonicalize();
    match d.enumerate_representatives(100_000) {
        Ok(reps) => reps
            .iter()
            .find(|r| r.canonicalize() != canonical)
            .and_then(|r| fail(json!(r.to_string()), r.canonicalize(), &canonical)),
        Err(e) => error(json!(d.to_string()), e),
    }
}

fn weak_unit_cells() -> Vec<Outcome> {
    let empty = ColourWord::empty();
    let cells = || -> Result<Vec<(String, TrackedTwoCell)>, CellError> {
        let e = generator_cell(CellKind::E, &empty, false)?;
        let id = identity_cell(&DiagramWord::identity(1)?);
        Ok(vec![
            ("E".into(), e.clone()),
            ("E^-1 * I".into(), tensor_cells(&invert_cell(&e), &id)?),
            ("I * E^-1".into(), tensor_cells(&id, &invert_cell(&e))?),
        ])
    };
    match cells() {
        Ok(cells) => cells
            .into_iter()
            .map(|(name, c)| match extract_braid(&c) {
                Ok(b) if b.is_identity() && b.source().is_empty() => None,
                Ok(b) => fail(json!(name), b, "id"),
                Err(e) => error(json!(name), e),
            })
            .collect(),
        Err(e) => vec![error(json!("weak unit cells"), e)],
    }
}

fn weak_unit(rng: &mut SuiteRng, colours: &[Colour], index: usize) -> Outcome {
    let d = random_diagram(rng, colours, 8);
    let id = DiagramWord::identity(1).expect("one strand");
    let padded = d.tensor(&id);
    let (w, _) = theta(&d);
    let (wp, _) = theta(&padded);
    if w != wp {
        return fail(json!(d.to_string()), wp, w);
    }
    // Cells on D and on D⊗I carry the same braids.
    if index.is_multiple_of(5) {
        let inputs = rng.gen_range(1..=2);
        let u = match random_cell(rng, colours, inputs) {
            Ok(u) => u,
            Err(e) => return error(json!("random cell"), e),
        };
        let inputs = json!([u.source().to_string(), u.target().to_string()]);
        return compare(inputs, Ok(u.clone()), tensor_cells(&u, &identity_cell(&id)));
    }
    None
}

fn handedness(f: &ColourWord, g: &ColourWord, s: Sign) -> Outcome {
    let inputs = words_json(&[f, g]);
    match braiding_cell(f, g).map_err(|e| e.to_string()).and_then(|c| {
        extract_braid(&c).map_err(|e| e.to_string())
    }) {
        Ok(b) => {
            let b = oriented(b, s);
            let block = ColouredBraid::block_braiding(f, g, s);
            if b.equals(&block) {
                None
            } else {
                fail(inputs, b, block)
            }
        }
        Err(e) => error(inputs, e),
    }
}

fn figure() -> Outcome {
    let d = removable_edge_figure();
    let mut g = TrackGraph::from_word(&d);
    let inputs = json!("removable edge figure");
    if let Err(e) = g.erase_unary(FIGURE_F) {
        return error(inputs, e);
    }
    let edges = g.removable_right_edges();
    let expected = EdgeId::new(FIGURE_G0 + 1, 5);
    let ends = g.endpoints(expected);
    if edges != vec![expected]
        || ends != Some((Endpoint::Node(FIGURE_G0), Endpoint::Node(FIGURE_G1)))
    {
        let found: Vec<String> = edges.iter().map(ToString::to_string).collect();
        return fail(inputs, found.join(","), expected);
    }
    match d.contract().and_then(|c| c.replay(&d)) {
        Ok(()) => None,
        Err(e) => error(json!("removable edge figure contraction"), e),
    }
}

fn contraction(rng: &mut SuiteRng, colours: &[Colour]) -> Outcome {
    let d = random_diagram(rng, colours, 12);
    match d.contract().and_then(|c| c.replay(&d)) {
        Ok(()) => None,
        Err(e) => error(json!(d.to_string()), e),
    }
}

fn braid_relation(rng: &mut SuiteRng, colours: &[Colour]) -> Outcome {
    let n = rng.gen_range(3..=6);
    let source = random_word(rng, colours, n, n);
    let (p, q) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
    let prefix = random_letters(rng, n, p);
    let suffix = random_letters(rng, n, q);
    let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
    let i = rng.gen_range(1..n);
    let l = |k: usize| Letter::new(k, sign);
    let (lhs, rhs): (Vec<Letter>, Vec<Letter>) = match rng.gen_range(0..3) {
        0 if i + 1 < n => (vec![l(i), l(i + 1), l(i)], vec![l(i + 1), l(i), l(i + 1)]),
        1 if n >= 4 => {
            let far: Vec<usize> = (1..n).filter(|j| j.abs_diff(i) >= 2).collect();
            let j = *far.choose(rng).unwrap_or(&i);
            (vec![l(i), Letter::new(j, sign.flip())], vec![Letter::new(j, sign.flip()), l(i)])
        }
        _ => (vec![l(i), l(i).inverse()], vec![]),
    };
    let wrap = |core: &[Letter]| {
        let mut w = prefix.clone();
        w.extend_from_slice(core);
        w.extend_from_slice(&suffix);
        ColouredBraid::new(source.clone(), w).expect("indices in range")
    };
    let (a, b) = (wrap(&lhs), wrap(&rhs));
    let inputs = json!({"source": source.to_string(), "n": n});
    if !a.equals(&b) {
        return fail(inputs, a, b);
    }
    // A single crossing is never trivial, and σ_i differs from its inverse.
    let one = wrap(&[l(i)]);
    let other = wrap(&[l(i).inverse()]);
    if one.target() == other.target() && one.equals(&other) {
        return fail(inputs, one, other);
    }
    None
}
