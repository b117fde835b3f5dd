use std::fmt::Write;

use crate::braids::{ColouredBraid, Sign};
use crate::colour::ColourWord;
use crate::diagrams::{DiagramWord, Generator};
use crate::twocells::TrackedTwoCell;

const UNIT: i64 = 40;
const MARGIN: i64 = 20;
const STYLE: &str = "<style>line,path{stroke:#222;stroke-width:2;fill:none}circle{fill:#fff;stroke:#222;stroke-width:2}text{font:12px monospace;fill:#222}</style>";

/// Vertical coordinates grow downward in SVG; pictures are read upward.
struct Frame {
    height: i64,
}

impl Frame {
    fn y(&self, up: i64) -> i64 {
        self.height - MARGIN - up
    }
}

fn open(out: &mut String, width: i64, height: i64) {
    let _ = write!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">{STYLE}"#
    );
}

fn line(out: &mut String, x1: i64, y1: i64, x2: i64, y2: i64) {
    let _ = write!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
}

fn text(out: &mut String, x: i64, y: i64, s: &str) {
    let escaped = s.replace('&', "&amp;").replace('<', "&lt;");
    let _ = write!(out, r#"<text x="{x}" y="{y}">{escaped}</text>"#);
}

fn diagram_body(out: &mut String, word: &DiagramWord, dx: i64, frame: &Frame) {
    let sx = |j: usize| dx + MARGIN + (j as i64 + 1) * UNIT;
    let sy = |t: i64| frame.y(t * UNIT);
    let mut width = word.inputs();
    for (t, level) in word.levels().iter().enumerate() {
        let t = t as i64;
        let k = level.offset;
        let (below, above) = (sy(t), sy(t + 1));
        let shift = |j: usize| -> usize {
            match level.generator {
                Generator::Alpha if j > k => j - 1,
                Generator::Beta if j > k => j + 1,
                _ => j,
            }
        };
        for j in 0..width {
            if level.generator.arity_in() == 1 && j == k {
                continue;
            }
            line(out, sx(j), below, sx(shift(j)), above);
        }
        match &level.generator {
            Generator::Train(c) => {
                let mid = frame.y(t * UNIT + UNIT / 2);
                line(out, sx(k), below, sx(k), above);
                let _ = write!(out, r#"<circle cx="{}" cy="{mid}" r="5"/>"#, sx(k));
                text(out, sx(k) + 9, mid + 4, c.as_str());
            }
            Generator::Beta => {
                line(out, sx(k), below, sx(k), above);
                line(out, sx(k), below, sx(k + 1), above);
            }
            Generator::Alpha => {}
        }
        width = width + level.generator.arity_out() - level.generator.arity_in();
    }
    if word.is_empty() {
        for j in 0..width {
            line(out, sx(j), sy(0), sx(j), sy(1));
        }
    }
}

fn diagram_size(word: &DiagramWord) -> (i64, i64) {
    let width = 2 * MARGIN + (word.max_width() as i64 + 1) * UNIT + 20;
    let height = 2 * MARGIN + (word.len().max(1) as i64) * UNIT;
    (width, height)
}

/// Strands are drawn between level boundaries, trains as labelled dots;
/// merges and splits carry no dot.
pub fn diagram_svg(word: &DiagramWord) -> String {
    let (width, height) = diagram_size(word);
    let mut out = String::new();
    open(&mut out, width, height);
    diagram_body(&mut out, word, 0, &Frame { height });
    out.push_str("</svg>\n");
    out
}

fn braid_body(out: &mut String, braid: &ColouredBraid, dx: i64, frame: &Frame) {
    let n = braid.strands();
    let sx = |j: usize| dx + MARGIN + (j as i64 + 1) * UNIT;
    let label_row = |out: &mut String, word: &ColourWord, up: i64| {
        for (j, c) in word.letters().iter().enumerate() {
            text(out, sx(j) - 4, frame.y(up), c.as_str());
        }
    };
    label_row(out, braid.source(), -14);
    for (t, letter) in braid.word().iter().enumerate() {
        let (below, above) = (frame.y(t as i64 * UNIT), frame.y((t as i64 + 1) * UNIT));
        let (l, r) = (letter.index - 1, letter.index);
        for j in (0..n).filter(|&j| j != l && j != r) {
            line(out, sx(j), below, sx(j), above);
        }
        let mid = (below + above) / 2;
        let centre = (sx(l) + sx(r)) / 2;
        // The strand in front is drawn whole; the other is broken at the centre.
        let (front, back) = match letter.sign {
            Sign::Positive => ((sx(l), sx(r)), (sx(r), sx(l))),
            Sign::Negative => ((sx(r), sx(l)), (sx(l), sx(r))),
        };
        line(out, front.0, below, front.1, above);
        let gap = 6;
        let towards = |from: i64| if from < centre { -gap } else { gap };
        line(out, back.0, below, centre + towards(back.0), mid + gap);
        line(out, centre + towards(back.1), mid - gap, back.1, above);
    }
    if braid.word().is_empty() {
        for j in 0..n {
            line(out, sx(j), frame.y(0), sx(j), frame.y(UNIT));
        }
    }
    let rows = braid.word().len().max(1) as i64;
    label_row(out, &braid.target(), rows * UNIT + 6);
}

fn braid_size(braid: &ColouredBraid) -> (i64, i64) {
    let width = 2 * MARGIN + (braid.strands() as i64 + 1) * UNIT;
    let height = 2 * MARGIN + 40 + braid.word().len().max(1) as i64 * UNIT;
    (width, height)
}

/// Crossings are drawn with the front strand unbroken; a positive generator
/// has the strand rising to the right in front.
pub fn braid_svg(braid: &ColouredBraid) -> String {
    let (width, height) = braid_size(braid);
    let mut out = String::new();
    open(&mut out, width, height);
    braid_body(&mut out, braid, 0, &Frame { height: height - 20 });
    out.push_str("</svg>\n");
    out
}

/// Source diagram, braid and target diagram side by side.
pub fn cell_svg(cell: &TrackedTwoCell, braid: &ColouredBraid) -> String {
    let (w1, h1) = diagram_size(cell.source());
    let (w2, h2) = braid_size(braid);
    let (w3, h3) = diagram_size(cell.target());
    let height = h1.max(h2).max(h3) + 20;
    let mut out = String::new();
    open(&mut out, w1 + w2 + w3, height);
    let frame = Frame { height: height - 20 };
    diagram_body(&mut out, cell.source(), 0, &frame);
    braid_body(&mut out, braid, w1, &frame);
    diagram_body(&mut out, cell.target(), w1 + w2, &frame);
    text(&mut out, MARGIN, 14, &format!("{} => {}", cell.source(), cell.target()));
    out.push_str("</svg>\n");
    out
}
