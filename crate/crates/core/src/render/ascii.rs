use crate::braids::{ColouredBraid, Sign};
use crate::diagrams::{DiagramWord, Generator};
use crate::twocells::TrackedTwoCell;

/// Rows are built bottom-up and printed top-down.
struct Canvas {
    rows: Vec<Vec<char>>,
}

impl Canvas {
    fn new() -> Self {
        Canvas { rows: Vec::new() }
    }

    fn row(&mut self) -> &mut Vec<char> {
        self.rows.push(Vec::new());
        self.rows.last_mut().expect("just pushed")
    }

    fn finish(self) -> String {
        let mut out = String::new();
        for row in self.rows.iter().rev() {
            let line: String = row.iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

fn put(row: &mut Vec<char>, col: usize, text: &str) {
    for (i, ch) in text.chars().enumerate() {
        if row.len() <= col + i {
            row.resize(col + i + 1, ' ');
        }
        row[col + i] = ch;
    }
}

fn strands(row: &mut Vec<char>, cols: impl IntoIterator<Item = usize>) {
    for c in cols {
        put(row, c, "|");
    }
}

/// Strands are `|`, trains are `*` followed by their colour, merges and
/// splits bend the neighbouring strands with `\` and `/`.
pub fn diagram_ascii(word: &DiagramWord) -> String {
    let label = word.colours().map(|c| c.as_str().chars().count()).max().unwrap_or(0);
    let step = label + 2;
    let col = |j: usize| j * step;
    let mid = |j: usize| j * step + step / 2;
    let mut canvas = Canvas::new();
    let mut width = word.inputs();
    strands(canvas.row(), (0..width).map(col));
    for level in word.levels() {
        let k = level.offset;
        match &level.generator {
            Generator::Train(c) => {
                let row = canvas.row();
                strands(row, (0..width).filter(|&j| j != k).map(col));
                put(row, col(k), &format!("*{c}"));
            }
            Generator::Alpha => {
                let row = canvas.row();
                strands(row, (0..=k).map(col));
                for j in k + 1..width {
                    put(row, mid(j - 1), "\\");
                }
                width -= 1;
            }
            Generator::Beta => {
                let row = canvas.row();
                strands(row, (0..=k).map(col));
                for j in k..width {
                    put(row, mid(j), "/");
                }
                width += 1;
            }
        }
        strands(canvas.row(), (0..width).map(col));
    }
    canvas.finish()
}

/// Each crossing takes three rows; the middle character is the strand in
/// front: `/` for a positive generator, `\` for a negative one. Source
/// colours label the bottom, target colours the top.
pub fn braid_ascii(braid: &ColouredBraid) -> String {
    let n = braid.strands();
    let label = braid.source().letters().iter().map(|c| c.as_str().chars().count()).max().unwrap_or(1);
    let step = (label + 1).max(4);
    let col = |j: usize| j * step;
    let mut canvas = Canvas::new();
    let labels = |row: &mut Vec<char>, word: &crate::colour::ColourWord| {
        for (j, c) in word.letters().iter().enumerate() {
            put(row, col(j), c.as_str());
        }
    };
    labels(canvas.row(), braid.source());
    strands(canvas.row(), (0..n).map(col));
    for letter in braid.word() {
        let (l, r) = (letter.index - 1, letter.index);
        let others = || (0..n).filter(move |&j| j != l && j != r).map(col);
        let row = canvas.row();
        strands(row, others());
        put(row, col(l) + 1, "/");
        put(row, col(r) - 1, "\\");
        let row = canvas.row();
        strands(row, others());
        let front = match letter.sign {
            Sign::Positive => "/",
            Sign::Negative => "\\",
        };
        put(row, col(l) + step / 2, front);
        let row = canvas.row();
        strands(row, others());
        put(row, col(l) + 1, "\\");
        put(row, col(r) - 1, "/");
        strands(canvas.row(), (0..n).map(col));
    }
    labels(canvas.row(), &braid.target());
    if n == 0 {
        return "(empty)\n".to_string();
    }
    canvas.finish()
}

pub fn cell_ascii(cell: &TrackedTwoCell, braid: &ColouredBraid) -> String {
    format!(
        "target: {}\n{}\nbraid: {braid}\n{}\nsource: {}\n{}",
        cell.target(),
        diagram_ascii(cell.target()),
        braid_ascii(braid),
        cell.source(),
        diagram_ascii(cell.source()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braids::Letter;
    use crate::colour::{ColourSet, ColourWord};
    use crate::dsl::parse;

    fn d(src: &str) -> DiagramWord {
        parse(src, &ColourSet::parse("a,b,f").unwrap()).unwrap()
    }

    #[test]
    fn single_strand() {
        assert_eq!(diagram_ascii(&d("id[1]")), "|\n");
    }

    #[test]
    fn serial_trains() {
        assert_eq!(diagram_ascii(&d("a ; b")), "|\n*b\n|\n*a\n|\n");
    }

    #[test]
    fn loop_with_train() {
        let expected = "\
|
|\\
|  |
|  *f
|  |
|/
|
";
        assert_eq!(diagram_ascii(&d("beta ; (id[1] * f) ; alpha")), expected);
    }

    #[test]
    fn crossing() {
        let b = ColouredBraid::new(ColourWord::from_names(&["a", "b"]), vec![Letter::neg(1)]).unwrap();
        let expected = "\
b   a
|   |
 \\ /
  \\
 / \\
|   |
a   b
";
        assert_eq!(braid_ascii(&b), expected);
    }
}
