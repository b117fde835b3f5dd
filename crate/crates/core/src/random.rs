//! Seeded random instances for the property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braids::{ColouredBraid, Letter, Sign};
use crate::colour::{Colour, ColourWord};
use crate::diagrams::{DiagramWord, Generator, Level};

pub type SuiteRng = ChaCha8Rng;

/// An independent stream for instance `index` of a run seeded by `seed`,
/// so results do not depend on evaluation order.
pub fn instance_rng(seed: u64, index: usize) -> SuiteRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn random_word(rng: &mut impl Rng, colours: &[Colour], min: usize, max: usize) -> ColourWord {
    let len = rng.gen_range(min..=max);
    (0..len)
        .map(|_| colours.choose(rng).expect("colours").clone())
        .collect()
}

pub const MAX_WIDTH: usize = 4;

/// A random level word on `inputs` strands with at most `max_levels`
/// levels and widths at most [`MAX_WIDTH`].
pub fn random_diagram_from(
    rng: &mut impl Rng,
    colours: &[Colour],
    inputs: usize,
    max_levels: usize,
) -> DiagramWord {
    let count = rng.gen_range(0..=max_levels);
    let mut width = inputs;
    let mut levels = Vec::with_capacity(count);
    for _ in 0..count {
        let mut options = vec![0u8];
        if width >= 2 {
            options.push(1);
        }
        if width < MAX_WIDTH.max(inputs) {
            options.push(2);
        }
        let generator = match options.choose(rng).expect("options") {
            0 => Generator::Train(colours.choose(rng).expect("colours").clone()),
            1 => Generator::Alpha,
            _ => Generator::Beta,
        };
        let offset = rng.gen_range(0..=width - generator.arity_in());
        width = width + generator.arity_out() - generator.arity_in();
        levels.push(Level::new(offset, generator));
    }
    DiagramWord::new(inputs, levels).expect("random levels respect widths")
}

pub fn random_diagram(rng: &mut impl Rng, colours: &[Colour], max_levels: usize) -> DiagramWord {
    let inputs = rng.gen_range(1..=3);
    random_diagram_from(rng, colours, inputs, max_levels)
}

pub fn random_letters(rng: &mut impl Rng, strands: usize, len: usize) -> Vec<Letter> {
    if strands < 2 {
        return Vec::new();
    }
    (0..len)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            Letter::new(rng.gen_range(1..strands), sign)
        })
        .collect()
}

pub fn random_braid(rng: &mut impl Rng, source: ColourWord, len: usize) -> ColouredBraid {
    let word = random_letters(rng, source.len(), len);
    ColouredBraid::new(source, word).expect("indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let colours = vec![Colour::new("a").unwrap(), Colour::new("b").unwrap()];
        let d1 = random_diagram(&mut instance_rng(7, 3), &colours, 8);
        let d2 = random_diagram(&mut instance_rng(7, 3), &colours, 8);
        assert_eq!(d1, d2);
        let words: Vec<_> = (0..20)
            .map(|i| random_word(&mut instance_rng(7, i), &colours, 1, 4))
            .collect();
        assert!(words.iter().any(|w| w != &words[0]));
    }

    #[test]
    fn random_diagrams_are_valid() {
        let colours = vec![Colour::new("a").unwrap()];
        for i in 0..200 {
            let d = random_diagram(&mut instance_rng(1, i), &colours, 12);
            assert!(d.len() <= 12);
            assert!(d.max_width() <= MAX_WIDTH);
        }
    }
}
