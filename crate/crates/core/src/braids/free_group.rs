//! Reduced words in a free group and the Artin action of braid generators.

/// A freely reduced word over generators `x_1, x_2, ...`; a letter `k > 0`
/// stands for `x_k` and `-k` for its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeGroupWord(Vec<i32>);

impl FreeGroupWord {
    pub fn identity() -> Self {
        FreeGroupWord(Vec::new())
    }

    pub fn generator(k: i32) -> Self {
        debug_assert!(k != 0);
        FreeGroupWord(vec![k])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut w = FreeGroupWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, letter: i32) {
        debug_assert!(letter != 0);
        if self.0.last() == Some(&-letter) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Substitutes `images[k - 1]` for every `x_k`.
    pub fn substitute(&self, images: &[FreeGroupWord]) -> FreeGroupWord {
        let mut w = FreeGroupWord::identity();
        for &l in &self.0 {
            let image = &images[(l.unsigned_abs() - 1) as usize];
            if l > 0 {
                for &m in &image.0 {
                    w.push(m);
                }
            } else {
                for &m in image.0.iter().rev() {
                    w.push(-m);
                }
            }
        }
        w
    }
}

/// Images of `x_1 .. x_n` under the automorphism of a single braid letter
/// `sigma_i^sign` (`i` is 1-based):
///
/// * `sigma_i`:    `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i`
/// * `sigma_i^-1`: `x_i -> x_{i+1}`, `x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}`
pub(crate) fn letter_images(n: usize, index: usize, positive: bool) -> Vec<FreeGroupWord> {
    let mut images: Vec<FreeGroupWord> = (1..=n as i32).map(FreeGroupWord::generator).collect();
    let (i, j) = (index as i32, index as i32 + 1);
    if positive {
        images[index - 1] = FreeGroupWord::from_letters([i, j, -i]);
        images[index] = FreeGroupWord::generator(i);
    } else {
        images[index - 1] = FreeGroupWord::generator(j);
        images[index] = FreeGroupWord::from_letters([-j, i, j]);
    }
    images
}
