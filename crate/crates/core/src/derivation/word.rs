use std::fmt;

use crate::algebra::AlgebraElement;
use crate::group::{GroupElement, GroupParams};

use super::GeneratorImages;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn image(self, params: GroupParams) -> GroupElement {
        match self {
            Letter::A => params.a(),
            Letter::AInv => params.element(-1, 0),
            Letter::B => params.b(),
            Letter::BInv => params.element(0, -1),
        }
    }
}

/// A word in `a, a^-1, b, b^-1`, not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(pub Vec<Letter>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        FreeWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn power(letters: &[Letter], k: usize) -> FreeWord {
        FreeWord(
            letters
                .iter()
                .copied()
                .cycle()
                .take(letters.len() * k)
                .collect(),
        )
    }

    /// `a^i b^j` spelled with positive letters only.
    pub fn positive(i: usize, j: usize) -> FreeWord {
        FreeWord(
            std::iter::repeat(Letter::A)
                .take(i)
                .chain(std::iter::repeat(Letter::B).take(j))
                .collect(),
        )
    }

    /// Image of the word in `V_8n`.
    pub fn evaluate(&self, params: GroupParams) -> GroupElement {
        self.0.iter().fold(GroupElement::IDENTITY, |acc, l| {
            params.multiply(acc, l.image(params))
        })
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::A => "a",
                Letter::AInv => "A",
                Letter::B => "b",
                Letter::BInv => "B",
            })?;
        }
        Ok(())
    }
}

/// Lift of generator images to the free group:
///
/// ```text
/// f~(x)       = f(x)                 x in {a, b}
/// f~(x^-1)    = -x^-1 f(x) x^-1
/// f~(x1...xk) = Σ φ(x1...x(i-1)) f~(xi) φ(x(i+1)...xk)
/// ```
///
/// where `φ` maps words onto `V_8n`. The empty word maps to zero.
pub fn free_extension(f: &GeneratorImages, w: &FreeWord) -> AlgebraElement {
    let params = f.params();
    let letters = w.letters();
    let mut suffix = vec![GroupElement::IDENTITY; letters.len() + 1];
    for k in (0..letters.len()).rev() {
        suffix[k] = params.multiply(letters[k].image(params), suffix[k + 1]);
    }
    let mut out = AlgebraElement::zero(params, f.field());
    let mut prefix = GroupElement::IDENTITY;
    for (k, &letter) in letters.iter().enumerate() {
        let local = letter_image(f, letter);
        if !local.is_zero() {
            let term = local.left_mul_group(prefix).right_mul_group(suffix[k + 1]);
            out = &out + &term;
        }
        prefix = params.multiply(prefix, letter.image(params));
    }
    out
}

fn letter_image(f: &GeneratorImages, letter: Letter) -> AlgebraElement {
    let params = f.params();
    match letter {
        Letter::A => f.f_a.clone(),
        Letter::B => f.f_b.clone(),
        Letter::AInv | Letter::BInv => {
            let base = if letter == Letter::AInv {
                &f.f_a
            } else {
                &f.f_b
            };
            let inv = letter.image(params);
            -&base.left_mul_group(inv).right_mul_group(inv)
        }
    }
}
