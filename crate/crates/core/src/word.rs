//! Freely reduced words in the free group on `x` and `y`.
//!
//! Two text forms are accepted: the compact alphabet `x y X Y` (uppercase is
//! the inverse letter) and caret form such as `y x y x^2 y^2 x^-3 y^-4`.
//! Both may be mixed; whitespace is ignored and `1` denotes the empty word.
//! Words print in compact form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Generator letters, ordered `x < x⁻¹ < y < y⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    XInv,
    Y,
    YInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::X, Letter::XInv, Letter::Y, Letter::YInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::X => Letter::XInv,
            Letter::XInv => Letter::X,
            Letter::Y => Letter::YInv,
            Letter::YInv => Letter::Y,
        }
    }

    fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::XInv => 'X',
            Letter::Y => 'y',
            Letter::YInv => 'Y',
        }
    }
}

/// A freely reduced word; the empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn x() -> Self {
        Self {
            letters: vec![Letter::X],
        }
    }

    pub fn y() -> Self {
        Self {
            letters: vec![Letter::Y],
        }
    }

    /// `y⁻¹x⁻¹`, the third puncture loop.
    pub fn z() -> Self {
        Self {
            letters: vec![Letter::YInv, Letter::XInv],
        }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Self::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, r: i64) -> FreeWord {
        let base = if r < 0 { self.invert() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..r.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// `u⁻¹ v⁻¹ u v`.
    pub fn commutator(u: &FreeWord, v: &FreeWord) -> FreeWord {
        u.invert().multiply(&v.invert()).multiply(u).multiply(v)
    }

    /// `self(a, b)`: replaces `x` by `a` and `y` by `b`.
    pub fn substitute(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        let (a_inv, b_inv) = (a.invert(), b.invert());
        let mut out = FreeWord::identity();
        for &l in &self.letters {
            let image = match l {
                Letter::X => a,
                Letter::XInv => &a_inv,
                Letter::Y => b,
                Letter::YInv => &b_inv,
            };
            for &m in &image.letters {
                out.push(m);
            }
        }
        out
    }

    /// Image under `x ↦ px`, `y ↦ py`.
    pub fn evaluate(&self, px: &Permutation, py: &Permutation) -> Result<Permutation> {
        if px.degree() != py.degree() {
            return Err(Error::DegreeMismatch {
                left: px.degree(),
                right: py.degree(),
            });
        }
        Ok(self.evaluate_unchecked(px, py))
    }

    pub(crate) fn evaluate_unchecked(&self, px: &Permutation, py: &Permutation) -> Permutation {
        let (qx, qy) = (px.inverse(), py.inverse());
        let d = px.degree();
        // the rightmost letter acts first
        let mut images: Vec<usize> = (0..d).collect();
        for &l in self.letters.iter().rev() {
            let g = match l {
                Letter::X => px,
                Letter::XInv => &qx,
                Letter::Y => py,
                Letter::YInv => &qy,
            };
            for im in images.iter_mut() {
                *im = g.apply(*im);
            }
        }
        Permutation::from_images(images).expect("product of permutations")
    }

    /// Net exponents of `x` and `y`.
    pub fn exponent_sums(&self) -> (i64, i64) {
        self.letters.iter().fold((0, 0), |(sx, sy), l| match l {
            Letter::X => (sx + 1, sy),
            Letter::XInv => (sx - 1, sy),
            Letter::Y => (sx, sy + 1),
            Letter::YInv => (sx, sy - 1),
        })
    }

    /// Caret form, e.g. `y x y x^2 y^2 x^-3 y^-4`.
    pub fn to_caret_string(&self) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut k = 0;
        while k < self.letters.len() {
            let l = self.letters[k];
            let mut run = 1;
            while k + run < self.letters.len() && self.letters[k + run] == l {
                run += 1;
            }
            let (name, sign) = match l {
                Letter::X => ('x', 1),
                Letter::XInv => ('x', -1),
                Letter::Y => ('y', 1),
                Letter::YInv => ('y', -1),
            };
            let e = sign * run as i64;
            parts.push(if e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            });
            k += run;
        }
        parts.join(" ")
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() || chars == ['1'] {
            return Ok(FreeWord::identity());
        }
        let mut out = FreeWord::identity();
        let mut k = 0;
        while k < chars.len() {
            let letter = match chars[k] {
                'x' => Letter::X,
                'X' => Letter::XInv,
                'y' => Letter::Y,
                'Y' => Letter::YInv,
                c => return Err(Error::Parse(format!("unexpected {c:?} in word {text:?}"))),
            };
            k += 1;
            let mut exp: i64 = 1;
            if chars.get(k) == Some(&'^') {
                k += 1;
                let braced = chars.get(k) == Some(&'{');
                if braced {
                    k += 1;
                }
                let start = k;
                if matches!(chars.get(k), Some('-') | Some('+')) {
                    k += 1;
                }
                while chars.get(k).is_some_and(|c| c.is_ascii_digit()) {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().collect();
                exp = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {digits:?} in {text:?}")))?;
                if braced {
                    if chars.get(k) != Some(&'}') {
                        return Err(Error::Parse(format!("unclosed brace in {text:?}")));
                    }
                    k += 1;
                }
            }
            let l = if exp < 0 { letter.inverse() } else { letter };
            for _ in 0..exp.unsigned_abs() {
                out.push(l);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}
