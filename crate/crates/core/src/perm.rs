//! Permutations of `{1..d}` and integer partitions.
//!
//! Points are stored 0-indexed; every textual form (parsing and display) is
//! 1-indexed. Products follow function composition: `p * q` applies `q`
//! first, then `p`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection of `{0..degree}`; `images[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-indexed images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        if d == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "images {:?} are not a bijection of 1..{}",
                    images.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    d
                )));
            }
            seen[i] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    /// Builds a permutation from 1-indexed images, as in `[4,1,6,5,2,3]`.
    pub fn from_one_indexed(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("points are 1-indexed".into()));
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// Builds a permutation of the given degree from 1-indexed disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} outside 1..{degree}"
                    )));
                }
                if touched[pt - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} appears more than once"
                    )));
                }
                touched[pt - 1] = true;
            }
            for (k, &pt) in cycle.iter().enumerate() {
                images[pt - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses either cycle notation or a bracketed image array.
    ///
    /// Cycle notation needs `degree` unless the largest moved point is meant
    /// to be the degree. An image array fixes its own degree; a supplied
    /// degree must then agree with it.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated image array {text:?}")))?;
            let images = parse_points(inner, text)?;
            let p = Self::from_one_indexed(&images)?;
            if let Some(d) = degree {
                if d != p.degree() {
                    return Err(Error::DegreeMismatch {
                        left: d,
                        right: p.degree(),
                    });
                }
            }
            return Ok(p);
        }
        let mut cycles = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unterminated cycle in {text:?}")))?;
            let pts = parse_points(&body[..close], text)?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = &body[close + 1..];
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let d = match degree {
            Some(d) => d,
            None if max > 0 => max,
            None => {
                return Err(Error::Parse(format!("cannot infer the degree of {text:?}")));
            }
        };
        Self::from_cycles(d, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-indexed point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 0-indexed images.
    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&i| self.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `self^r`; negative exponents go through the inverse.
    pub fn power(&self, r: i64) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for cycle in self.cycles_with_fixed() {
            let len = cycle.len() as i64;
            let shift = r.rem_euclid(len) as usize;
            for (k, &pt) in cycle.iter().enumerate() {
                images[pt] = cycle[(k + shift) % cycle.len()] as u32;
            }
        }
        Permutation { images }
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &Permutation) -> Result<Permutation> {
        if self.degree() != h.degree() {
            return Err(Error::DegreeMismatch {
                left: h.degree(),
                right: self.degree(),
            });
        }
        // h p h^-1 sends h(i) to h(p(i))
        let mut images = vec![0u32; self.degree()];
        for i in 0..self.degree() {
            images[h.apply(i)] = h.images[self.apply(i)];
        }
        Ok(Permutation { images })
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && (0..self.degree()).all(|i| self.apply(other.apply(i)) == other.apply(self.apply(i)))
    }

    /// All cycles, fixed points included, each starting at its least point.
    pub fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles_with_fixed().len()
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles_with_fixed().iter().map(Vec::len).collect())
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles_with_fixed()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// 1-indexed image array, e.g. `[4,1,6,5,2,3]`.
    pub fn to_image_string(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Places `self` on points `offset..offset+degree` of a permutation of
    /// degree `total`, fixing everything else.
    pub(crate) fn shifted(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &p) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + p;
        }
        Permutation { images }
    }
}

fn parse_points(body: &str, text: &str) -> Result<Vec<usize>> {
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad point {t:?} in {text:?}")))
        })
        .collect()
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a degree mismatch; use [`Permutation::compose`] to get an error instead.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            rhs.degree(),
            "degree mismatch in permutation product"
        );
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles_with_fixed() {
            if cycle.len() < 2 {
                continue;
            }
            any = true;
            let pts: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [deg {}]", self.degree())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

/// A partition of a positive integer, parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_uniform(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
