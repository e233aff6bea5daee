//! Child's drawings as conjugacy classes of transitive permutation pairs.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Partition, Permutation};

/// A dessin, stored as the canonical representative of its conjugacy class
/// of pairs `(c₁, c₂)`.
///
/// Ordering and equality are those of the canonical pair, so two values are
/// equal exactly when the input pairs were simultaneously conjugate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dessin {
    x: Permutation,
    y: Permutation,
}

/// Cycle types of `(c₁, c₂, c₃)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Passport(pub [Partition; 3]);

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// `c₂⁻¹ c₁⁻¹`, the entry closing the triple `c₁ c₂ c₃ = 1`.
pub fn third_entry(c1: &Permutation, c2: &Permutation) -> Result<Permutation> {
    c2.inverse().compose(&c1.inverse())
}

/// Whether `⟨c₁, c₂⟩` acts transitively.
pub fn pair_is_transitive(c1: &Permutation, c2: &Permutation) -> bool {
    let d = c1.degree();
    let mut seen = vec![false; d];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(p) = stack.pop() {
        for q in [c1.apply(p), c2.apply(p)] {
            if !seen[q] {
                seen[q] = true;
                count += 1;
                stack.push(q);
            }
        }
    }
    count == d
}

/// Relabels points in order of first discovery by a breadth-first sweep from
/// `start`, applying `c₁` then `c₂` to each dequeued point. `None` when some
/// point is unreachable.
fn relabel_from(
    c1: &Permutation,
    c2: &Permutation,
    start: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let d = c1.degree();
    let mut label = vec![usize::MAX; d];
    let mut order = Vec::with_capacity(d);
    label[start] = 0;
    order.push(start);
    let mut k = 0;
    while k < order.len() {
        let p = order[k];
        for q in [c1.apply(p), c2.apply(p)] {
            if label[q] == usize::MAX {
                label[q] = order.len();
                order.push(q);
            }
        }
        k += 1;
    }
    if order.len() < d {
        return None;
    }
    let mut a = vec![0; d];
    let mut b = vec![0; d];
    for p in 0..d {
        a[label[p]] = label[c1.apply(p)];
        b[label[p]] = label[c2.apply(p)];
    }
    Some((a, b))
}

/// Canonical representative of the simultaneous conjugacy class of a
/// transitive pair: the lexicographically least relabeling over all start
/// points.
pub fn canonical_form(c1: &Permutation, c2: &Permutation) -> Result<(Permutation, Permutation)> {
    if c1.degree() != c2.degree() {
        return Err(Error::DegreeMismatch {
            left: c1.degree(),
            right: c2.degree(),
        });
    }
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for start in 0..c1.degree() {
        let cand = relabel_from(c1, c2, start).ok_or(Error::NotTransitive)?;
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    let (a, b) = best.expect("degree is positive");
    Ok((Permutation::from_images(a)?, Permutation::from_images(b)?))
}

impl Dessin {
    pub fn from_pair(c1: &Permutation, c2: &Permutation) -> Result<Self> {
        let (x, y) = canonical_form(c1, c2)?;
        Ok(Dessin { x, y })
    }

    /// Accepts a permutation triple, rejecting it unless the third entry is
    /// `c₂⁻¹ c₁⁻¹`.
    pub fn from_triple(c1: &Permutation, c2: &Permutation, c3: &Permutation) -> Result<Self> {
        let expected = third_entry(c1, c2)?;
        if &expected != c3 {
            return Err(Error::TripleMismatch {
                expected: expected.to_string(),
            });
        }
        Self::from_pair(c1, c2)
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    /// Canonical `c₁`.
    pub fn x(&self) -> &Permutation {
        &self.x
    }

    /// Canonical `c₂`.
    pub fn y(&self) -> &Permutation {
        &self.y
    }

    pub fn triple(&self) -> (Permutation, Permutation, Permutation) {
        let z = third_entry(&self.x, &self.y).expect("equal degrees");
        (self.x.clone(), self.y.clone(), z)
    }

    pub fn passport(&self) -> Passport {
        let (a, b, c) = self.triple();
        Passport([a.cycle_type(), b.cycle_type(), c.cycle_type()])
    }

    /// Genus of the covering, from `2 - 2g = d·(2 - 3) + Σ #cycles`.
    pub fn genus(&self) -> Result<u64> {
        let (a, b, c) = self.triple();
        let cycles = (a.cycle_count() + b.cycle_count() + c.cycle_count()) as i64;
        let defect = self.degree() as i64 + 2 - cycles;
        if defect < 0 || defect % 2 != 0 {
            return Err(Error::OddEulerDefect(defect));
        }
        Ok((defect / 2) as u64)
    }

    pub fn monodromy_group(&self) -> PermGroup {
        PermGroup::new(vec![self.x.clone(), self.y.clone()]).expect("equal degrees")
    }

    pub fn monodromy_order(&self) -> u128 {
        self.monodromy_group().order()
    }

    pub fn is_galois(&self) -> bool {
        self.monodromy_order() == self.degree() as u128
    }

    pub fn is_abelian(&self) -> bool {
        self.x.commutes_with(&self.y)
    }

    /// Each of `c₁`, `c₂` is a product of disjoint cycles of one length.
    pub fn abelian_uniform_cycles(&self) -> Result<bool> {
        if !self.is_abelian() {
            return Err(Error::NotAbelian);
        }
        Ok(self.x.cycle_type().is_uniform() && self.y.cycle_type().is_uniform())
    }

    /// For an abelian dessin whose `c₁` is a full cycle: `c₂ ∈ ⟨c₁⟩`.
    pub fn abelian_cycle_containment(&self) -> Result<bool> {
        if !self.is_abelian() {
            return Err(Error::NotAbelian);
        }
        if self.x.cycle_type().len() != 1 {
            return Err(Error::Precondition(format!(
                "c1 = {} is not a {}-cycle",
                self.x,
                self.degree()
            )));
        }
        PermGroup::new(vec![self.x.clone()])?.contains(&self.y)
    }

    /// For abelian dessins and `r` coprime to the orders of `c₁` and `c₂`:
    /// whether `(c₁ʳ, c₂ʳ)` represents the same dessin.
    pub fn power_pair_conjugate(&self, r: i64) -> Result<bool> {
        if !self.is_abelian() {
            return Err(Error::NotAbelian);
        }
        for g in [&self.x, &self.y] {
            if r.gcd(&(g.order() as i64)) != 1 {
                return Err(Error::Precondition(format!(
                    "{r} is not coprime to the order {} of {g}",
                    g.order()
                )));
            }
        }
        Ok(&Dessin::from_pair(&self.x.power(r), &self.y.power(r))? == self)
    }
}

impl fmt::Display for Dessin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.x, self.y)
    }
}

impl fmt::Debug for Dessin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dessin(deg {}: {}, {})", self.degree(), self.x, self.y)
    }
}
