//! Finite permutation groups backed by a deterministic Schreier–Sims
//! stabilizer chain.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and cached.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    // transversal[β] maps the base point to β
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        Level {
            base_point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base_point];
        let mut k = 0;
        while k < self.orbit.len() {
            let beta = self.orbit[k];
            for s in &self.gens {
                let gamma = s.apply(beta);
                if self.transversal[gamma].is_none() {
                    let u = self.transversal[beta]
                        .as_ref()
                        .expect("orbit point has a transversal");
                    self.transversal[gamma] = Some(s.compose_unchecked(u));
                    self.orbit.push(gamma);
                }
            }
            k += 1;
        }
    }
}

#[derive(Clone, Debug)]
struct StabChain {
    levels: Vec<Level>,
    strong: Vec<Permutation>,
}

impl StabChain {
    fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain {
            levels: Vec::new(),
            strong: Vec::new(),
        };
        for g in generators {
            if g.is_identity() || chain.strong.contains(g) {
                continue;
            }
            chain.strong.push(g.clone());
            if chain
                .levels
                .iter()
                .all(|l| g.apply(l.base_point) == l.base_point)
            {
                chain.levels.push(Level::new(first_moved(g), degree));
            }
        }
        for l in 0..chain.levels.len() {
            chain.refresh_level(l, degree);
        }

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match chain.find_missing(lvl) {
                None => i -= 1,
                Some((h, j)) => {
                    chain.strong.push(h.clone());
                    if j == chain.levels.len() {
                        chain.levels.push(Level::new(first_moved(&h), degree));
                    }
                    for l in 0..=j {
                        chain.refresh_level(l, degree);
                    }
                    i = j as isize;
                }
            }
        }
        chain
    }

    fn refresh_level(&mut self, l: usize, degree: usize) {
        let fixed: Vec<usize> = self.levels[..l].iter().map(|lv| lv.base_point).collect();
        self.levels[l].gens = self
            .strong
            .iter()
            .filter(|s| fixed.iter().all(|&b| s.apply(b) == b))
            .cloned()
            .collect();
        self.levels[l].rebuild_orbit(degree);
    }

    /// Looks for a Schreier generator at level `l` that does not sift
    /// through the levels below it. Returns the residue and the level where
    /// sifting stopped.
    fn find_missing(&self, l: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[l];
        for &beta in &level.orbit {
            let u_beta = level.transversal[beta].as_ref().unwrap();
            for s in &level.gens {
                let gamma = s.apply(beta);
                let u_gamma = level.transversal[gamma].as_ref().unwrap();
                let schreier = u_gamma
                    .inverse()
                    .compose_unchecked(&s.compose_unchecked(u_beta));
                if schreier.is_identity() {
                    continue;
                }
                let (h, j) = self.strip(schreier, l + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base_point);
            match &level.transversal[beta] {
                None => return (g, l),
                Some(u) => g = u.inverse().compose_unchecked(&g),
            }
        }
        (g, self.levels.len())
    }

    fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }
}

fn first_moved(g: &Permutation) -> usize {
    (0..g.degree())
        .find(|&i| g.apply(i) != i)
        .expect("non-identity permutation")
}

impl PermGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => return Err(Error::InvalidPermutation("empty generator list".into())),
        };
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        Ok(Self {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            generators: vec![Permutation::identity(degree)],
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    /// Base points of the stabilizer chain (0-indexed).
    pub fn base(&self) -> Vec<usize> {
        self.chain().levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.chain().strong
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let chain = self.chain();
        let (h, j) = chain.strip(p.clone(), 0);
        Ok(j == chain.levels.len() && h.is_identity())
    }

    /// Orbit of a 0-indexed point, in discovery order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            for g in &self.generators {
                let q = g.apply(orbit[k]);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
            k += 1;
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    /// The commutator subgroup, as the normal closure of the generator
    /// commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = commutator(a, b);
                if !c.is_identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        if gens.is_empty() {
            return PermGroup::trivial(self.degree);
        }
        let mut sub = PermGroup::new(gens.clone()).expect("nonempty, common degree");
        let mut k = 0;
        while k < gens.len() {
            let h = gens[k].clone();
            for g in &self.generators {
                let conj = h.conjugate_by(g).expect("common degree");
                if !sub.contains(&conj).expect("common degree") {
                    gens.push(conj);
                    sub = PermGroup::new(gens.clone()).expect("nonempty, common degree");
                }
            }
            k += 1;
        }
        sub
    }

    /// All elements, breadth first from the identity; within each layer
    /// elements are sorted by their image arrays.
    pub fn enumerate_elements(&self, cap: u128) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > cap {
            return Err(Error::OrderExceedsCap { order, cap });
        }
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::with_capacity(order as usize);
        seen.insert(id.clone());
        let mut out = vec![id.clone()];
        let mut layer = vec![id];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for g in &layer {
                for s in &self.generators {
                    let h = g.compose_unchecked(s);
                    if seen.insert(h.clone()) {
                        next.push(h);
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        debug_assert_eq!(out.len() as u128, order);
        Ok(out)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// `a⁻¹ b⁻¹ a b`.
pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    let ab = a.compose_unchecked(b);
    let ba = b.compose_unchecked(a);
    ba.inverse().compose_unchecked(&ab)
}

/// Whether `src[i] ↦ dst[i]` extends to a homomorphism `⟨src⟩ → ⟨dst⟩`.
///
/// The pairs `(src[i], dst[i])` generate a subgroup of `⟨src⟩ × ⟨dst⟩`
/// acting on the disjoint union of both point sets; it is the graph of a
/// homomorphism exactly when its projection to `⟨src⟩` is injective, i.e.
/// when both groups have the same order.
pub fn hom_by_images_defined(src: &[Permutation], dst: &[Permutation]) -> Result<bool> {
    if src.len() != dst.len() {
        return Err(Error::LengthMismatch {
            left: src.len(),
            right: dst.len(),
        });
    }
    if src.is_empty() {
        return Ok(true);
    }
    let source = PermGroup::new(src.to_vec())?;
    let d1 = source.degree();
    let d2 = dst[0].degree();
    if let Some(bad) = dst.iter().find(|g| g.degree() != d2) {
        return Err(Error::DegreeMismatch {
            left: d2,
            right: bad.degree(),
        });
    }
    let diagonal: Vec<Permutation> = src
        .iter()
        .zip(dst)
        .map(|(s, t)| {
            s.shifted(0, d1 + d2)
                .compose_unchecked(&t.shifted(d1, d1 + d2))
        })
        .collect();
    let graph = PermGroup::new(diagonal)?;
    Ok(graph.order() == source.order())
}
