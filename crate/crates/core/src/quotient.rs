//! Finite quotients `F₂/N` presented by the images of `x`, `y` (and
//! optionally a central `c`) in a symmetric group.
//!
//! The kernel of the evaluation map is the normal subgroup, so every
//! membership question about `N` becomes "does this word evaluate to the
//! identity".

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::dessin::Dessin;
use crate::error::{Error, Result};
use crate::group::{hom_by_images_defined, PermGroup};
use crate::perm::Permutation;
use crate::word::{FreeWord, Letter};

pub const DEFAULT_DERIVED_CAP: u128 = 10_000;
pub const DEFAULT_REGULAR_CAP: u128 = 10_000;

#[derive(Clone)]
pub struct FiniteQuotient {
    x: Permutation,
    y: Permutation,
    c: Option<Permutation>,
    group: PermGroup,
    words: OnceLock<HashMap<Permutation, FreeWord>>,
}

impl FiniteQuotient {
    pub fn new(x: Permutation, y: Permutation, c: Option<Permutation>) -> Result<Self> {
        if x.degree() != y.degree() {
            return Err(Error::DegreeMismatch {
                left: x.degree(),
                right: y.degree(),
            });
        }
        if let Some(c) = &c {
            if c.degree() != x.degree() {
                return Err(Error::DegreeMismatch {
                    left: x.degree(),
                    right: c.degree(),
                });
            }
            if !c.commutes_with(&x) || !c.commutes_with(&y) {
                return Err(Error::CNotCentral);
            }
        }
        let group = PermGroup::new(vec![x.clone(), y.clone()])?;
        Ok(Self {
            x,
            y,
            c,
            group,
            words: OnceLock::new(),
        })
    }

    /// The quotient `F₂/ker ψ` of the homomorphism given by a dessin.
    pub fn from_dessin(d: &Dessin) -> Self {
        Self::new(d.x().clone(), d.y().clone(), None).expect("dessin pairs share a degree")
    }

    /// The quotient by the intersection of the kernels, realized on the
    /// disjoint union of the point sets. Central images are kept only when
    /// every input has one.
    pub fn intersection(parts: &[FiniteQuotient]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Precondition("no quotients to intersect".into()));
        }
        let total: usize = parts.iter().map(|q| q.degree()).sum();
        let mut x = Permutation::identity(total);
        let mut y = Permutation::identity(total);
        let mut c = Some(Permutation::identity(total));
        let mut offset = 0;
        for q in parts {
            x = &x * &q.x.shifted(offset, total);
            y = &y * &q.y.shifted(offset, total);
            c = match (c, &q.c) {
                (Some(acc), Some(qc)) => Some(&acc * &qc.shifted(offset, total)),
                _ => None,
            };
            offset += q.degree();
        }
        Self::new(x, y, c)
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    pub fn img_x(&self) -> &Permutation {
        &self.x
    }

    pub fn img_y(&self) -> &Permutation {
        &self.y
    }

    pub fn img_c(&self) -> Option<&Permutation> {
        self.c.as_ref()
    }

    /// The image group `G_N = ⟨x̄, ȳ⟩`.
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// `|F₂ : N|`.
    pub fn order(&self) -> u128 {
        self.group.order()
    }

    /// The modulus for the unit condition on `2m+1`.
    ///
    /// With a central image this is `lcm(ord x̄, ord ȳ, ord c̄)`. Without one
    /// the order of `x̄ȳ` stands in for `ord c̄`; see
    /// [`FiniteQuotient::n_ord_from_central`].
    pub fn n_ord(&self) -> u64 {
        let third = match &self.c {
            Some(c) => c.order(),
            None => (&self.x * &self.y).order(),
        };
        self.x.order().lcm(&self.y.order()).lcm(&third)
    }

    /// Whether [`FiniteQuotient::n_ord`] came from a central image rather
    /// than the `x̄ȳ` substitute.
    pub fn n_ord_from_central(&self) -> bool {
        self.c.is_some()
    }

    pub fn evaluate(&self, w: &FreeWord) -> Permutation {
        w.evaluate_unchecked(&self.x, &self.y)
    }

    /// Whether `w ∈ N`.
    pub fn kills(&self, w: &FreeWord) -> bool {
        self.evaluate(w).is_identity()
    }

    fn letter_image(&self, l: Letter) -> Permutation {
        match l {
            Letter::X => self.x.clone(),
            Letter::XInv => self.x.inverse(),
            Letter::Y => self.y.clone(),
            Letter::YInv => self.y.inverse(),
        }
    }

    fn word_table(&self) -> &HashMap<Permutation, FreeWord> {
        self.words.get_or_init(|| {
            let images: Vec<(Letter, Permutation)> = Letter::ALL
                .iter()
                .map(|&l| (l, self.letter_image(l)))
                .collect();
            let id = Permutation::identity(self.degree());
            let mut table = HashMap::new();
            table.insert(id.clone(), FreeWord::identity());
            let mut queue = vec![id];
            let mut k = 0;
            while k < queue.len() {
                let g = queue[k].clone();
                let w = table[&g].clone();
                for (l, img) in &images {
                    let h = g.compose_unchecked(img);
                    if !table.contains_key(&h) {
                        table.insert(h.clone(), w.multiply(&FreeWord::from_letters([*l])));
                        queue.push(h);
                    }
                }
                k += 1;
            }
            table
        })
    }

    /// A shortest word evaluating to `g`; ties go to the least word in the
    /// letter order `x < x⁻¹ < y < y⁻¹`.
    pub fn word_for(&self, g: &Permutation) -> Result<FreeWord> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: g.degree(),
            });
        }
        self.word_table().get(g).cloned().ok_or(Error::NotInGroup)
    }

    /// One word per element of `[G_N, G_N]`, each a product of conjugates of
    /// `[x, y]` and hence in the commutator subgroup of `F₂`.
    pub fn derived_coset_words(&self, cap: u128) -> Result<Vec<FreeWord>> {
        let target = self.group.derived_subgroup().order();
        if target > cap {
            return Err(Error::DerivedTooLarge { order: target, cap });
        }
        let mut gens = vec![FreeWord::commutator(&FreeWord::x(), &FreeWord::y())];
        let mut closure = self.word_closure(&gens);
        let conjugators = [FreeWord::x(), FreeWord::y()];
        let mut k = 0;
        while k < gens.len() && (closure.len() as u128) < target {
            for g in &conjugators {
                let conj = g.multiply(&gens[k]).multiply(&g.invert());
                let img = self.evaluate(&conj);
                if !closure.iter().any(|(p, _)| *p == img) {
                    gens.push(conj);
                    closure = self.word_closure(&gens);
                }
            }
            k += 1;
        }
        debug_assert_eq!(closure.len() as u128, target);
        Ok(closure.into_iter().map(|(_, w)| w).collect())
    }

    /// Breadth-first closure of the subgroup generated by the images of
    /// `gens`, recording for each element the first product of generator
    /// words reaching it.
    fn word_closure(&self, gens: &[FreeWord]) -> Vec<(Permutation, FreeWord)> {
        let images: Vec<Permutation> = gens.iter().map(|w| self.evaluate(w)).collect();
        let id = Permutation::identity(self.degree());
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(id.clone(), 0);
        let mut out = vec![(id, FreeWord::identity())];
        let mut k = 0;
        while k < out.len() {
            for (w, img) in gens.iter().zip(&images) {
                let h = out[k].0.compose_unchecked(img);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), out.len());
                    let word = out[k].1.multiply(w);
                    out.push((h, word));
                }
            }
            k += 1;
        }
        out
    }

    /// Whether `x ↦ ȳ, y ↦ x̄` extends to an automorphism of `G_N`.
    pub fn swap_symmetry(&self) -> bool {
        hom_by_images_defined(
            &[self.x.clone(), self.y.clone()],
            &[self.y.clone(), self.x.clone()],
        )
        .expect("matching lengths and degrees")
    }

    /// Whether `x ↦ ȳ, y ↦ z̄c̄, c ↦ c̄` (with `z = y⁻¹x⁻¹`) extends to an
    /// automorphism of `⟨x̄, ȳ, c̄⟩`.
    pub fn rotation_symmetry(&self) -> Result<bool> {
        let c = self.c.as_ref().ok_or(Error::MissingCentralElement)?;
        let zc = &self.evaluate(&FreeWord::z()) * c;
        hom_by_images_defined(
            &[self.x.clone(), self.y.clone(), c.clone()],
            &[self.y.clone(), zc, c.clone()],
        )
    }

    /// Whether `x ↦ ȳ, y ↦ z̄` extends to an automorphism of `G_N`; the
    /// rotation with `c` dropped.
    pub fn free_rotation_symmetry(&self) -> bool {
        let z = self.evaluate(&FreeWord::z());
        hom_by_images_defined(&[self.x.clone(), self.y.clone()], &[self.y.clone(), z])
            .expect("matching lengths and degrees")
    }

    /// Whether two presentations have the same kernel in `F₂` (and agree on
    /// `c` when both carry one).
    pub fn same_kernel(&self, other: &FiniteQuotient) -> bool {
        let mut a = vec![self.x.clone(), self.y.clone()];
        let mut b = vec![other.x.clone(), other.y.clone()];
        if let (Some(c1), Some(c2)) = (&self.c, &other.c) {
            a.push(c1.clone());
            b.push(c2.clone());
        }
        hom_by_images_defined(&a, &b).expect("matching lengths")
            && hom_by_images_defined(&b, &a).expect("matching lengths")
    }

    /// The Galois dessin of `F₂/N` acting on itself by left multiplication.
    pub fn regular_dessin(&self, cap: u128) -> Result<Dessin> {
        let elements = self.group.enumerate_elements(cap)?;
        let index: HashMap<&Permutation, usize> =
            elements.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let act = |gen: &Permutation| -> Result<Permutation> {
            let images = elements.iter().map(|g| index[&(gen * g)]).collect();
            Permutation::from_images(images)
        };
        Dessin::from_pair(&act(&self.x)?, &act(&self.y)?)
    }
}

impl fmt::Debug for FiniteQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteQuotient")
            .field("x", &self.x)
            .field("y", &self.y)
            .field("c", &self.c)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, Some(d)).unwrap()
    }

    fn s3(c: Option<&str>) -> Result<FiniteQuotient> {
        FiniteQuotient::new(p("(1,2)", 3), p("(2,3)", 3), c.map(|c| p(c, 3)))
    }

    fn trivial() -> FiniteQuotient {
        FiniteQuotient::new(Permutation::identity(1), Permutation::identity(1), None).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(s3(None).unwrap().order(), 6);
        assert_eq!(trivial().order(), 1);
        assert!(matches!(s3(Some("(1,2,3)")), Err(Error::CNotCentral)));
        assert!(FiniteQuotient::new(p("(1,2)", 3), p("(1,2)", 2), None).is_err());
    }

    #[test]
    fn n_ord_values() {
        assert_eq!(s3(Some("()")).unwrap().n_ord(), 2);
        assert_eq!(s3(None).unwrap().n_ord(), 6);
        assert_eq!(trivial().n_ord(), 1);
        assert!(!s3(None).unwrap().n_ord_from_central());
    }

    #[test]
    fn words() {
        let q = s3(None).unwrap();
        assert!(q.word_for(&Permutation::identity(3)).unwrap().is_empty());
        assert_eq!(q.word_for(q.img_x()).unwrap(), FreeWord::x());
        for g in q.group().enumerate_elements(10).unwrap() {
            assert_eq!(q.evaluate(&q.word_for(&g).unwrap()), g);
        }
        let outside = FiniteQuotient::new(p("(1,2)", 3), p("(1,2)", 3), None).unwrap();
        assert_eq!(outside.word_for(&p("(1,2,3)", 3)), Err(Error::NotInGroup));
    }

    #[test]
    fn derived_words() {
        let ab = FiniteQuotient::new(p("(1,2,3)", 3), p("(1,3,2)", 3), None).unwrap();
        assert_eq!(
            ab.derived_coset_words(10).unwrap(),
            vec![FreeWord::identity()]
        );
        let q = s3(None).unwrap();
        let words = q.derived_coset_words(10).unwrap();
        assert_eq!(words.len(), 3);
        let mut imgs: Vec<Permutation> = words.iter().map(|w| q.evaluate(w)).collect();
        imgs.sort();
        let mut expected = vec![Permutation::identity(3), p("(1,2,3)", 3), p("(1,3,2)", 3)];
        expected.sort();
        assert_eq!(imgs, expected);
        assert!(words.iter().all(|w| w.exponent_sums() == (0, 0)));
        assert!(matches!(
            q.derived_coset_words(2),
            Err(Error::DerivedTooLarge { .. })
        ));
    }

    #[test]
    fn symmetries() {
        assert!(s3(None).unwrap().swap_symmetry());
        assert!(trivial().swap_symmetry());
        let lopsided = FiniteQuotient::new(p("(1,2)", 4), p("(1,2,3,4)", 4), None).unwrap();
        assert!(!lopsided.swap_symmetry());
        let triv_c = FiniteQuotient::new(
            Permutation::identity(1),
            Permutation::identity(1),
            Some(Permutation::identity(1)),
        )
        .unwrap();
        assert!(triv_c.rotation_symmetry().unwrap());
        assert_eq!(
            s3(None).unwrap().rotation_symmetry(),
            Err(Error::MissingCentralElement)
        );
        // x -> y, y -> z with c trivial would need z to have order 2
        assert!(!s3(Some("()")).unwrap().rotation_symmetry().unwrap());
    }

    #[test]
    fn regular() {
        let d = trivial().regular_dessin(10).unwrap();
        assert_eq!(d.degree(), 1);
        let d = s3(None).unwrap().regular_dessin(10).unwrap();
        assert_eq!(d.degree(), 6);
        assert!(d.is_galois());
        assert_eq!(d.monodromy_order(), 6);
        assert!(matches!(
            s3(None).unwrap().regular_dessin(5),
            Err(Error::OrderExceedsCap { .. })
        ));
    }

    #[test]
    fn kernel_comparison() {
        let q = s3(None).unwrap();
        let relabeled = FiniteQuotient::new(p("(2,3)", 3), p("(1,3)", 3), None).unwrap();
        assert!(q.same_kernel(&relabeled));
        let reg = FiniteQuotient::from_dessin(&q.regular_dessin(10).unwrap());
        assert!(q.same_kernel(&reg));
        let sign = FiniteQuotient::new(p("(1,2)", 2), p("(1,2)", 2), None).unwrap();
        assert!(!q.same_kernel(&sign));
        let both = FiniteQuotient::intersection(&[q.clone(), sign]).unwrap();
        assert!(both.same_kernel(&q));
    }
}
