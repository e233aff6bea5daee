//! Orbit closure, subordination and invariant tables.

use std::collections::{BTreeSet, VecDeque};

use crate::dessin::{Dessin, Passport};
use crate::error::Result;
use crate::group::hom_by_images_defined;
use crate::quotient::FiniteQuotient;
use crate::shadow::{act, GTShadow, RawShadow};

/// Invariants of a single dessin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub degree: usize,
    pub passport: Passport,
    pub genus: u64,
    pub monodromy_order: u128,
    pub transitive: bool,
    pub galois: bool,
    pub abelian: bool,
}

impl InvariantTable {
    /// The columns that every member of a shadow orbit shares.
    pub fn orbit_key(&self) -> (usize, &Passport, u64, u128, bool) {
        (
            self.degree,
            &self.passport,
            self.genus,
            self.monodromy_order,
            self.galois,
        )
    }
}

pub fn analyze(d: &Dessin) -> InvariantTable {
    let group = d.monodromy_group();
    let order = group.order();
    InvariantTable {
        degree: d.degree(),
        passport: d.passport(),
        // a transitive pair always has an even Euler defect
        genus: d.genus().expect("valid dessin"),
        monodromy_order: order,
        transitive: true,
        galois: order == d.degree() as u128,
        abelian: group.is_abelian(),
    }
}

/// Whether `x̄ ↦ c₁, ȳ ↦ c₂` extends to a homomorphism out of the
/// quotient group, i.e. whether the quotient's kernel lies in the kernel
/// of the dessin's monodromy map.
pub fn subordinate(d: &Dessin, n: &FiniteQuotient) -> bool {
    hom_by_images_defined(
        &[n.img_x().clone(), n.img_y().clone()],
        &[d.x().clone(), d.y().clone()],
    )
    .expect("two images on each side")
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub base: Dessin,
    /// Canonical forms, sorted.
    pub members: Vec<Dessin>,
    pub shadows: Vec<RawShadow>,
    /// One row per entry of `members`.
    pub invariants: Vec<InvariantTable>,
}

impl OrbitReport {
    /// Upper bound on the degree of the field of moduli of the base dessin.
    pub fn moduli_bound(&self) -> usize {
        self.members.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, d: &Dessin) -> bool {
        self.members.binary_search(d).is_ok()
    }

    /// Whether degree, passport, genus, monodromy order and Galois flag
    /// agree across all members.
    pub fn invariants_constant(&self) -> bool {
        self.invariants
            .windows(2)
            .all(|w| w[0].orbit_key() == w[1].orbit_key())
    }
}

/// Closure of `{d}` under repeated application of `shadows`.
pub fn orbit(d: &Dessin, shadows: &[RawShadow]) -> Result<OrbitReport> {
    let mut seen: BTreeSet<Dessin> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(d.clone());
    queue.push_back(d.clone());
    while let Some(current) = queue.pop_front() {
        for s in shadows {
            let next = act(s, &current)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let members: Vec<Dessin> = seen.into_iter().collect();
    let invariants = members.iter().map(analyze).collect();
    Ok(OrbitReport {
        base: d.clone(),
        members,
        shadows: shadows.to_vec(),
        invariants,
    })
}

pub fn orbit_of_shadows(d: &Dessin, shadows: &[GTShadow]) -> Result<OrbitReport> {
    let raws: Vec<RawShadow> = shadows.iter().map(|s| s.raw().clone()).collect();
    orbit(d, &raws)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::word::FreeWord;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, Some(d)).unwrap()
    }

    fn dessin(a: &str, b: &str, d: usize) -> Dessin {
        Dessin::from_pair(&p(a, d), &p(b, d)).unwrap()
    }

    #[test]
    fn analyze_examples() {
        let t = analyze(&dessin("(1,4,5,2)", "(2,3,5,4)", 5));
        assert_eq!(t.degree, 5);
        assert_eq!(t.passport.to_string(), "((4,1),(4,1),(2,2,1))");
        assert_eq!(t.genus, 0);
        let one = analyze(&dessin("()", "()", 1));
        assert_eq!(one.degree, 1);
        assert_eq!(one.genus, 0);
        assert_eq!(one.monodromy_order, 1);
        assert!(one.galois && one.abelian && one.transitive);
    }

    #[test]
    fn subordination_examples() {
        let s3 = FiniteQuotient::new(p("(1,2)", 3), p("(2,3)", 3), None).unwrap();
        assert!(subordinate(&dessin("(1,2)", "(1,2)", 2), &s3));
        assert!(!subordinate(&dessin("(1,2,3,4)", "(1,2)", 4), &s3));
        assert!(subordinate(&s3.regular_dessin(100).unwrap(), &s3));
    }

    #[test]
    fn degree_six_orbit() {
        let d = dessin("(1,4,5,2)(3,6)", "(1,6,3,2)(4,5)", 6);
        let shadows = [
            RawShadow::new(1, "y x y x^2 y^2 x^-3 y^-4".parse().unwrap()),
            RawShadow::new(3, FreeWord::identity()),
        ];
        let r = orbit(&d, &shadows).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&d));
        assert!(r.contains(&dessin("(1,4,5,2)(3,6)", "(1,2,5,6)(3,4)", 6)));
        assert!(r.invariants_constant());
        assert_eq!(r.moduli_bound(), 2);
    }
}
