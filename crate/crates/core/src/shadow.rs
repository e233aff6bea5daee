//! GT-shadows `(m, f)` over a finite quotient of `F₂`: verification, action
//! on dessins, composition and enumeration.
//!
//! Verification works at the level of `F₂` (and the central element when the
//! quotient carries one) through the two simplified hexagon relations
//!
//! ```text
//!   H-I:   f(x,y) f(y,x)                          ∈ N
//!   H-II:  x^m f(z,x) z^m f(y,z) y^m f(x,y)       ∈ N,   z = y⁻¹x⁻¹
//! ```
//!
//! which are equivalent to the braid-level hexagons for `f` in the
//! commutator subgroup. The pentagon relation needs `PB₄` data and is not
//! checked, so a passing report certifies a charming candidate at hexagon
//! level only.

use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use num_integer::Integer;

use crate::dessin::{pair_is_transitive, Dessin};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::quotient::FiniteQuotient;
use crate::word::FreeWord;

/// A bare pair `(m, f)` with no target attached.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawShadow {
    pub m: i64,
    pub f: FreeWord,
}

impl RawShadow {
    pub fn new(m: i64, f: FreeWord) -> Self {
        Self { m, f }
    }

    pub fn identity() -> Self {
        Self::new(0, FreeWord::identity())
    }

    /// `(-1, 1)`, the image of complex conjugation.
    pub fn complex_conjugation() -> Self {
        Self::new(-1, FreeWord::identity())
    }

    pub fn exponent(&self) -> i64 {
        2 * self.m + 1
    }
}

impl fmt::Display for RawShadow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.m, self.f)
    }
}

/// Symmetry data of a quotient that the report carries as caveats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetries {
    pub swap: bool,
    /// `None` when the quotient has no central image.
    pub rotation: Option<bool>,
    pub free_rotation: bool,
}

impl Symmetries {
    pub fn of(q: &FiniteQuotient) -> Self {
        Symmetries {
            swap: q.swap_symmetry(),
            rotation: q.rotation_symmetry().ok(),
            free_rotation: q.free_rotation_symmetry(),
        }
    }

    /// Whether the hexagon checks depend only on the coset of `f`.
    pub fn coset_independent(&self) -> bool {
        self.swap && self.rotation.unwrap_or(self.free_rotation)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub shadow: RawShadow,
    pub n_ord: u64,
    pub n_ord_from_central: bool,
    pub unit: bool,
    pub charming: bool,
    pub hexagon_one: bool,
    pub hexagon_two: bool,
    pub surjective: bool,
    /// `f(y,z) f(z,y) ∈ N`.
    pub yz_relation: bool,
    /// `f(z,x) f(x,z) ∈ N`.
    pub zx_relation: bool,
    pub symmetries: Symmetries,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.unit && self.charming && self.hexagon_one && self.hexagon_two && self.surjective
    }

    /// Conditions 2–4 (charming, H-I, H-II).
    pub fn hexagon_level(&self) -> bool {
        self.charming && self.hexagon_one && self.hexagon_two
    }

    pub fn render_table(&self) -> String {
        let mark = |b: bool| if b { "pass" } else { "FAIL" };
        let mut out = String::new();
        out.push_str(&format!("shadow             {}\n", self.shadow));
        out.push_str(&format!(
            "n_ord              {}{}\n",
            self.n_ord,
            if self.n_ord_from_central {
                ""
            } else {
                " (from ord(xy); no central image)"
            }
        ));
        out.push_str(&format!("(1) unit           {}\n", mark(self.unit)));
        out.push_str(&format!("(2) charming       {}\n", mark(self.charming)));
        out.push_str(&format!("(3) H-I            {}\n", mark(self.hexagon_one)));
        out.push_str(&format!("(4) H-II           {}\n", mark(self.hexagon_two)));
        out.push_str(&format!("(5) surjective     {}\n", mark(self.surjective)));
        out.push_str(&format!(
            "advisory f(y,z)f(z,y)  {}\n",
            mark(self.yz_relation)
        ));
        out.push_str(&format!(
            "advisory f(z,x)f(x,z)  {}\n",
            mark(self.zx_relation)
        ));
        out.push_str(&format!("swap symmetry      {}\n", self.symmetries.swap));
        match self.symmetries.rotation {
            Some(r) => out.push_str(&format!("rotation symmetry  {r}\n")),
            None => out.push_str(&format!(
                "rotation symmetry  n/a (without c: {})\n",
                self.symmetries.free_rotation
            )),
        }
        if !self.symmetries.coset_independent() {
            out.push_str("caveat             coset independence unverified; result holds for this word only\n");
        }
        out.push_str(&format!(
            "status             {}\n",
            if self.is_verified() {
                "charming candidate (hexagon level; pentagon unchecked)"
            } else {
                "rejected"
            }
        ));
        out
    }
}

/// `f(x,y) f(y,x)`.
pub fn hexagon_one_word(f: &FreeWord) -> FreeWord {
    f.multiply(&f.substitute(&FreeWord::y(), &FreeWord::x()))
}

/// `x^m f(z,x) z^m f(y,z) y^m f(x,y)`.
pub fn hexagon_two_word(m: i64, f: &FreeWord) -> FreeWord {
    let (x, y, z) = (FreeWord::x(), FreeWord::y(), FreeWord::z());
    x.pow(m)
        .multiply(&f.substitute(&z, &x))
        .multiply(&z.pow(m))
        .multiply(&f.substitute(&y, &z))
        .multiply(&y.pow(m))
        .multiply(f)
}

/// Images of the generators under `T_{m,f}`: `x^{2m+1}` and
/// `f⁻¹ y^{2m+1} f`.
pub fn transformed_generators(shadow: &RawShadow) -> (FreeWord, FreeWord) {
    let e = shadow.exponent();
    let f = &shadow.f;
    (
        FreeWord::x().pow(e),
        f.invert().multiply(&FreeWord::y().pow(e)).multiply(f),
    )
}

pub fn verify(shadow: &RawShadow, target: &FiniteQuotient) -> VerificationReport {
    verify_with(shadow, target, Symmetries::of(target))
}

pub(crate) fn verify_with(
    shadow: &RawShadow,
    target: &FiniteQuotient,
    symmetries: Symmetries,
) -> VerificationReport {
    let (m, f) = (shadow.m, &shadow.f);
    let n_ord = target.n_ord();
    let (x, y, z) = (FreeWord::x(), FreeWord::y(), FreeWord::z());

    let unit = shadow.exponent().unsigned_abs().gcd(&n_ord) == 1;
    let charming = f.exponent_sums() == (0, 0);
    let hexagon_one = target.kills(&hexagon_one_word(f));
    let hexagon_two = target.kills(&hexagon_two_word(m, f));
    let yz_relation = target.kills(&f.substitute(&y, &z).multiply(&f.substitute(&z, &y)));
    let zx_relation = target.kills(&f.substitute(&z, &x).multiply(&f.substitute(&x, &z)));

    let (gx, gy) = transformed_generators(shadow);
    let image =
        PermGroup::new(vec![target.evaluate(&gx), target.evaluate(&gy)]).expect("common degree");
    let surjective = image.order() == target.order();

    VerificationReport {
        shadow: shadow.clone(),
        n_ord,
        n_ord_from_central: target.n_ord_from_central(),
        unit,
        charming,
        hexagon_one,
        hexagon_two,
        surjective,
        yz_relation,
        zx_relation,
        symmetries,
    }
}

/// A pair `(m, f)` together with its target quotient and verification
/// report.
#[derive(Clone, Debug)]
pub struct GTShadow {
    raw: RawShadow,
    target: Arc<FiniteQuotient>,
    report: VerificationReport,
}

impl GTShadow {
    pub fn new(m: i64, f: FreeWord, target: Arc<FiniteQuotient>) -> Self {
        let raw = RawShadow::new(m, f);
        let report = verify(&raw, &target);
        Self {
            raw,
            target,
            report,
        }
    }

    fn with_report(
        raw: RawShadow,
        target: Arc<FiniteQuotient>,
        report: VerificationReport,
    ) -> Self {
        Self {
            raw,
            target,
            report,
        }
    }

    pub fn m(&self) -> i64 {
        self.raw.m
    }

    pub fn f(&self) -> &FreeWord {
        &self.raw.f
    }

    pub fn raw(&self) -> &RawShadow {
        &self.raw
    }

    pub fn target(&self) -> &Arc<FiniteQuotient> {
        &self.target
    }

    pub fn report(&self) -> &VerificationReport {
        &self.report
    }

    pub fn is_verified(&self) -> bool {
        self.report.is_verified()
    }

    pub fn act(&self, d: &Dessin) -> Result<Dessin> {
        act(&self.raw, d)
    }

    /// The quotient `F₂/ker T_{m,f}`: same degree, with generator images
    /// `x̄^{2m+1}` and `f̄⁻¹ ȳ^{2m+1} f̄`, and `c̄^{2m+1}` when present.
    pub fn source_quotient(&self) -> Result<FiniteQuotient> {
        if !self.is_verified() {
            return Err(Error::NotVerified);
        }
        let (gx, gy) = transformed_generators(&self.raw);
        let c = self.target.img_c().map(|c| c.power(self.raw.exponent()));
        FiniteQuotient::new(self.target.evaluate(&gx), self.target.evaluate(&gy), c)
    }
}

/// The pair `(ψ(x^{2m+1}), ψ(f⁻¹ y^{2m+1} f))` for `ψ: x ↦ c₁, y ↦ c₂`.
pub fn act_on_pair(
    shadow: &RawShadow,
    c1: &Permutation,
    c2: &Permutation,
) -> Result<(Permutation, Permutation)> {
    let big_f = shadow.f.evaluate(c1, c2)?;
    let e = shadow.exponent();
    let new_y = big_f
        .inverse()
        .compose_unchecked(&c2.power(e).compose_unchecked(&big_f));
    Ok((c1.power(e), new_y))
}

/// Applies `(m, f)` to a dessin, requiring `2m+1` to be a unit modulo
/// `lcm(ord c₁, ord c₂)`.
pub fn act(shadow: &RawShadow, d: &Dessin) -> Result<Dessin> {
    let modulus = d.x().order().lcm(&d.y().order());
    let e = shadow.exponent();
    if e.unsigned_abs().gcd(&modulus) != 1 {
        return Err(Error::UnitConditionViolated {
            exponent: e,
            modulus,
        });
    }
    let (a, b) = act_on_pair(shadow, d.x(), d.y())?;
    if !pair_is_transitive(&a, &b) {
        return Err(Error::ResultNotTransitive);
    }
    Dessin::from_pair(&a, &b)
}

/// `[m₁,f₁] ∘ [m₂,f₂]`: `m = 2m₁m₂ + m₁ + m₂` and
/// `f = f₁ · f₂(x^{2m₁+1}, f₁⁻¹ y^{2m₁+1} f₁)`.
pub fn compose_raw(first: &RawShadow, second: &RawShadow) -> RawShadow {
    let m = 2 * first.m * second.m + first.m + second.m;
    let (a, b) = transformed_generators(first);
    let f = first.f.multiply(&second.f.substitute(&a, &b));
    RawShadow::new(m, f)
}

/// Composition in the groupoid. The target of `second` must be the source
/// of `first`; the result has the target of `first`.
pub fn compose(first: &GTShadow, second: &GTShadow) -> Result<GTShadow> {
    let source = first.source_quotient()?;
    if !source.same_kernel(&second.target) {
        return Err(Error::TargetMismatch);
    }
    let raw = compose_raw(&first.raw, &second.raw);
    Ok(GTShadow::new(raw.m, raw.f, first.target.clone()))
}

/// Composition without the source/target check. The result is verified
/// against the target of `first` like any other shadow.
pub fn compose_unchecked(first: &GTShadow, second: &GTShadow) -> GTShadow {
    let raw = compose_raw(&first.raw, &second.raw);
    GTShadow::new(raw.m, raw.f, first.target.clone())
}

/// All verified pairs `(m, f)` with `m` in `m_range` (default
/// `0..n_ord`) and `f` running over [`FiniteQuotient::derived_coset_words`].
/// Ordered by `m`, then by the order of the coset words.
pub fn enumerate_charming(
    target: Arc<FiniteQuotient>,
    m_range: Option<Range<i64>>,
    derived_cap: u128,
) -> Result<Vec<GTShadow>> {
    let words = target.derived_coset_words(derived_cap)?;
    let n_ord = target.n_ord();
    let range = m_range.unwrap_or(0..n_ord as i64);
    let symmetries = Symmetries::of(&target);
    let mut out = Vec::new();
    for m in range {
        if (2 * m + 1).unsigned_abs().gcd(&n_ord) != 1 {
            continue;
        }
        for f in &words {
            let raw = RawShadow::new(m, f.clone());
            let report = verify_with(&raw, &target, symmetries);
            if report.is_verified() {
                out.push(GTShadow::with_report(raw, target.clone(), report));
            }
        }
    }
    Ok(out)
}
