//! Shared fixtures and independent oracles for the integration tests.
//!
//! Oracles here work on plain `Vec<usize>` image arrays (0-indexed) and
//! strings, not on the library types, so they stay independent of the code
//! under test.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use gt_dessins::{Dessin, FiniteQuotient, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Images = Vec<usize>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn perm(s: &str, d: usize) -> Permutation {
    Permutation::parse(s, Some(d)).unwrap()
}

pub fn dessin(a: &str, b: &str, d: usize) -> Dessin {
    Dessin::from_pair(&perm(a, d), &perm(b, d)).unwrap()
}

pub fn to_perm(v: &[usize]) -> Permutation {
    Permutation::from_images(v.to_vec()).unwrap()
}

pub fn images(p: &Permutation) -> Images {
    (0..p.degree()).map(|i| p.apply(i)).collect()
}

// ---- permutation oracle ----------------------------------------------------

/// `a ∘ b`: apply `b` first.
pub fn mul(a: &[usize], b: &[usize]) -> Images {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inv(a: &[usize]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

pub fn ident(d: usize) -> Images {
    (0..d).collect()
}

pub fn pow(a: &[usize], r: i64) -> Images {
    let base = if r < 0 { inv(a) } else { a.to_vec() };
    let mut out = ident(a.len());
    for _ in 0..r.unsigned_abs() {
        out = mul(&base, &out);
    }
    out
}

pub fn order(a: &[usize]) -> u64 {
    let id = ident(a.len());
    let mut p = a.to_vec();
    let mut k = 1;
    while p != id {
        p = mul(a, &p);
        k += 1;
    }
    k
}

/// All elements of `⟨gens⟩` by breadth-first closure, or `None` past `cap`.
pub fn closure(gens: &[Images], d: usize, cap: usize) -> Option<Vec<Images>> {
    let mut seen: HashSet<Images> = HashSet::new();
    let mut out = vec![ident(d)];
    seen.insert(ident(d));
    let mut k = 0;
    while k < out.len() {
        for g in gens {
            let n = mul(g, &out[k]);
            if seen.insert(n.clone()) {
                if out.len() >= cap {
                    return None;
                }
                out.push(n);
            }
        }
        k += 1;
    }
    Some(out)
}

pub fn all_perms(d: usize) -> Vec<Images> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Images>) {
        let d = used.len();
        if prefix.len() == d {
            out.push(prefix.clone());
            return;
        }
        for i in 0..d {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

pub fn random_perm<R: Rng>(rng: &mut R, d: usize) -> Images {
    let mut v = ident(d);
    v.shuffle(rng);
    v
}

pub fn transitive(a: &[usize], b: &[usize]) -> bool {
    let d = a.len();
    let mut seen = vec![false; d];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(p) = stack.pop() {
        for q in [a[p], b[p]] {
            if !seen[q] {
                seen[q] = true;
                stack.push(q);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Lexicographically least simultaneous conjugate over all of `S_d`.
pub fn brute_min_conjugate(a: &[usize], b: &[usize], all: &[Images]) -> (Images, Images) {
    all.iter()
        .map(|h| {
            let hi = inv(h);
            (mul(h, &mul(a, &hi)), mul(h, &mul(b, &hi)))
        })
        .min()
        .unwrap()
}

// ---- free word oracle ------------------------------------------------------

fn inverse_char(c: char) -> char {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

pub fn w_reduce(s: &str) -> String {
    let mut out: Vec<char> = Vec::new();
    for c in s.chars() {
        if out.last() == Some(&inverse_char(c)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out.into_iter().collect()
}

pub fn w_inv(s: &str) -> String {
    s.chars().rev().map(inverse_char).collect()
}

pub fn w_pow(s: &str, r: i64) -> String {
    let base = if r < 0 { w_inv(s) } else { s.to_string() };
    w_reduce(&base.repeat(r.unsigned_abs() as usize))
}

pub fn w_subst(s: &str, a: &str, b: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        out.push_str(&match c {
            'x' => a.to_string(),
            'X' => w_inv(a),
            'y' => b.to_string(),
            'Y' => w_inv(b),
            _ => panic!("bad letter {c}"),
        });
    }
    w_reduce(&out)
}

/// `[m₁,f₁] ∘ [m₂,f₂]` at word level.
pub fn w_compose(m1: i64, f1: &str, m2: i64, f2: &str) -> (i64, String) {
    let e1 = 2 * m1 + 1;
    let a = w_pow("x", e1);
    let b = w_reduce(&format!("{}{}{}", w_inv(f1), w_pow("y", e1), f1));
    (
        2 * m1 * m2 + m1 + m2,
        w_reduce(&format!("{f1}{}", w_subst(f2, &a, &b))),
    )
}

/// Image of a word under `x ↦ a, y ↦ b`; rightmost letter acts first.
pub fn w_eval(s: &str, a: &[usize], b: &[usize]) -> Images {
    let (ai, bi) = (inv(a), inv(b));
    let mut out = ident(a.len());
    for c in s.chars() {
        let g = match c {
            'x' => a,
            'X' => &ai[..],
            'y' => b,
            'Y' => &bi[..],
            _ => panic!("bad letter {c}"),
        };
        out = mul(&out, g);
    }
    out
}

// ---- synthetic quotients ---------------------------------------------------

/// Small permutation groups, each given by generators on a transitive set.
pub fn small_groups() -> Vec<(&'static str, Vec<Images>)> {
    let g = |s: &str, d: usize| images(&perm(s, d));
    vec![
        ("S3", vec![g("(1,2)", 3), g("(1,2,3)", 3)]),
        ("D4", vec![g("(1,2,3,4)", 4), g("(1,3)", 4)]),
        ("D5", vec![g("(1,2,3,4,5)", 5), g("(2,5)(3,4)", 5)]),
        ("D6", vec![g("(1,2,3,4,5,6)", 6), g("(2,6)(3,5)", 6)]),
        (
            "Q8",
            vec![g("(1,2,3,4)(5,8,7,6)", 8), g("(1,5,3,7)(2,6,4,8)", 8)],
        ),
    ]
}

/// Intersection of the kernels of all epimorphisms `F₂ → G`: the diagonal
/// action over every generating pair, one pair per conjugacy class.
pub fn characteristic_quotient(gens: &[Images]) -> FiniteQuotient {
    let d = gens[0].len();
    let elements = closure(gens, d, 100_000).unwrap();
    let n = elements.len();
    let mut seen = BTreeSet::new();
    let mut parts = Vec::new();
    for a in &elements {
        for b in &elements {
            if closure(&[a.clone(), b.clone()], d, n + 1).map(|c| c.len()) != Some(n) {
                continue;
            }
            let key = gt_dessins::canonical_form(&to_perm(a), &to_perm(b)).unwrap();
            if seen.insert(key) {
                parts.push(FiniteQuotient::new(to_perm(a), to_perm(b), None).unwrap());
            }
        }
    }
    FiniteQuotient::intersection(&parts).unwrap()
}

/// `F₂ / [F₂,F₂]F₂ⁿ ≅ ℤ/n × ℤ/n`.
pub fn abelian_quotient(n: usize) -> FiniteQuotient {
    let mut x = ident(2 * n);
    let mut y = ident(2 * n);
    for i in 0..n {
        x[i] = (i + 1) % n;
        y[n + i] = n + (i + 1) % n;
    }
    FiniteQuotient::new(to_perm(&x), to_perm(&y), None).unwrap()
}

/// The suite of symmetric quotients used by the property suites.
pub fn suite_quotients() -> Vec<(String, Arc<FiniteQuotient>)> {
    let mut out = Vec::new();
    for (name, gens) in small_groups() {
        out.push((
            format!("char({name})"),
            Arc::new(characteristic_quotient(&gens)),
        ));
    }
    let s3 = characteristic_quotient(&small_groups()[0].1);
    let with_c = FiniteQuotient::new(
        s3.img_x().clone(),
        s3.img_y().clone(),
        Some(Permutation::identity(s3.degree())),
    )
    .unwrap();
    out.push(("char(S3)+c".into(), Arc::new(with_c)));
    for n in 2..=7 {
        out.push((format!("Z{n}xZ{n}"), Arc::new(abelian_quotient(n))));
    }
    for (name, d) in [("sym(D5)", d50()), ("sym(D8)", d80())] {
        out.push((name.into(), Arc::new(puncture_symmetric_quotient(&d))));
    }
    out
}

pub fn d50() -> Dessin {
    dessin("(1,4,5,2)", "(2,3,5,4)", 5)
}

pub fn d50_conj() -> Dessin {
    dessin("(1,2,5,4)", "(1,5,2,3)", 5)
}

pub fn d60() -> Dessin {
    dessin("(1,4,5,2)(3,6)", "(1,6,3,2)(4,5)", 6)
}

pub fn d60_conj() -> Dessin {
    dessin("(1,4,5,2)(3,6)", "(1,2,5,6)(3,4)", 6)
}

pub fn d70() -> Dessin {
    dessin("(1,2,3)(4,5)(6,7)", "(1,5,6)(2,7)(3,4)", 7)
}

pub fn d80() -> Dessin {
    dessin("(1,2,3)(4,5,6)", "(1,8,5)(2,4,7)", 8)
}

pub fn d154() -> Dessin {
    dessin(
        "(1,2,3,4,5,6)(7,8,9,10,11,12)(13,14,15)",
        "(1,2,6,12,9,15)(3,7,13)(4,11,14,5,8,10)",
        15,
    )
}

pub fn d154_conj() -> Dessin {
    dessin(
        "(1,6,5,4,3,2)(7,12,11,10,9,8)(13,15,14)",
        "(1,15,9,12,6,2)(3,13,7)(4,10,8,5,14,11)",
        15,
    )
}

pub fn d184() -> Dessin {
    dessin(
        "(1,10,17,2,9,18)(3,12,13,4,11,14)(5,8,15,6,7,16)",
        "(1,16,11,2,15,12)(3,18,7,4,17,8)(5,14,9,6,13,10)",
        18,
    )
}

/// The worked examples of degree at most 12.
pub fn small_golden_dessins() -> Vec<Dessin> {
    vec![d50(), d50_conj(), d60(), d60_conj(), d70(), d80()]
}

/// Action of `x̄, ȳ` on the left cosets of `H = ⟨hgens⟩` in the quotient
/// group. `None` if the index exceeds `max_index`.
pub fn coset_dessin(q: &FiniteQuotient, hgens: &[Images], max_index: usize) -> Option<Dessin> {
    let d = q.degree();
    let x = images(q.img_x());
    let y = images(q.img_y());
    let group = closure(&[x.clone(), y.clone()], d, 100_000).unwrap();
    let h = closure(hgens, d, 100_000).unwrap();
    if group.len() / h.len() > max_index {
        return None;
    }
    let key = |g: &Images| h.iter().map(|k| mul(g, k)).min().unwrap();
    let mut index: HashMap<Images, usize> = HashMap::new();
    let mut reps: Vec<Images> = Vec::new();
    let mut queue = VecDeque::new();
    index.insert(key(&ident(d)), 0);
    reps.push(ident(d));
    queue.push_back(0);
    let mut edges = Vec::new();
    while let Some(i) = queue.pop_front() {
        for (gen_no, g) in [&x, &y].into_iter().enumerate() {
            let n = mul(g, &reps[i]);
            let k = key(&n);
            let j = match index.get(&k) {
                Some(&j) => j,
                None => {
                    let j = reps.len();
                    index.insert(k, j);
                    reps.push(n);
                    queue.push_back(j);
                    j
                }
            };
            edges.push((gen_no, i, j));
        }
    }
    let m = reps.len();
    let mut a = vec![0; m];
    let mut b = vec![0; m];
    for (gen_no, i, j) in edges {
        if gen_no == 0 {
            a[i] = j;
        } else {
            b[i] = j;
        }
    }
    Some(Dessin::from_pair(&to_perm(&a), &to_perm(&b)).unwrap())
}

/// Distinct dessins of degree at most `max_degree` dominated by `q`.
pub fn dominated_dessins<R: Rng>(
    q: &FiniteQuotient,
    rng: &mut R,
    attempts: usize,
    max_degree: usize,
) -> Vec<Dessin> {
    let d = q.degree();
    let group = closure(&[images(q.img_x()), images(q.img_y())], d, 100_000).unwrap();
    let mut out = BTreeSet::new();
    if let Some(t) = coset_dessin(q, &[ident(d)], max_degree) {
        out.insert(t);
    }
    out.insert(coset_dessin(q, &[images(q.img_x()), images(q.img_y())], 1).unwrap());
    for _ in 0..attempts {
        let k = rng.gen_range(1..=2);
        let hgens: Vec<Images> = (0..k)
            .map(|_| group[rng.gen_range(0..group.len())].clone())
            .collect();
        if let Some(dd) = coset_dessin(q, &hgens, max_degree) {
            out.insert(dd);
        }
    }
    out.into_iter().collect()
}

/// A random transitive abelian pair of degree at most `max_degree`: the
/// regular action of `ℤ/a × ℤ/b` on itself, relabelled at random.
pub fn random_abelian_pair<R: Rng>(rng: &mut R, max_degree: usize) -> (Permutation, Permutation) {
    loop {
        let a = rng.gen_range(1..=max_degree);
        let b = rng.gen_range(1..=max_degree / a);
        let d = a * b;
        let translate = |(s, t): (usize, usize)| -> Images {
            (0..d)
                .map(|p| {
                    let (i, j) = (p / b, p % b);
                    ((i + s) % a) * b + (j + t) % b
                })
                .collect()
        };
        let g1 = translate((rng.gen_range(0..a), rng.gen_range(0..b)));
        let g2 = translate((rng.gen_range(0..a), rng.gen_range(0..b)));
        if !transitive(&g1, &g2) {
            continue;
        }
        let h = random_perm(rng, d);
        let hi = inv(&h);
        return (
            to_perm(&mul(&h, &mul(&g1, &hi))),
            to_perm(&mul(&h, &mul(&g2, &hi))),
        );
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The smallest quotient dominating `d` that is stable under permuting the
/// three punctures: the kernels of `(c₁,c₂)` relabelled by all six
/// orderings of `(c₁, c₂, c₃)`.
pub fn puncture_symmetric_quotient(d: &Dessin) -> FiniteQuotient {
    let (a, b, c) = d.triple();
    let pairs = [(&a, &b), (&b, &a), (&b, &c), (&c, &b), (&c, &a), (&a, &c)];
    let parts: Vec<FiniteQuotient> = pairs
        .iter()
        .map(|(u, v)| FiniteQuotient::new((*u).clone(), (*v).clone(), None).unwrap())
        .collect();
    FiniteQuotient::intersection(&parts).unwrap()
}
