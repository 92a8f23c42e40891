//! Motzkin's construction for the Gaussian integers and for the rational
//! integers, built from coset coverage alone.
//!
//! Level 0 is zero together with the units. Level `n + 1` adds every `beta`
//! such that each residue class modulo `beta` already has a representative
//! in level `n`. Nothing here consults the closed-form description in
//! [`crate::bset`]; the two are compared by the verification suite.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gaussint::{GaussInt, Unit};

/// Canonical label of `x` modulo `beta`: the coordinates of `x * conj(beta)`
/// reduced modulo `N(beta)`. Two elements share a key exactly when `beta`
/// divides their difference.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueKey {
    pub k1: u128,
    pub k2: u128,
}

pub fn residue_key(x: GaussInt, beta: GaussInt) -> Result<ResidueKey> {
    if beta.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = i128::try_from(beta.norm()).map_err(|_| Error::Overflow("residue_key"))?;
    let (re, im) = x.mul_conj_wide(beta);
    Ok(ResidueKey { k1: re.rem_euclid(n) as u128, k2: im.rem_euclid(n) as u128 })
}

/// Dense numbering `0..N(beta)` of the residue classes modulo `beta`.
///
/// The ideal `(beta)` is the lattice spanned by `(h, 0)` and `(c, g)` where
/// `g = gcd(re, im)` and `h = N(beta) / g`. Reducing the imaginary part
/// modulo `g`, then the real part modulo `h`, gives a unique point of that
/// fundamental box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosetIndex {
    modulus: GaussInt,
    g: i128,
    h: i128,
    c: i128,
}

impl CosetIndex {
    /// Moduli with norm above `u32::MAX` are rejected so indices fit in memory-sized tables.
    pub fn new(beta: GaussInt) -> Result<Self> {
        if beta.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = beta.norm();
        if norm > u128::from(u32::MAX) {
            return Err(Error::Overflow("coset index"));
        }
        let (a, b) = (i128::from(beta.re), i128::from(beta.im));
        // s*b + t*a = g, so s*beta + t*(i*beta) = c + g*i.
        let (g, s, t) = ext_gcd(b, a);
        let h = norm as i128 / g;
        let c = (s * a - t * b).rem_euclid(h);
        Ok(CosetIndex { modulus: beta, g, h, c })
    }

    pub fn modulus(&self) -> GaussInt {
        self.modulus
    }

    pub fn len(&self) -> usize {
        (self.g * self.h) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, x: GaussInt) -> usize {
        let im = i128::from(x.im);
        let y = im.rem_euclid(self.g);
        let k = (im - y) / self.g;
        let shift = (k.rem_euclid(self.h) * self.c) % self.h;
        let xr = (i128::from(x.re) - shift).rem_euclid(self.h);
        (y * self.h + xr) as usize
    }

    /// The fundamental-box point with the given index.
    pub fn representative(&self, idx: usize) -> GaussInt {
        let idx = idx as i128;
        GaussInt::new((idx % self.h) as i64, (idx / self.h) as i64)
    }
}

/// `(g, s, t)` with `s*x + t*y = g = gcd(x, y) > 0`, not both inputs zero.
fn ext_gcd(x: i128, y: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (x, y);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// A complete set of representatives modulo `beta`, sorted.
///
/// For an associate `a + bi` with `a > b >= 0` this is the square
/// `0 <= x, y < a` together with the strip `0 <= x < b, -b <= y < 0`.
/// When only the conjugate has such an associate, the conjugated system is
/// used; the remaining moduli (`|re| = |im|`) fall back to a box scan.
pub fn residue_system(beta: GaussInt) -> Result<Vec<GaussInt>> {
    if beta.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let square_and_strip = |z: GaussInt| {
        Unit::ALL
            .iter()
            .map(|u| u.value() * z)
            .find(|v| v.re > v.im && v.im >= 0)
    };
    let mut system = if let Some(v) = square_and_strip(beta) {
        square_strip(v.re, v.im)
    } else if let Some(v) = square_and_strip(beta.conj()) {
        square_strip(v.re, v.im).into_iter().map(GaussInt::conj).collect()
    } else {
        scan_system(beta)?
    };
    system.sort();
    Ok(system)
}

fn square_strip(a: i64, b: i64) -> Vec<GaussInt> {
    let square = (0..a).flat_map(|y| (0..a).map(move |x| GaussInt::new(x, y)));
    let strip = (-b..0).flat_map(|y| (0..b).map(move |x| GaussInt::new(x, y)));
    square.chain(strip).collect()
}

fn scan_system(beta: GaussInt) -> Result<Vec<GaussInt>> {
    let target = beta.norm();
    let side = 2 * beta.max_abs() as i64;
    let mut seen = HashSet::new();
    let mut system = Vec::new();
    for y in 0..side {
        for x in 0..side {
            let z = GaussInt::new(x, y);
            if seen.insert(residue_key(z, beta)?) {
                system.push(z);
                if system.len() as u128 == target {
                    return Ok(system);
                }
            }
        }
    }
    Err(Error::IncompleteResidueSystem(beta))
}

/// One level `A_n` of the hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotzkinLevel {
    pub n: u32,
    pub elements: BTreeSet<GaussInt>,
}

impl MotzkinLevel {
    /// `{0, ±1, ±i}`.
    pub fn base() -> Self {
        let mut elements: BTreeSet<GaussInt> = Unit::ALL.iter().map(|u| u.value()).collect();
        elements.insert(GaussInt::ZERO);
        MotzkinLevel { n: 0, elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, z: GaussInt) -> bool {
        self.elements.contains(&z)
    }
}

/// Whether every residue class modulo `beta` meets `level`.
pub fn covers(level: &MotzkinLevel, beta: GaussInt) -> Result<bool> {
    covers_set(&level.elements, beta)
}

fn covers_set(elements: &BTreeSet<GaussInt>, beta: GaussInt) -> Result<bool> {
    let classes = beta.norm();
    if beta.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if (elements.len() as u128) < classes {
        return Ok(false);
    }
    let mut keys = HashSet::with_capacity(classes as usize);
    for &a in elements {
        keys.insert(residue_key(a, beta)?);
        if keys.len() as u128 == classes {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `A_{n+1}` from `A_n`.
///
/// Only `beta` with `N(beta) <= |A_n|` can be covered, since a finite set
/// cannot meet more classes than it has elements. Candidates are scanned in
/// the box `max(|re|, |im|) <= ceil(sqrt(|A_n|)) + 1`, which contains every
/// such `beta`.
pub fn next_level(level: &MotzkinLevel) -> Result<MotzkinLevel> {
    let size = level.len() as u128;
    let radius = (size as f64).sqrt().ceil() as i64 + 1;
    let candidates: Vec<GaussInt> = (-radius..=radius)
        .flat_map(|re| (-radius..=radius).map(move |im| GaussInt::new(re, im)))
        .filter(|&b| !b.is_zero() && b.norm() <= size && !level.contains(b))
        .collect();
    let added = candidates
        .into_par_iter()
        .map(|b| covers(level, b).map(|ok| ok.then_some(b)))
        .collect::<Result<Vec<_>>>()?;
    let mut elements = level.elements.clone();
    elements.extend(added.into_iter().flatten());
    Ok(MotzkinLevel { n: level.n + 1, elements })
}

pub fn levels_up_to(nmax: u32) -> Result<Vec<MotzkinLevel>> {
    let mut levels = vec![MotzkinLevel::base()];
    for _ in 0..nmax {
        let next = next_level(levels.last().expect("nonempty"))?;
        levels.push(next);
    }
    Ok(levels)
}

/// The same construction over the rational integers, starting from `{0, ±1}`.
pub fn int_levels_up_to(nmax: u32) -> Vec<BTreeSet<i64>> {
    let mut levels = vec![BTreeSet::from([-1, 0, 1])];
    for _ in 0..nmax {
        let current = levels.last().expect("nonempty");
        let bound = current.len() as i64;
        let added: Vec<i64> = (1..=bound)
            .into_par_iter()
            .filter(|&m| {
                let residues: HashSet<i64> = current.iter().map(|&a: &i64| a.rem_euclid(m)).collect();
                residues.len() as i64 == m
            })
            .flat_map_iter(|m| [m, -m])
            .collect();
        let mut next = current.clone();
        next.extend(added);
        levels.push(next);
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn key_examples() {
        let beta = g(2, 1);
        assert_eq!(residue_key(g(0, 1), beta), Ok(ResidueKey { k1: 1, k2: 2 }));
        assert_eq!(residue_key(g(3, 0), beta), Ok(ResidueKey { k1: 1, k2: 2 }));
        assert_eq!(residue_key(GaussInt::ZERO, g(7, -3)), Ok(ResidueKey { k1: 0, k2: 0 }));
        assert_eq!(residue_key(g(1, 0), GaussInt::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn system_examples() {
        assert_eq!(residue_system(g(2, 1)).unwrap(), vec![g(0, -1), g(0, 0), g(0, 1), g(1, 0), g(1, 1)]);
        assert_eq!(residue_system(g(1, 0)).unwrap(), vec![GaussInt::ZERO]);
        assert_eq!(residue_system(g(1, 1)).unwrap(), vec![g(0, 0), g(1, 0)]);
        assert!(residue_system(GaussInt::ZERO).is_err());
    }

    #[test]
    fn systems_are_complete() {
        for re in -9..=9 {
            for im in -9..=9 {
                let beta = g(re, im);
                if beta.is_zero() {
                    continue;
                }
                let system = residue_system(beta).unwrap();
                assert_eq!(system.len() as u128, beta.norm(), "beta={beta}");
                let keys: HashSet<_> = system.iter().map(|&x| residue_key(x, beta).unwrap()).collect();
                assert_eq!(keys.len(), system.len(), "beta={beta}");
            }
        }
    }

    #[test]
    fn coverage_examples() {
        let base = MotzkinLevel::base();
        assert_eq!(covers(&base, g(2, 1)), Ok(true));
        assert_eq!(covers(&base, g(2, 0)), Ok(false));
        assert_eq!(covers(&base, g(1, 0)), Ok(true));
        assert_eq!(covers(&base, g(1, 1)), Ok(true));
        assert!(covers(&base, GaussInt::ZERO).is_err());
    }

    #[test]
    fn first_levels() {
        let levels = levels_up_to(2).unwrap();
        let sizes: Vec<usize> = levels.iter().map(MotzkinLevel::len).collect();
        assert_eq!(sizes, vec![5, 17, 49]);
        assert!(levels[1].contains(g(2, 1)));
        assert!(!levels[1].contains(g(2, 0)));
        assert_eq!(levels[1].n, 1);
        assert!(levels[0].elements.is_subset(&levels[1].elements));
        assert!(levels[1].elements.is_subset(&levels[2].elements));
    }

    #[test]
    fn levels_are_symmetric() {
        for level in levels_up_to(4).unwrap() {
            for &z in &level.elements {
                assert!(level.contains(z.conj()), "n={} z={z}", level.n);
                for a in z.associates() {
                    assert!(level.contains(a), "n={} z={z}", level.n);
                }
            }
        }
    }

    #[test]
    fn integer_levels() {
        let levels = int_levels_up_to(3);
        assert_eq!(levels[0], BTreeSet::from([-1, 0, 1]));
        assert_eq!(levels[1], (-3..=3).collect());
        assert_eq!(levels[2], (-7..=7).collect());
        assert_eq!(levels[3], (-15..=15).collect());
    }

    #[test]
    fn coset_index_examples() {
        let idx = CosetIndex::new(g(2, 1)).unwrap();
        assert_eq!(idx.len(), 5);
        assert_eq!(idx.index(g(3, 0)), idx.index(g(0, 1)));
        assert_eq!(idx.index(g(2, 1)), 0);
        let two = CosetIndex::new(g(2, 0)).unwrap();
        assert_eq!(two.len(), 4);
        let all: HashSet<usize> = (0..4).map(|k| two.index(two.representative(k))).collect();
        assert_eq!(all.len(), 4);
        assert!(CosetIndex::new(GaussInt::ZERO).is_err());
        assert!(CosetIndex::new(g(1 << 20, 1 << 20)).is_err());
    }

    fn small() -> impl Strategy<Value = GaussInt> {
        (-60i64..=60, -60i64..=60).prop_map(|(a, b)| GaussInt::new(a, b))
    }

    proptest! {
        #[test]
        fn key_equality_is_divisibility(x in small(), y in small(), beta in small()) {
            prop_assume!(!beta.is_zero());
            let same = residue_key(x, beta)? == residue_key(y, beta)?;
            prop_assert_eq!(same, beta.divides(x - y)?);
        }

        #[test]
        fn dense_index_agrees_with_keys(x in small(), y in small(), beta in small()) {
            prop_assume!(!beta.is_zero());
            let idx = CosetIndex::new(beta)?;
            prop_assert!(idx.index(x) < idx.len());
            prop_assert_eq!(idx.len() as u128, beta.norm());
            let same_key = residue_key(x, beta)? == residue_key(y, beta)?;
            prop_assert_eq!(idx.index(x) == idx.index(y), same_key);
            let k = idx.index(x);
            prop_assert_eq!(idx.index(idx.representative(k)), k);
        }
    }
}
