//! Division with remainder and the Euclidean algorithm on the Gaussian
//! integers, driven either by the minimal Euclidean function or by the norm.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, RwLock};

use crate::bset::{enumerate_b, phi};
use crate::error::{Error, Result};
use crate::gaussint::GaussInt;
use crate::motzkin::{residue_key, residue_system, CosetIndex, ResidueKey};

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub struct DivResult {
    pub q: GaussInt,
    pub r: GaussInt,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Remainders drawn from `B_{phi(b) - 1}`.
    #[default]
    MinPhi,
    /// Nearest-integer quotient, so `N(r) <= N(b) / 2`.
    Norm,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::MinPhi => "min-phi",
            Strategy::Norm => "norm",
        })
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "min-phi" => Ok(Strategy::MinPhi),
            "norm" => Ok(Strategy::Norm),
            other => Err(format!("unknown strategy {other:?} (expected min-phi or norm)")),
        }
    }
}

/// One division `dividend = q * divisor + r` of a chain.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub dividend: GaussInt,
    pub divisor: GaussInt,
    pub result: DivResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub steps: Vec<ChainStep>,
    pub gcd: GaussInt,
    pub strategy: Strategy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub ok: bool,
    /// Residue classes with no member of `B_{phi(b) - 1}`.
    pub witnesses: Vec<ResidueKey>,
}

/// Ordering used to pick one remainder out of a residue class: smallest
/// `phi` (zero first), then smallest norm, then `(re, im)`.
type Rank = (Option<u32>, u128, GaussInt);

fn remainder_rank(z: GaussInt) -> Rank {
    (phi(z).ok(), z.norm(), z)
}

fn exact_quotient(a: GaussInt, r: GaussInt, b: GaussInt) -> Result<GaussInt> {
    Ok(a.checked_sub(r)?.try_div(b)?.expect("remainder lies in the class of the dividend"))
}

/// Division whose remainder is the preferred member of `a`'s class modulo
/// `b` inside `B_{phi(b) - 1}`, found by scanning that set.
///
/// An empty class is reported as [`Error::NoRepresentative`].
pub fn div_min(a: GaussInt, b: GaussInt) -> Result<DivResult> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let level = phi(b)?;
    if level == 0 {
        return Ok(DivResult { q: a.try_div(b)?.expect("units divide everything"), r: GaussInt::ZERO });
    }
    let target = residue_key(a, b)?;
    let mut best = None;
    for z in enumerate_b(level - 1)? {
        if residue_key(z, b)? == target {
            let rank = remainder_rank(z);
            if best.as_ref().is_none_or(|(current, _)| rank < *current) {
                best = Some((rank, z));
            }
        }
    }
    let (_, r) = best.ok_or(Error::NoRepresentative { a, b })?;
    Ok(DivResult { q: exact_quotient(a, r, b)?, r })
}

/// Division with the nearest-integer quotient; ties round toward negative infinity.
pub fn div_norm(a: GaussInt, b: GaussInt) -> Result<DivResult> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = i128::try_from(b.norm()).map_err(|_| Error::Overflow("div_norm"))?;
    let (re, im) = a.mul_conj_wide(b);
    let q = GaussInt::from_wide(round_half_down(re, n)?, round_half_down(im, n)?)
        .ok_or(Error::Overflow("div_norm"))?;
    let r = a.checked_sub(q.checked_mul(b)?)?;
    Ok(DivResult { q, r })
}

/// Nearest integer to `x / n` for `n > 0`, with halves going down: `ceil((2x - n) / 2n)`.
fn round_half_down(x: i128, n: i128) -> Result<i128> {
    let num = x.checked_mul(2).and_then(|v| v.checked_sub(n)).ok_or(Error::Overflow("div_norm"))?;
    let den = n.checked_mul(2).ok_or(Error::Overflow("div_norm"))?;
    Ok(-((-num).div_euclid(den)))
}

/// Chosen remainder for every class modulo one divisor.
#[derive(Debug)]
struct RemainderTable {
    index: CosetIndex,
    reps: Vec<GaussInt>,
}

/// Table-driven form of [`div_min`] for many divisions.
///
/// Remainder tables are keyed by the first-quadrant associate of the
/// divisor and built once; the `B_n` sets behind them are cached too. The
/// results are identical to [`div_min`].
#[derive(Debug, Default)]
pub struct MinPhiDivider {
    bsets: Mutex<HashMap<u32, Arc<Vec<GaussInt>>>>,
    tables: RwLock<HashMap<GaussInt, Arc<RemainderTable>>>,
}

impl MinPhiDivider {
    pub fn new() -> Self {
        Self::default()
    }

    fn bset(&self, n: u32) -> Result<Arc<Vec<GaussInt>>> {
        if let Some(set) = self.bsets.lock().expect("bset cache poisoned").get(&n) {
            return Ok(Arc::clone(set));
        }
        let set = Arc::new(enumerate_b(n)?);
        let mut cache = self.bsets.lock().expect("bset cache poisoned");
        Ok(Arc::clone(cache.entry(n).or_insert(set)))
    }

    fn table(&self, b: GaussInt, level: u32) -> Result<Arc<RemainderTable>> {
        let key = b.normalize_associate();
        if let Some(table) = self.tables.read().expect("table cache poisoned").get(&key) {
            return Ok(Arc::clone(table));
        }
        let index = CosetIndex::new(key)?;
        let mut best: Vec<Option<(Rank, GaussInt)>> = vec![None; index.len()];
        for &z in self.bset(level - 1)?.iter() {
            let slot = &mut best[index.index(z)];
            let rank = remainder_rank(z);
            if slot.as_ref().is_none_or(|(current, _)| rank < *current) {
                *slot = Some((rank, z));
            }
        }
        let reps = best
            .into_iter()
            .enumerate()
            .map(|(idx, slot)| {
                slot.map(|(_, z)| z)
                    .ok_or(Error::NoRepresentative { a: index.representative(idx), b })
            })
            .collect::<Result<Vec<_>>>()?;
        let table = Arc::new(RemainderTable { index, reps });
        let mut cache = self.tables.write().expect("table cache poisoned");
        Ok(Arc::clone(cache.entry(key).or_insert(table)))
    }

    pub fn div(&self, a: GaussInt, b: GaussInt) -> Result<DivResult> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let level = phi(b)?;
        if level == 0 {
            return Ok(DivResult { q: a.try_div(b)?.expect("units divide everything"), r: GaussInt::ZERO });
        }
        let table = self.table(b, level)?;
        let r = table.reps[table.index.index(a)];
        Ok(DivResult { q: exact_quotient(a, r, b)?, r })
    }

    pub fn gcd_chain(&self, a: GaussInt, b: GaussInt, strategy: Strategy) -> Result<ChainReport> {
        run_chain(a, b, strategy, |x, y| match strategy {
            Strategy::MinPhi => self.div(x, y),
            Strategy::Norm => div_norm(x, y),
        })
    }
}

/// Run the Euclidean algorithm until a zero remainder.
///
/// `gcd(a, 0)` is computed as `gcd(0, a)` so every report has at least one step.
pub fn gcd_chain(a: GaussInt, b: GaussInt, strategy: Strategy) -> Result<ChainReport> {
    MinPhiDivider::new().gcd_chain(a, b, strategy)
}

fn run_chain(
    a: GaussInt,
    b: GaussInt,
    strategy: Strategy,
    mut divide: impl FnMut(GaussInt, GaussInt) -> Result<DivResult>,
) -> Result<ChainReport> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedForZero("gcd"));
    }
    let (mut dividend, mut divisor) = if b.is_zero() { (b, a) } else { (a, b) };
    let mut steps = Vec::new();
    loop {
        let result = divide(dividend, divisor)?;
        steps.push(ChainStep { dividend, divisor, result });
        if result.r.is_zero() {
            return Ok(ChainReport { steps, gcd: divisor, strategy });
        }
        dividend = divisor;
        divisor = result.r;
    }
}

/// Check that every nonzero class modulo `b` meets `B_{phi(b) - 1}`.
pub fn euclidean_property_check(b: GaussInt) -> Result<PropertyReport> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if b.is_unit() {
        return Err(Error::UnitModulus(b));
    }
    let level = phi(b)?;
    let hit = enumerate_b(level - 1)?
        .into_iter()
        .map(|z| residue_key(z, b))
        .collect::<Result<HashSet<_>>>()?;
    let zero = residue_key(GaussInt::ZERO, b)?;
    let mut witnesses = Vec::new();
    for x in residue_system(b)? {
        let key = residue_key(x, b)?;
        if key != zero && !hit.contains(&key) {
            witnesses.push(key);
        }
    }
    Ok(PropertyReport { ok: witnesses.is_empty(), witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    /// Every quotient whose remainder is no larger than the dividend or the divisor.
    fn brute_force_remainders(a: GaussInt, b: GaussInt) -> Vec<DivResult> {
        let limit = a.norm() + b.norm();
        let reach = (limit as f64).sqrt() as i64 + 2;
        let mut out = Vec::new();
        for qr in -reach..=reach {
            for qi in -reach..=reach {
                let q = g(qr, qi);
                let r = a - q * b;
                if r.norm() <= limit {
                    out.push(DivResult { q, r });
                }
            }
        }
        out
    }

    #[test]
    fn min_phi_examples() {
        assert_eq!(div_min(g(3, 0), g(2, 1)), Ok(DivResult { q: g(1, -1), r: g(0, 1) }));
        assert_eq!(div_min(g(5, 0), g(2, 1)), Ok(DivResult { q: g(2, -1), r: GaussInt::ZERO }));
        assert_eq!(div_min(g(1, 0), g(1, 0)), Ok(DivResult { q: g(1, 0), r: GaussInt::ZERO }));
        assert_eq!(div_min(g(1, 0), GaussInt::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn min_phi_remainder_is_the_unique_small_one() {
        // Among all remainders of 3 by 2+i only i has phi below phi(2+i) = 1.
        let small: Vec<_> = brute_force_remainders(g(3, 0), g(2, 1))
            .into_iter()
            .filter(|d| d.r.is_zero() || phi(d.r).unwrap() < 1)
            .collect();
        assert_eq!(small, vec![DivResult { q: g(1, -1), r: g(0, 1) }]);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(div_norm(g(3, 0), g(2, 1)), Ok(DivResult { q: g(1, -1), r: g(0, 1) }));
        assert_eq!(div_norm(g(4, 0), g(2, 0)), Ok(DivResult { q: g(2, 0), r: GaussInt::ZERO }));
        assert_eq!(div_norm(g(0, 1), g(3, 0)), Ok(DivResult { q: GaussInt::ZERO, r: g(0, 1) }));
        // 1/2 and -1/2 both round down.
        assert_eq!(div_norm(g(1, 0), g(2, 0)).unwrap().q, g(0, 0));
        assert_eq!(div_norm(g(-1, 0), g(2, 0)).unwrap().q, g(-1, 0));
        assert_eq!(div_norm(g(1, 1), g(2, 0)).unwrap().q, g(0, 0));
        assert!(div_norm(g(1, 0), GaussInt::ZERO).is_err());
    }

    #[test]
    fn rounding_against_floats() {
        for x in -40i128..=40 {
            for n in 1i128..=12 {
                let want = {
                    let exact = x as f64 / n as f64;
                    let up = exact.ceil();
                    if up - exact < 0.5 { up } else { up - 1.0 }
                };
                assert_eq!(round_half_down(x, n).unwrap() as f64, want, "{x}/{n}");
            }
        }
    }

    #[test]
    fn table_divider_matches_scan() {
        let divider = MinPhiDivider::new();
        for br in -6..=6 {
            for bi in -6..=6 {
                let b = g(br, bi);
                if b.is_zero() {
                    continue;
                }
                for ar in -7..=7 {
                    for ai in -7..=7 {
                        let a = g(ar, ai);
                        assert_eq!(divider.div(a, b), div_min(a, b), "a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn chains() {
        let report = gcd_chain(g(5, 0), g(2, 1), Strategy::MinPhi).unwrap();
        assert_eq!(report.steps.len(), 1);
        assert_eq!(report.gcd, g(2, 1));
        let report = gcd_chain(g(3, 0), g(2, 0), Strategy::MinPhi).unwrap();
        assert!(report.gcd.is_unit());
        let report = gcd_chain(GaussInt::ZERO, g(7, 0), Strategy::Norm).unwrap();
        assert_eq!((report.gcd, report.steps.len()), (g(7, 0), 1));
        let report = gcd_chain(g(7, 0), GaussInt::ZERO, Strategy::MinPhi).unwrap();
        assert_eq!((report.gcd, report.steps.len()), (g(7, 0), 1));
        assert!(gcd_chain(GaussInt::ZERO, GaussInt::ZERO, Strategy::MinPhi).is_err());
        let a = g(11, 3) * g(2, 1);
        let b = g(-4, 7) * g(2, 1);
        for strategy in [Strategy::MinPhi, Strategy::Norm] {
            let report = gcd_chain(a, b, strategy).unwrap();
            assert!(report.gcd.divides(a).unwrap() && report.gcd.divides(b).unwrap());
            assert_eq!(report.strategy, strategy);
            for step in &report.steps {
                assert_eq!(step.result.q * step.divisor + step.result.r, step.dividend);
            }
        }
    }

    #[test]
    fn property_check_examples() {
        for b in [g(2, 1), g(1, 1), g(4, 1)] {
            let report = euclidean_property_check(b).unwrap();
            assert!(report.ok, "b={b}");
            assert!(report.witnesses.is_empty());
        }
        assert_eq!(euclidean_property_check(g(0, -1)), Err(Error::UnitModulus(g(0, -1))));
        assert_eq!(euclidean_property_check(GaussInt::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn strategy_names() {
        assert_eq!("min-phi".parse::<Strategy>(), Ok(Strategy::MinPhi));
        assert_eq!("norm".parse::<Strategy>(), Ok(Strategy::Norm));
        assert!("fast".parse::<Strategy>().is_err());
        assert_eq!(Strategy::MinPhi.to_string(), "min-phi");
    }
}
