//! The sets `B_n` of Gaussian integers with an `(n+1)`-digit expansion in
//! base `1+i` over the digits `{0, ±1, ±i}`, and the minimal Euclidean
//! function `phi` read off from them.
//!
//! Membership is decided in closed form: a nonzero `z` with `2^j` exactly
//! dividing both coordinates lies in `B_n` iff
//!
//! ```text
//! j <= n/2,  max(|x|,|y|) <= w_n - 2^(j+1),  |x| + |y| <= w_(n+1) - 3 * 2^j
//! ```
//!
//! [`expand_min`] is the independent route: a breadth-first search for a
//! shortest digit expansion that never looks at the closed form.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gaussint::GaussInt;
use crate::wseq::{w, w_wide};

/// Every nonzero `i64` Gaussian integer has `phi` below this, so larger
/// levels can be clamped without changing any membership answer.
const LEVEL_CLAMP: u32 = 200;

#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum Digit {
    Zero,
    One,
    NegOne,
    I,
    NegI,
}

impl Digit {
    pub const ALL: [Digit; 5] = [Digit::Zero, Digit::One, Digit::NegOne, Digit::I, Digit::NegI];
    /// Nonzero digits in the order the expansion search tries them.
    pub const UNITS: [Digit; 4] = [Digit::One, Digit::NegOne, Digit::I, Digit::NegI];

    pub fn value(self) -> GaussInt {
        match self {
            Digit::Zero => GaussInt::ZERO,
            Digit::One => GaussInt::ONE,
            Digit::NegOne => GaussInt::new(-1, 0),
            Digit::I => GaussInt::I,
            Digit::NegI => GaussInt::new(0, -1),
        }
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Digit::Zero => "0",
            Digit::One => "1",
            Digit::NegOne => "-1",
            Digit::I => "i",
            Digit::NegI => "-i",
        })
    }
}

/// Digits `v_0, v_1, ...`, least significant first, standing for `sum v_j (1+i)^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Expansion {
    pub digits: Vec<Digit>,
}

impl Expansion {
    pub fn new(digits: Vec<Digit>) -> Self {
        Expansion { digits }
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn value(&self) -> Result<GaussInt> {
        eval_expansion(self)
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (idx, d) in self.digits.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

pub fn b_member(n: u32, z: GaussInt) -> bool {
    let Ok(depth) = z.two_adic_depth() else {
        return true;
    };
    let n = n.min(LEVEL_CLAMP);
    if depth > n / 2 {
        return false;
    }
    let step = 1i128 << depth;
    i128::from(z.max_abs()) <= w_wide(n) - 2 * step && (z.l1() as i128) <= w_wide(n + 1) - 3 * step
}

/// The minimal Euclidean function: the least `n` with `z` in `B_n`.
pub fn phi(z: GaussInt) -> Result<u32> {
    let depth = z.two_adic_depth().map_err(|_| Error::UndefinedForZero("phi"))?;
    (2 * depth..=LEVEL_CLAMP)
        .find(|&n| b_member(n, z))
        .ok_or(Error::Overflow("phi"))
}

/// `floor(log2 |x|)`, the minimal Euclidean function on the rational integers.
pub fn phi_int(x: i64) -> Result<u32> {
    if x == 0 {
        return Err(Error::UndefinedForZero("phi_int"));
    }
    Ok(63 - x.unsigned_abs().leading_zeros())
}

/// All of `B_n`, zero included, sorted by `(re, im)`.
pub fn enumerate_b(n: u32) -> Result<Vec<GaussInt>> {
    let next = n.checked_add(1).ok_or(Error::Overflow("enumerate_b"))?;
    let diag = w(next)?;
    if i64::try_from(diag).is_err() {
        return Err(Error::Overflow("enumerate_b"));
    }
    let bound = (w(n)? - 2) as i64;
    let rows: Vec<Vec<GaussInt>> = (-bound..=bound)
        .into_par_iter()
        .map(|re| {
            (-bound..=bound)
                .map(|im| GaussInt::new(re, im))
                .filter(|&z| b_member(n, z))
                .collect()
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

pub fn eval_expansion(e: &Expansion) -> Result<GaussInt> {
    e.digits.iter().rev().try_fold(GaussInt::ZERO, |acc, d| {
        acc.checked_mul(GaussInt::ONE_PLUS_I)?.checked_add(d.value())
    })
}

/// A shortest expansion of `z` using at most `cap + 1` digits.
///
/// The lowest digit is forced up to a unit: it is `0` exactly when `1+i`
/// divides the current value, and otherwise any of the four units works.
/// The search therefore walks values `(z - v_0) / (1+i)` breadth first;
/// a value seen at an earlier depth is never revisited.
pub fn expand_min(z: GaussInt, cap: u32) -> Result<Option<Expansion>> {
    if z.is_zero() {
        return Ok(Some(Expansion::default()));
    }
    let mut parent: HashMap<GaussInt, (GaussInt, Digit)> = HashMap::new();
    parent.insert(z, (z, Digit::Zero));
    let mut frontier = vec![z];

    for _ in 0..=cap {
        let mut next_frontier = Vec::new();
        for &state in &frontier {
            let choices: &[Digit] = if GaussInt::ONE_PLUS_I.divides(state)? {
                &[Digit::Zero]
            } else {
                &Digit::UNITS
            };
            for &digit in choices {
                let next = state
                    .checked_sub(digit.value())?
                    .try_div(GaussInt::ONE_PLUS_I)?
                    .expect("digit choice leaves a multiple of 1+i");
                if next.is_zero() {
                    return Ok(Some(rebuild(&parent, z, state, digit)));
                }
                if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry(next) {
                    slot.insert((state, digit));
                    next_frontier.push(next);
                }
            }
        }
        frontier = next_frontier;
    }
    Ok(None)
}

fn rebuild(
    parent: &HashMap<GaussInt, (GaussInt, Digit)>,
    root: GaussInt,
    last: GaussInt,
    last_digit: Digit,
) -> Expansion {
    let mut digits = vec![last_digit];
    let mut cursor = last;
    while cursor != root {
        let (prev, digit) = parent[&cursor];
        digits.push(digit);
        cursor = prev;
    }
    digits.reverse();
    Expansion::new(digits)
}
