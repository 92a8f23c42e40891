//! Exact arithmetic on the Gaussian integers `a + bi`.
//!
//! Coordinates are `i64`. Every operation either returns the exact result
//! or reports [`Error::Overflow`]; the `std::ops` impls are thin wrappers
//! that panic on overflow instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

/// One of the four units of the Gaussian integers.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash)]
pub enum Unit {
    One,
    NegOne,
    I,
    NegI,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::NegOne, Unit::I, Unit::NegI];

    pub fn value(self) -> GaussInt {
        match self {
            Unit::One => GaussInt::ONE,
            Unit::NegOne => GaussInt::new(-1, 0),
            Unit::I => GaussInt::I,
            Unit::NegI => GaussInt::new(0, -1),
        }
    }

    pub fn from_value(z: GaussInt) -> Option<Unit> {
        match (z.re, z.im) {
            (1, 0) => Some(Unit::One),
            (-1, 0) => Some(Unit::NegOne),
            (0, 1) => Some(Unit::I),
            (0, -1) => Some(Unit::NegI),
            _ => None,
        }
    }

    pub fn times(self, other: Unit) -> Unit {
        Unit::from_value(self.value() * other.value()).expect("units are closed under products")
    }

    pub fn conj(self) -> Unit {
        match self {
            Unit::I => Unit::NegI,
            Unit::NegI => Unit::I,
            u => u,
        }
    }

    /// Rotate `z` by this unit. Never overflows except for `i64::MIN` coordinates.
    pub fn apply(self, z: GaussInt) -> Result<GaussInt> {
        self.value().checked_mul(z)
    }
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };
    /// The prime `1 + i` lying over 2.
    pub const ONE_PLUS_I: GaussInt = GaussInt { re: 1, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn is_unit(self) -> bool {
        Unit::from_value(self).is_some()
    }

    pub fn checked_add(self, rhs: GaussInt) -> Result<GaussInt> {
        Ok(GaussInt {
            re: self.re.checked_add(rhs.re).ok_or(Error::Overflow("add"))?,
            im: self.im.checked_add(rhs.im).ok_or(Error::Overflow("add"))?,
        })
    }

    pub fn checked_sub(self, rhs: GaussInt) -> Result<GaussInt> {
        Ok(GaussInt {
            re: self.re.checked_sub(rhs.re).ok_or(Error::Overflow("sub"))?,
            im: self.im.checked_sub(rhs.im).ok_or(Error::Overflow("sub"))?,
        })
    }

    pub fn checked_neg(self) -> Result<GaussInt> {
        Ok(GaussInt {
            re: self.re.checked_neg().ok_or(Error::Overflow("neg"))?,
            im: self.im.checked_neg().ok_or(Error::Overflow("neg"))?,
        })
    }

    pub fn checked_mul(self, rhs: GaussInt) -> Result<GaussInt> {
        let (a, b) = (i128::from(self.re), i128::from(self.im));
        let (c, d) = (i128::from(rhs.re), i128::from(rhs.im));
        GaussInt::from_wide(a * c - b * d, a * d + b * c).ok_or(Error::Overflow("mul"))
    }

    pub fn checked_pow(self, exp: u32) -> Result<GaussInt> {
        let mut acc = GaussInt::ONE;
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Scale both coordinates by a rational integer.
    pub fn checked_scale(self, k: i64) -> Result<GaussInt> {
        Ok(GaussInt {
            re: self.re.checked_mul(k).ok_or(Error::Overflow("scale"))?,
            im: self.im.checked_mul(k).ok_or(Error::Overflow("scale"))?,
        })
    }

    pub(crate) fn from_wide(re: i128, im: i128) -> Option<GaussInt> {
        Some(GaussInt { re: i64::try_from(re).ok()?, im: i64::try_from(im).ok()? })
    }

    pub fn conj(self) -> GaussInt {
        GaussInt { re: self.re, im: self.im.checked_neg().expect("Gaussian integer overflow") }
    }

    /// `a^2 + b^2`. Exact for every pair of `i64` coordinates, so this cannot overflow.
    pub fn norm(self) -> u128 {
        let a = self.re.unsigned_abs() as u128;
        let b = self.im.unsigned_abs() as u128;
        a * a + b * b
    }

    /// The unit multiples `{a, -a, ia, -ia}`; just `{0}` for zero.
    pub fn associates(self) -> Vec<GaussInt> {
        if self.is_zero() {
            return vec![GaussInt::ZERO];
        }
        Unit::ALL.iter().map(|u| u.value() * self).collect()
    }

    /// The associate in the half-open first quadrant (`re > 0, im >= 0`).
    pub fn normalize_associate(self) -> GaussInt {
        if self.is_zero() {
            return self;
        }
        self.associates()
            .into_iter()
            .find(|z| z.re > 0 && z.im >= 0)
            .expect("every nonzero Gaussian integer has a first-quadrant associate")
    }

    pub fn is_associate_of(self, other: GaussInt) -> bool {
        self.normalize_associate() == other.normalize_associate()
    }

    /// Exact quotient `self / divisor` when it exists.
    pub fn try_div(self, divisor: GaussInt) -> Result<Option<GaussInt>> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = divisor.norm() as i128;
        let (re, im) = self.mul_conj_wide(divisor);
        if re % n != 0 || im % n != 0 {
            return Ok(None);
        }
        Ok(Some(GaussInt::from_wide(re / n, im / n).ok_or(Error::Overflow("try_div"))?))
    }

    pub fn divides(self, dividend: GaussInt) -> Result<bool> {
        Ok(dividend.try_div(self)?.is_some())
    }

    /// Coordinates of `self * conj(other)`, computed without overflow.
    pub(crate) fn mul_conj_wide(self, other: GaussInt) -> (i128, i128) {
        let (a, b) = (i128::from(self.re), i128::from(self.im));
        let (c, d) = (i128::from(other.re), -i128::from(other.im));
        (a * c - b * d, a * d + b * c)
    }

    /// Largest `j` with `2^j` dividing both coordinates.
    pub fn two_adic_depth(self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::UndefinedForZero("two_adic_depth"));
        }
        let tz = |x: i64| if x == 0 { u32::MAX } else { x.trailing_zeros() };
        Ok(tz(self.re).min(tz(self.im)))
    }

    /// Largest `k` with `(1+i)^k` dividing `self`; equals the 2-adic valuation of the norm.
    pub fn onepi_valuation(self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::UndefinedForZero("onepi_valuation"));
        }
        Ok(self.norm().trailing_zeros())
    }

    pub fn max_abs(self) -> u64 {
        self.re.unsigned_abs().max(self.im.unsigned_abs())
    }

    pub fn l1(self) -> u128 {
        self.re.unsigned_abs() as u128 + self.im.unsigned_abs() as u128
    }
}

impl From<i64> for GaussInt {
    fn from(re: i64) -> Self {
        GaussInt::new(re, 0)
    }
}

impl From<Unit> for GaussInt {
    fn from(u: Unit) -> Self {
        u.value()
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        self.checked_add(rhs).expect("Gaussian integer overflow")
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        self.checked_sub(rhs).expect("Gaussian integer overflow")
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        self.checked_mul(rhs).expect("Gaussian integer overflow")
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        self.checked_neg().expect("Gaussian integer overflow")
    }
}

impl fmt::Display for GaussInt {
    /// Always prints both parts: `4+1i`, `1-1i`, `0+1i`, `-3+0i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im < 0 { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.unsigned_abs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid Gaussian integer literal {0:?}")]
pub struct ParseGaussIntError(pub String);

impl FromStr for GaussInt {
    type Err = ParseGaussIntError;

    /// Accepts `[-]D`, `[-]D(+|-)[D]i`, `[-][D]i`; `i` alone means `1i`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseGaussIntError(s.to_string());
        if s.is_empty() || s.chars().any(char::is_whitespace) {
            return Err(err());
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussInt::new(parse_int(s).ok_or_else(err)?, 0));
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(idx, _)| idx)
            .last();
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let re = parse_int(re_part).ok_or_else(err)?;
        let im = match im_part {
            "" | "+" => 1,
            "-" => -1,
            digits => {
                // A bare sign must be followed by digits; reject "2++3i" and friends.
                let unsigned = digits.strip_prefix(['+', '-']).unwrap_or(digits);
                if unsigned.is_empty() || !unsigned.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(err());
                }
                digits.parse::<i64>().map_err(|_| err())?
            }
        };
        Ok(GaussInt::new(re, im))
    }
}

fn parse_int(s: &str) -> Option<i64> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
