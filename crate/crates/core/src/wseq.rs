//! The bound sequence `w_k` and the octagons `Oct_n` built from it.
//!
//! `w_{2n} = 3 * 2^n` and `w_{2n+1} = 2^{n+2}`, so `w_k = 2 w_{k-2}` for `k >= 2`.

use crate::error::{Error, Result};
use crate::gaussint::GaussInt;

/// Largest index for which [`w_wide`] is exact. Membership questions about
/// `i64` coordinates are settled long before this.
pub(crate) const WIDE_LIMIT: u32 = 240;

pub fn w(k: u32) -> Result<u64> {
    let half = k / 2;
    let value = if k.is_multiple_of(2) {
        3u64.checked_mul(1u64.checked_shl(half).ok_or(Error::Overflow("w"))?)
    } else {
        1u64.checked_shl(half + 2)
    };
    value.ok_or(Error::Overflow("w"))
}

/// `w_k` as an `i128`, for `k <= WIDE_LIMIT`.
pub(crate) fn w_wide(k: u32) -> i128 {
    assert!(k <= WIDE_LIMIT, "w_wide index {k} out of range");
    let half = k / 2;
    if k.is_multiple_of(2) {
        3i128 << half
    } else {
        1i128 << (half + 2)
    }
}

/// Bounds of `Oct_n`: `max(|x|,|y|) <= box_bound` and `|x| + |y| <= diag_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OctSpec {
    pub n: u32,
    pub box_bound: u64,
    pub diag_bound: u64,
}

pub fn oct_spec(n: u32) -> Result<OctSpec> {
    Ok(OctSpec { n, box_bound: w(n)? - 2, diag_bound: w(n.checked_add(1).ok_or(Error::Overflow("w"))?)? - 3 })
}

impl OctSpec {
    pub fn contains(&self, z: GaussInt) -> bool {
        z.max_abs() <= self.box_bound && z.l1() <= u128::from(self.diag_bound)
    }

    /// The eight corners of the octagon, counter-clockwise from the positive real axis.
    pub fn vertices(&self) -> [(i64, i64); 8] {
        let b = self.box_bound as i64;
        let c = self.diag_bound as i64 - b;
        [(b, c), (c, b), (-c, b), (-b, c), (-b, -c), (-c, -b), (c, -b), (b, -c)]
    }
}

pub fn oct_contains(n: u32, z: GaussInt) -> bool {
    let n = n.min(WIDE_LIMIT - 1);
    let box_bound = w_wide(n) - 2;
    let diag_bound = w_wide(n + 1) - 3;
    i128::from(z.max_abs()) <= box_bound && (z.l1() as i128) <= diag_bound
}
