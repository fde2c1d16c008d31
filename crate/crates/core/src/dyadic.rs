//! Exact non-negative dyadic rationals `p / 2^e`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// A non-negative dyadic rational `numerator / 2^exponent`.
///
/// Values are kept canonical: the exponent is as small as possible, so
/// either `exponent == 0` or the numerator is odd. Zero is `0 / 2^0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigUint,
    exponent: u64,
}

impl Dyadic {
    pub fn new(numerator: BigUint, exponent: u64) -> Self {
        let mut d = Dyadic {
            numerator,
            exponent,
        };
        d.canonicalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic {
            numerator: BigUint::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic::from_integer(1)
    }

    pub fn from_integer(value: u64) -> Self {
        Dyadic {
            numerator: BigUint::from(value),
            exponent: 0,
        }
    }

    /// `2^-power`.
    pub fn pow2_neg(power: u64) -> Self {
        Dyadic {
            numerator: BigUint::one(),
            exponent: power,
        }
    }

    /// `count * 2^-power`.
    pub fn scaled_pow2_neg(count: u64, power: u64) -> Self {
        Dyadic::new(BigUint::from(count), power)
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0 && self.numerator.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<&BigUint> {
        self.is_integer().then_some(&self.numerator)
    }

    /// The value as a `u64`, if it is an integer that fits.
    pub fn to_u64(&self) -> Option<u64> {
        self.to_integer().and_then(|n| n.to_u64())
    }

    /// Multiply by `2^power`.
    pub fn mul_pow2(&self, power: u64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        if power <= self.exponent {
            Dyadic {
                numerator: self.numerator.clone(),
                exponent: self.exponent - power,
            }
        } else {
            Dyadic {
                numerator: &self.numerator << (power - self.exponent),
                exponent: 0,
            }
        }
    }

    /// `self - other`, or `None` when the result would be negative.
    pub fn checked_sub(&self, other: &Dyadic) -> Option<Dyadic> {
        let exponent = self.exponent.max(other.exponent);
        let a = self.aligned(exponent);
        let b = other.aligned(exponent);
        if a < b {
            None
        } else {
            Some(Dyadic::new(a - b, exponent))
        }
    }

    /// Numerator over `2^exponent`; `exponent` must be at least `self.exponent`.
    fn aligned(&self, exponent: u64) -> BigUint {
        debug_assert!(exponent >= self.exponent);
        &self.numerator << (exponent - self.exponent)
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.numerator.trailing_zeros().unwrap_or(0);
        let shift = tz.min(self.exponent);
        if shift > 0 {
            self.numerator >>= shift;
            self.exponent -= shift;
        }
    }

    /// Exact sum of `2^-l` over `lengths`.
    ///
    /// Equal lengths are bucketed first so the number of big-integer
    /// additions is the number of distinct lengths.
    pub fn kraft_sum_of<I>(lengths: I) -> Dyadic
    where
        I: IntoIterator<Item = u32>,
    {
        let mut histogram: Vec<(u32, u64)> = Vec::new();
        let mut sorted: Vec<u32> = lengths.into_iter().collect();
        sorted.sort_unstable();
        for l in sorted {
            match histogram.last_mut() {
                Some((v, c)) if *v == l => *c += 1,
                _ => histogram.push((l, 1)),
            }
        }
        let Some(&(deepest, _)) = histogram.last() else {
            return Dyadic::zero();
        };
        let mut numerator = BigUint::zero();
        for (l, count) in histogram {
            numerator += BigUint::from(count) << (deepest - l);
        }
        Dyadic::new(numerator, deepest as u64)
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl Add<&Dyadic> for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exponent = self.exponent.max(rhs.exponent);
        Dyadic::new(self.aligned(exponent) + rhs.aligned(exponent), exponent)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl AddAssign<&Dyadic> for Dyadic {
    fn add_assign(&mut self, rhs: &Dyadic) {
        if rhs.exponent <= self.exponent {
            self.numerator += rhs.aligned(self.exponent);
        } else {
            self.numerator = self.aligned(rhs.exponent) + &rhs.numerator;
            self.exponent = rhs.exponent;
        }
        self.canonicalize();
    }
}

impl AddAssign for Dyadic {
    fn add_assign(&mut self, rhs: Dyadic) {
        *self += &rhs;
    }
}

impl Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Self {
        iter.fold(Dyadic::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Dyadic> for Dyadic {
    fn sum<I: Iterator<Item = &'a Dyadic>>(iter: I) -> Self {
        iter.fold(Dyadic::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exponent = self.exponent.max(other.exponent);
        self.aligned(exponent).cmp(&other.aligned(exponent))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integers print bare; everything else prints as `p/q` with `q = 2^e`
/// written out in decimal, e.g. `3/8`.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            let denominator = BigUint::one() << self.exponent;
            write!(f, "{}/{}", self.numerator, denominator)
        }
    }
}
