//! Exact integer coefficients: machine words that escalate to arbitrary
//! precision on overflow.
//!
//! All coefficient arithmetic in this crate goes through [`Int`]. The fast
//! path is a plain `i64`; any operation that would overflow promotes to a
//! heap-allocated big integer, so results are exact unconditionally. Values
//! are renormalized on construction, which keeps `Eq`/`Ord`/`Hash` consistent
//! across the two representations.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    /// Wraps a big integer, demoting it to the small representation when it
    /// fits. Every `Big` value held by an `Int` is out of `i64` range.
    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(Box::new(b)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn signum(&self) -> i64 {
        match self {
            Int::Small(v) => v.signum(),
            Int::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => {
                // i64::MIN has no positive counterpart; fall through to BigInt.
                if *a != i64::MIN && *b != i64::MIN {
                    return Int::Small(a.abs().gcd(&b.abs()));
                }
                Int::from_big(self.to_bigint().gcd(&other.to_bigint()))
            }
            _ => Int::from_big(self.to_bigint().gcd(&other.to_bigint())),
        }
    }

    /// Floor division paired with the nonnegative-remainder convention used
    /// by the Hermite reduction.
    pub fn div_mod_floor(&self, other: &Int) -> (Int, Int) {
        assert!(!other.is_zero(), "division by zero");
        match (self, other) {
            (Int::Small(a), Int::Small(b)) if !(*a == i64::MIN && *b == -1) => {
                let (q, r) = a.div_mod_floor(b);
                (Int::Small(q), Int::Small(r))
            }
            _ => {
                let (q, r) = self.to_bigint().div_mod_floor(&other.to_bigint());
                (Int::from_big(q), Int::from_big(r))
            }
        }
    }

    /// Division that must be exact; panics on a nonzero remainder.
    pub fn div_exact(&self, other: &Int) -> Int {
        let (q, r) = self.div_mod_floor(other);
        assert!(r.is_zero(), "inexact division");
        q
    }

    /// `n!` as an exact integer.
    pub fn factorial(n: usize) -> Int {
        let mut acc = Int::ONE;
        for i in 1..=n {
            acc *= Int::from(i);
        }
        acc
    }

    /// Binomial coefficient `C(m, k)` for an arbitrary (possibly negative)
    /// integer argument `m`, by the falling-factorial formula.
    pub fn binomial(m: &Int, k: usize) -> Int {
        let mut acc = Int::ONE;
        for i in 0..k {
            acc *= &(m - &Int::from(i));
            acc = acc.div_exact(&Int::from(i + 1));
        }
        acc
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

macro_rules! int_from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Int {
            fn from(v: $t) -> Int {
                match i64::try_from(v) {
                    Ok(v) => Int::Small(v),
                    Err(_) => Int::from_big(BigInt::from(v)),
                }
            }
        }
    )*};
}
int_from_prim!(i32, i64, u32, u64, usize, isize);

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_big(b)
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Int) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            (Int::Small(_), Int::Big(b)) => {
                if b.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Int::Big(a), Int::Small(_)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            (Int::Big(a), Int::Big(b)) => a.cmp(b),
        }
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl Add for &Int {
    type Output = Int;
    fn add(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_add(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) + BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_bigint() + rhs.to_bigint()),
        }
    }
}

impl Sub for &Int {
    type Output = Int;
    fn sub(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_sub(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) - BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_bigint() - rhs.to_bigint()),
        }
    }
}

impl Mul for &Int {
    type Output = Int;
    fn mul(self, rhs: &Int) -> Int {
        match (self, rhs) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_big(BigInt::from(*a) * BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_bigint() * rhs.to_bigint()),
        }
    }
}

macro_rules! int_owned_ops {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for Int {
            type Output = Int;
            fn $method(self, rhs: Int) -> Int {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Int> for Int {
            type Output = Int;
            fn $method(self, rhs: &Int) -> Int {
                (&self).$method(rhs)
            }
        }
    )*};
}
int_owned_ops!(Add, add; Sub, sub; Mul, mul);

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Int {
    fn add_assign(&mut self, rhs: Int) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        *self = &*self - rhs;
    }
}

impl SubAssign for Int {
    fn sub_assign(&mut self, rhs: Int) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<&Int> for Int {
    fn mul_assign(&mut self, rhs: &Int) {
        *self = &*self * rhs;
    }
}

impl MulAssign for Int {
    fn mul_assign(&mut self, rhs: Int) {
        *self = &*self * &rhs;
    }
}

impl Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        iter.fold(Int::ZERO, |acc, v| acc + v)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<i64>() {
            Ok(v) => Ok(Int::Small(v)),
            Err(_) => Ok(Int::from_big(s.parse::<BigInt>()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn escalates_on_overflow_and_renormalizes() {
        let big = Int::from(i64::MAX) + Int::ONE;
        assert!(matches!(big, Int::Big(_)));
        let back = big - Int::ONE;
        assert_eq!(back, Int::from(i64::MAX));
        assert!(matches!(back, Int::Small(_)));

        let neg = -Int::from(i64::MIN);
        assert!(matches!(neg, Int::Big(_)));
        assert_eq!(-neg, Int::from(i64::MIN));
    }

    #[test]
    fn mixed_representation_ordering() {
        let big = Int::from(i64::MAX) * Int::from(4);
        assert!(Int::from(7) < big);
        assert!(-&big < Int::from(-7));
        assert!(-&big < big);
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(Int::factorial(6), Int::from(720));
        // 25! overflows i64.
        let f25 = Int::factorial(25);
        assert_eq!(f25.to_string(), "15511210043330985984000000");
        assert_eq!(Int::binomial(&Int::from(6), 2), Int::from(15));
        assert_eq!(Int::binomial(&Int::from(3), 5), Int::ZERO);
        // C(-m, k) = (-1)^k C(m+k-1, k).
        assert_eq!(Int::binomial(&Int::from(-4), 3), Int::from(-20));
    }

    #[test]
    fn floor_division() {
        let (q, r) = Int::from(-7).div_mod_floor(&Int::from(3));
        assert_eq!((q, r), (Int::from(-3), Int::from(2)));
        assert_eq!(Int::from(-12).div_exact(&Int::from(4)), Int::from(-3));
    }

    #[test]
    fn parses_both_widths() {
        assert_eq!("-42".parse::<Int>().unwrap(), Int::from(-42));
        let s = "123456789012345678901234567890";
        assert_eq!(s.parse::<Int>().unwrap().to_string(), s);
    }
}
