//! Arbitrary-precision rational with an inline i64 fast path.
//!
//! Group-closure products keep entries tiny (quarters of small integers), so
//! nearly all arithmetic stays on the machine-word path; values that stop
//! fitting are promoted to `BigRational` transparently. Canonical invariant:
//! always in lowest terms with positive denominator, and the `Big` variant
//! holds only values that do not fit the small one, so derived equality and
//! hashing are exact value equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Debug, Clone)]
pub enum Rat {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

impl Rat {
    pub const ZERO: Rat = Rat::Small { num: 0, den: 1 };
    pub const ONE: Rat = Rat::Small { num: 1, den: 1 };

    pub fn from_i64(v: i64) -> Rat {
        Rat::Small { num: v, den: 1 }
    }

    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        normalize_i128(num as i128, den as i128)
    }

    pub fn from_big(r: BigRational) -> Rat {
        demote(r)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Small { num, den } => {
                BigRational::new(BigInt::from(*num), BigInt::from(*den))
            }
            Rat::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Small { num: 0, .. })
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Small { num, .. } => *num < 0,
            Rat::Big(b) => b.is_negative(),
        }
    }

    pub fn sign(&self) -> Ordering {
        match self {
            Rat::Small { num, .. } => num.cmp(&0),
            Rat::Big(b) => {
                if b.is_negative() {
                    Ordering::Less
                } else if b.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn recip(&self) -> Rat {
        match self {
            Rat::Small { num, den } => {
                assert!(*num != 0, "division by zero");
                normalize_i128(*den as i128, *num as i128)
            }
            Rat::Big(b) => {
                assert!(!b.is_zero(), "division by zero");
                demote(b.recip())
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::Small { num, den } => *num as f64 / *den as f64,
            Rat::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Exact square root if the value is a perfect square of a rational.
    pub fn sqrt(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        match self {
            Rat::Small { num, den } => {
                let n = isqrt_exact(*num as u64)?;
                let d = isqrt_exact(*den as u64)?;
                Some(Rat::Small {
                    num: n as i64,
                    den: d as i64,
                })
            }
            Rat::Big(b) => {
                let n = big_isqrt_exact(b.numer())?;
                let d = big_isqrt_exact(b.denom())?;
                Some(demote(BigRational::new(n, d)))
            }
        }
    }
}

fn isqrt_exact(v: u64) -> Option<u64> {
    let mut s = (v as f64).sqrt() as u64;
    while s * s > v {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|q| q <= v) {
        s += 1;
    }
    (s * s == v).then_some(s)
}

fn big_isqrt_exact(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let s = v.sqrt();
    (&s * &s == *v).then_some(s)
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Reduce and pack an i128 fraction, promoting when it does not fit i64.
fn normalize_i128(mut num: i128, mut den: i128) -> Rat {
    debug_assert!(den != 0);
    if den < 0 {
        num = -num;
        den = -den;
    }
    if num == 0 {
        return Rat::ZERO;
    }
    let g = gcd_i128(num, den);
    num /= g;
    den /= g;
    if let (Ok(n), Ok(d)) = (i64::try_from(num), i64::try_from(den)) {
        Rat::Small { num: n, den: d }
    } else {
        Rat::Big(Box::new(BigRational::new(num.into(), den.into())))
    }
}

fn demote(r: BigRational) -> Rat {
    if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
        Rat::Small { num: n, den: d }
    } else {
        Rat::Big(Box::new(r))
    }
}

impl Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        match (self, rhs) {
            (Rat::Small { num: n1, den: d1 }, Rat::Small { num: n2, den: d2 }) => {
                let (n1, d1, n2, d2) = (*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128);
                normalize_i128(n1 * d2 + n2 * d1, d1 * d2)
            }
            _ => demote(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        match (self, rhs) {
            (Rat::Small { num: n1, den: d1 }, Rat::Small { num: n2, den: d2 }) => {
                let (n1, d1, n2, d2) = (*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128);
                normalize_i128(n1 * d2 - n2 * d1, d1 * d2)
            }
            _ => demote(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        match (self, rhs) {
            (Rat::Small { num: n1, den: d1 }, Rat::Small { num: n2, den: d2 }) => {
                normalize_i128(*n1 as i128 * *n2 as i128, *d1 as i128 * *d2 as i128)
            }
            _ => demote(self.to_big() * rhs.to_big()),
        }
    }
}

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        match (self, rhs) {
            (Rat::Small { num: n1, den: d1 }, Rat::Small { num: n2, den: d2 }) => {
                normalize_i128(*n1 as i128 * *d2 as i128, *d1 as i128 * *n2 as i128)
            }
            _ => demote(self.to_big() / rhs.to_big()),
        }
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match self {
            Rat::Small { num, den } => normalize_i128(-(*num as i128), *den as i128),
            Rat::Big(b) => Rat::Big(Box::new(-(**b).clone())),
        }
    }
}

macro_rules! forward_rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_rat_binop!(Add, add);
forward_rat_binop!(Sub, sub);
forward_rat_binop!(Mul, mul);
forward_rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl PartialEq for Rat {
    fn eq(&self, other: &Self) -> bool {
        // canonical form makes structural equality value equality
        match (self, other) {
            (Rat::Small { num: n1, den: d1 }, Rat::Small { num: n2, den: d2 }) => {
                n1 == n2 && d1 == d2
            }
            (Rat::Big(a), Rat::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rat {}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rat::Small { num: n1, den: d1 }, Rat::Small { num: n2, den: d2 }) => {
                (*n1 as i128 * *d2 as i128).cmp(&(*n2 as i128 * *d1 as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Hash for Rat {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rat::Small { num, den } => {
                0u8.hash(state);
                num.hash(state);
                den.hash(state);
            }
            Rat::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Small { num, den } => {
                if *den == 1 {
                    write!(f, "{num}")
                } else {
                    write!(f, "{num}/{den}")
                }
            }
            Rat::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Rat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, String> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|e| format!("bad integer '{t}': {e}"))
        };
        let r = match s.split_once('/') {
            None => BigRational::from_integer(parse_int(s)?),
            Some((p, q)) => {
                let den = parse_int(q)?;
                if den.is_zero() {
                    return Err("zero denominator".into());
                }
                BigRational::new(parse_int(p)?, den)
            }
        };
        Ok(demote(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_reduces() {
        let a = Rat::new(6, 4);
        assert_eq!(a, Rat::new(3, 2));
        assert_eq!(&a + &Rat::new(1, 2), Rat::from_i64(2));
        assert_eq!(&a * &Rat::new(2, 3), Rat::ONE);
        assert_eq!((&a - &a), Rat::ZERO);
        assert_eq!(Rat::new(-2, -4), Rat::new(1, 2));
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
    }

    #[test]
    fn promotion_and_demotion_roundtrip() {
        let big = Rat::from_i64(i64::MAX);
        let sq = &big * &big; // overflows i64, promotes
        assert!(matches!(sq, Rat::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Rat::Small { .. }));
    }

    #[test]
    fn ordering_and_sign() {
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert!(Rat::new(-1, 2) < Rat::ZERO);
        assert_eq!(Rat::new(7, 7).sign(), Ordering::Greater);
    }

    #[test]
    fn sqrt_paths() {
        assert_eq!(Rat::new(9, 4).sqrt(), Some(Rat::new(3, 2)));
        assert_eq!(Rat::new(2, 1).sqrt(), None);
        assert_eq!(Rat::new(-4, 1).sqrt(), None);
        let big = &Rat::from_i64(i64::MAX) * &Rat::from_i64(i64::MAX);
        assert_eq!(big.sqrt(), Some(Rat::from_i64(i64::MAX)));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/4".parse::<Rat>().unwrap(), Rat::new(3, 4));
        assert_eq!("-6/8".parse::<Rat>().unwrap(), Rat::new(-3, 4));
        assert_eq!("5".parse::<Rat>().unwrap(), Rat::from_i64(5));
        assert_eq!(Rat::new(-3, 4).to_string(), "-3/4");
        assert_eq!(Rat::from_i64(7).to_string(), "7");
        // beyond i64 (odd numerator keeps the fraction irreducible)
        let huge = "98765432109876543210987654321/2".parse::<Rat>().unwrap();
        assert!(matches!(huge, Rat::Big(_)));
        assert_eq!(huge.to_string(), "98765432109876543210987654321/2");
    }
}
