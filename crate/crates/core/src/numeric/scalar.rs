//! Scalar backends: exact `a + b·√5` over big rationals, exact rationals,
//! and `f64` with a per-run tolerance.
//!
//! All exact values are kept in lowest terms, so structural equality is exact
//! equality. Mixing backends in arithmetic is a programming error and panics;
//! input boundaries are responsible for validating that a matrix uses a
//! single backend.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::rat::Rat;

/// Which arithmetic a value (and everything it interacts with) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    /// `a + b√5` with arbitrary-precision rational `a`, `b`.
    QSqrt5,
    /// Arbitrary-precision rational.
    Rational,
    /// `f64` compared against a global tolerance fixed per analysis run.
    Float64,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::QSqrt5 => write!(f, "qsqrt5"),
            Backend::Rational => write!(f, "rational"),
            Backend::Float64 => write!(f, "float64"),
        }
    }
}

pub const SQRT5: f64 = 2.236_067_977_499_79_f64;

/// Grid pitch used to hash floats: entries are rounded to six decimals for
/// the hash key and confirmed with an epsilon comparison afterwards.
const FLOAT_GRID: f64 = 1e6;

/// A field element in one of the three backends.
#[derive(Debug, Clone)]
pub enum Scalar {
    Sqrt5 { a: Rat, b: Rat },
    Rational(Rat),
    Float(f64),
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Sqrt5 { .. } => Backend::QSqrt5,
            Scalar::Rational(_) => Backend::Rational,
            Scalar::Float(_) => Backend::Float64,
        }
    }

    pub fn zero(backend: Backend) -> Self {
        Scalar::from_int(0, backend)
    }

    pub fn one(backend: Backend) -> Self {
        Scalar::from_int(1, backend)
    }

    pub fn from_int(v: i64, backend: Backend) -> Self {
        match backend {
            Backend::QSqrt5 => Scalar::Sqrt5 {
                a: Rat::from_i64(v),
                b: Rat::ZERO,
            },
            Backend::Rational => Scalar::Rational(Rat::from_i64(v)),
            Backend::Float64 => Scalar::Float(v as f64),
        }
    }

    /// `p/q` in the given exact backend (float gets the quotient value).
    pub fn from_ratio(p: i64, q: i64, backend: Backend) -> Self {
        assert!(q != 0, "zero denominator");
        match backend {
            Backend::QSqrt5 => Scalar::Sqrt5 {
                a: Rat::new(p, q),
                b: Rat::ZERO,
            },
            Backend::Rational => Scalar::Rational(Rat::new(p, q)),
            Backend::Float64 => Scalar::Float(p as f64 / q as f64),
        }
    }

    /// `an/ad + (bn/bd)·√5` in the qsqrt5 backend.
    pub fn sqrt5_ratio(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        assert!(ad != 0 && bd != 0, "zero denominator");
        Scalar::Sqrt5 {
            a: Rat::new(an, ad),
            b: Rat::new(bn, bd),
        }
    }

    pub fn from_rat_parts(a: Rat, b: Rat) -> Self {
        Scalar::Sqrt5 { a, b }
    }

    /// The golden ratio `(1 + √5)/2`; exact in qsqrt5, a float otherwise.
    pub fn golden_ratio(backend: Backend) -> Self {
        match backend {
            Backend::QSqrt5 => Scalar::sqrt5_ratio(1, 2, 1, 2),
            Backend::Rational => panic!("golden ratio is not rational"),
            Backend::Float64 => Scalar::Float((1.0 + SQRT5) / 2.0),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Sqrt5 { a, b } => a.is_zero() && b.is_zero(),
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Float(x) => *x == 0.0,
        }
    }

    /// Zero test honouring the float tolerance; exact backends ignore `tol`.
    pub fn is_zero_within(&self, tol: f64) -> bool {
        match self {
            Scalar::Float(x) => x.abs() <= tol,
            _ => self.is_zero(),
        }
    }

    /// Backend equality: exact for exact backends, `|x−y| ≤ tol` for floats.
    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        match (self, other) {
            (Scalar::Float(x), Scalar::Float(y)) => (x - y).abs() <= tol,
            _ => self == other,
        }
    }

    /// Exact sign for exact backends; float sign uses the raw value.
    pub fn sign(&self) -> Ordering {
        match self {
            Scalar::Rational(r) => r.sign(),
            Scalar::Float(x) => x.partial_cmp(&0.0).expect("NaN scalar"),
            Scalar::Sqrt5 { a, b } => {
                // sign of a + b√5 without leaving the rationals
                match (a.sign(), b.sign()) {
                    (Ordering::Equal, s) | (s, Ordering::Equal) => s,
                    (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
                    (Ordering::Less, Ordering::Less) => Ordering::Less,
                    (sa, _) => {
                        // opposite signs: compare a² with 5b²
                        let a2 = a * a;
                        let b25 = &(b * b) * &Rat::from_i64(5);
                        match a2.cmp(&b25) {
                            Ordering::Greater => sa,
                            Ordering::Less => sa.reverse(),
                            Ordering::Equal => Ordering::Equal,
                        }
                    }
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Sqrt5 { a, b } => a.to_f64() + b.to_f64() * SQRT5,
            Scalar::Rational(r) => r.to_f64(),
            Scalar::Float(x) => *x,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rational(r.recip())
            }
            Scalar::Float(x) => Scalar::Float(1.0 / x),
            Scalar::Sqrt5 { a, b } => {
                // 1/(a + b√5) = (a − b√5)/(a² − 5b²)
                let norm = &(a * a) - &(&(b * b) * &Rat::from_i64(5));
                assert!(!norm.is_zero(), "division by zero");
                Scalar::Sqrt5 {
                    a: a / &norm,
                    b: -&(b / &norm),
                }
            }
        }
    }

    /// Square root inside the same field, if one exists.
    ///
    /// For `a + b√5` this solves `(x + y√5)² = a + b√5` as a rational system,
    /// so the result stays exact. Returns the nonnegative root.
    pub fn sqrt_in_field(&self) -> Option<Scalar> {
        match self {
            Scalar::Float(x) => {
                if *x < 0.0 {
                    None
                } else {
                    Some(Scalar::Float(x.sqrt()))
                }
            }
            Scalar::Rational(r) => r.sqrt().map(Scalar::Rational),
            Scalar::Sqrt5 { a, b } => {
                let five = Rat::from_i64(5);
                if b.is_zero() {
                    if let Some(x) = a.sqrt() {
                        return Some(Scalar::Sqrt5 { a: x, b: Rat::ZERO });
                    }
                    // a = 5y² for x = y√5
                    let y2 = a / &five;
                    return y2.sqrt().map(|y| Scalar::Sqrt5 { a: Rat::ZERO, b: y });
                }
                // x² + 5y² = a and 2xy = b  =>  4x⁴ − 4ax² + 5b² = 0
                let disc = &(a * a) - &(&five * &(b * b));
                let d = disc.sqrt()?;
                let two = Rat::from_i64(2);
                for root in [d.clone(), -&d] {
                    let x2 = &(a + &root) / &two;
                    if x2.is_negative() {
                        continue;
                    }
                    if let Some(x) = x2.sqrt() {
                        if x.is_zero() {
                            continue;
                        }
                        let y = b / &(&two * &x);
                        let cand = Scalar::Sqrt5 { a: x, b: y };
                        if cand.sign() == Ordering::Less {
                            return Some(-&cand);
                        }
                        return Some(cand);
                    }
                }
                None
            }
        }
    }

    /// Hashable key; floats are snapped to a 1e−6 grid and must be confirmed
    /// with `approx_eq` after a hash hit.
    pub fn key(&self) -> ScalarKey {
        match self {
            Scalar::Sqrt5 { a, b } => ScalarKey::Sqrt5(a.clone(), b.clone()),
            Scalar::Rational(r) => ScalarKey::Rational(r.clone()),
            Scalar::Float(x) => ScalarKey::Grid((x * FLOAT_GRID).round() as i64),
        }
    }

    pub(crate) fn convert(&self, backend: Backend) -> Scalar {
        match (self, backend) {
            (Scalar::Rational(r), Backend::QSqrt5) => Scalar::Sqrt5 {
                a: r.clone(),
                b: Rat::ZERO,
            },
            (s, Backend::Float64) => Scalar::Float(s.to_f64()),
            (s, t) if s.backend() == t => s.clone(),
            (s, t) => panic!("cannot convert {:?} to backend {t:?}", s.backend()),
        }
    }
}

fn mixed(op: &str, a: Backend, b: Backend) -> ! {
    panic!("mixed scalar backends in {op}: {a} vs {b}")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Sqrt5 { a, b }, Scalar::Sqrt5 { a: c, b: d }) => Scalar::Sqrt5 {
                a: a + c,
                b: b + d,
            },
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Float(x), Scalar::Float(y)) => Scalar::Float(x + y),
            _ => mixed("add", self.backend(), rhs.backend()),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Sqrt5 { a, b }, Scalar::Sqrt5 { a: c, b: d }) => Scalar::Sqrt5 {
                a: a - c,
                b: b - d,
            },
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x - y),
            (Scalar::Float(x), Scalar::Float(y)) => Scalar::Float(x - y),
            _ => mixed("sub", self.backend(), rhs.backend()),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Sqrt5 { a, b }, Scalar::Sqrt5 { a: c, b: d }) => {
                // (a + b√5)(c + d√5) = ac + 5bd + (ad + bc)√5
                let bd5 = &(b * d) * &Rat::from_i64(5);
                Scalar::Sqrt5 {
                    a: &(a * c) + &bd5,
                    b: &(a * d) + &(b * c),
                }
            }
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Float(x), Scalar::Float(y)) => Scalar::Float(x * y),
            _ => mixed("mul", self.backend(), rhs.backend()),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    // field division is multiplication by the inverse
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Sqrt5 { a, b } => Scalar::Sqrt5 { a: -a, b: -b },
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Structural equality: exact for exact backends, bitwise for floats.
/// Tolerance-aware comparison goes through [`Scalar::approx_eq`].
impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Sqrt5 { a, b }, Scalar::Sqrt5 { a: c, b: d }) => a == c && b == d,
            (Scalar::Rational(x), Scalar::Rational(y)) => x == y,
            (Scalar::Float(x), Scalar::Float(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Sqrt5 { a, b } => {
                0u8.hash(state);
                a.hash(state);
                b.hash(state);
            }
            Scalar::Rational(r) => {
                1u8.hash(state);
                r.hash(state);
            }
            Scalar::Float(x) => {
                2u8.hash(state);
                x.to_bits().hash(state);
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Sqrt5 { a, b } => {
                if b.is_zero() {
                    write!(f, "{a}")
                } else if b.is_negative() {
                    write!(f, "{a}-{}√5", -b)
                } else {
                    write!(f, "{a}+{b}√5")
                }
            }
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

/// Hash key for scalars; see [`Scalar::key`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScalarKey {
    Sqrt5(Rat, Rat),
    Rational(Rat),
    Grid(i64),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau() -> Scalar {
        Scalar::golden_ratio(Backend::QSqrt5)
    }

    #[test]
    fn golden_ratio_satisfies_its_equation() {
        let t = tau();
        assert_eq!(&t * &t, &t + &Scalar::one(Backend::QSqrt5));
        assert_eq!(t.inv(), &t - &Scalar::one(Backend::QSqrt5));
    }

    #[test]
    fn exact_values_stay_in_lowest_terms() {
        let x = Scalar::from_ratio(6, 4, Backend::Rational);
        assert_eq!(x, Scalar::from_ratio(3, 2, Backend::Rational));
        let y = &Scalar::from_ratio(1, 3, Backend::Rational) * &Scalar::from_ratio(3, 5, Backend::Rational);
        assert_eq!(y, Scalar::from_ratio(1, 5, Backend::Rational));
    }

    #[test]
    fn sqrt5_sign_without_floats() {
        // τ⁻¹ − 1/2 = (√5 − 2)/2 > 0, and its negation is negative
        let x = Scalar::sqrt5_ratio(-1, 1, 1, 2);
        assert_eq!(x.sign(), Ordering::Greater);
        assert_eq!((-&x).sign(), Ordering::Less);
        assert_eq!(Scalar::zero(Backend::QSqrt5).sign(), Ordering::Equal);
    }

    #[test]
    fn field_sqrt_roundtrips() {
        // sqrt of τ² = τ
        let t = tau();
        let sq = &t * &t;
        assert_eq!(sq.sqrt_in_field().unwrap(), t);
        // rational square
        let q = Scalar::from_ratio(9, 4, Backend::Rational);
        assert_eq!(q.sqrt_in_field().unwrap(), Scalar::from_ratio(3, 2, Backend::Rational));
        // 5 has a square root in the field: √5 itself
        let five = Scalar::from_int(5, Backend::QSqrt5);
        assert_eq!(five.sqrt_in_field().unwrap(), Scalar::sqrt5_ratio(0, 1, 1, 1));
        // 2 does not
        assert_eq!(Scalar::from_int(2, Backend::QSqrt5).sqrt_in_field(), None);
        assert_eq!(Scalar::from_int(2, Backend::Rational).sqrt_in_field(), None);
        // 10 + 2√5 does not (it's the square of 4·sin 72°, outside the field)
        let s = Scalar::sqrt5_ratio(10, 1, 2, 1);
        assert_eq!(s.sqrt_in_field(), None);
    }

    #[test]
    fn float_equality_uses_tolerance() {
        let a = Scalar::Float(1.0);
        let b = Scalar::Float(1.0 + 5e-9);
        assert!(a.approx_eq(&b, 1e-8));
        assert!(!a.approx_eq(&b, 1e-10));
        assert_eq!(a.key(), b.key());
    }

    #[test]
    #[should_panic(expected = "mixed scalar backends")]
    fn mixed_backend_arithmetic_panics() {
        let _ = &Scalar::one(Backend::Rational) + &Scalar::one(Backend::Float64);
    }
}
