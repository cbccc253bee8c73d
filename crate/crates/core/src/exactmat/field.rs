//! Scalar fields used by the dense matrix code.
//!
//! Everything over the rationals runs on [`Rational`] (normalized big
//! rationals). The small prime fields [`Fp`] exist so the same closure
//! algorithms can be cross-checked against brute-force enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::CoreError;

/// Exact rational number; numerator and denominator are kept coprime with a
/// positive denominator by every operation.
pub type Rational = BigRational;

/// Minimal field interface for the elimination routines.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    /// Size estimate used by the pivot choice: smaller is preferred.
    fn pivot_cost(&self) -> u64;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    fn from_i64(v: i64) -> Self;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn pivot_cost(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p"` or `"p/q"` with an optional sign on `p` and `q > 0`.
pub fn parse_rational(text: &str) -> Result<Rational, CoreError> {
    let bad = || CoreError::MalformedRational(text.to_string());
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix(['-', '+']).unwrap_or(num);
    if !digits(unsigned) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad())?,
        Some(_) => return Err(bad()),
        None => BigInt::one(),
    };
    if !denom.is_positive() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Integer residues modulo a small prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    /// Reduces an integral rational modulo `P`; `None` if the denominator is
    /// divisible by `P`.
    pub fn reduce(q: &Rational) -> Option<Self> {
        let p = BigInt::from(P);
        let den = q.denom() % &p;
        if den.is_zero() {
            return None;
        }
        let num = ((q.numer() % &p) + &p) % &p;
        let num = Fp::<P>(num.try_into().expect("residue fits in u32"));
        let den = Fp::<P>(((den + &p) % &p).try_into().expect("residue fits in u32"));
        Some(Field::mul(&num, &Field::inv(&den)))
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp(((self.0 as u64 + other.0 as u64) % P as u64) as u32)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - other.0 as u64) % P as u64) as u32)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u64 * other.0 as u64) % P as u64) as u32)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Fermat: a^(P-2).
        let mut base = self.0 as u64;
        let mut exp = P as u64 - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % P as u64;
            }
            base = base * base % P as u64;
            exp >>= 1;
        }
        Fp(acc as u32)
    }
    fn pivot_cost(&self) -> u64 {
        0
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}
