//! Exact scalar types.
//!
//! Everything numeric in this crate is generic over [`Scalar`] (a commutative
//! ring with exact equality) or [`Field`] (a scalar with division). The
//! concrete instances are the prime fields [`Fp`], arbitrary-precision
//! integers and arbitrary-precision rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Exact commutative ring element.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + FromPrimitive
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Characteristic of the ring; `0` for the integers and rationals.
    fn characteristic() -> u64;

    /// Short tag used when serializing values (`"F3"`, `"Z"`, `"Q"`).
    fn tag() -> String;

    /// Image of an integer under the canonical ring map.
    fn from_bigint(value: &BigInt) -> Self;

    fn from_natural(value: usize) -> Self {
        <Self as FromPrimitive>::from_usize(value).expect("usize fits every scalar")
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// Exact field element.
pub trait Field: Scalar + Div<Output = Self> {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

pub(crate) const fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo the prime `P`.
///
/// The modulus is a type parameter, so mixing elements of different fields is
/// a type error. Instantiating a composite `P` fails at compile time.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const MODULUS_IS_PRIME: () = assert!(
        is_prime_u64(P) && P < (1 << 32),
        "Fp modulus must be a prime below 2^32"
    );

    pub fn new(value: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::MODULUS_IS_PRIME;
        Fp(value % P)
    }

    pub fn from_i64(value: i64) -> Self {
        Fp::new(value.rem_euclid(P as i64) as u64)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    pub const fn modulus() -> u64 {
        P
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F_{P}");
        // Fermat: rhs^(P-2) is the inverse.
        self * Scalar::pow(&rhs, (P - 2) as u32)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> FromPrimitive for Fp<P> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Fp::from_i64(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Fp::new(n))
    }
}

impl<const P: u64> Scalar for Fp<P> {
    fn characteristic() -> u64 {
        P
    }
    fn tag() -> String {
        format!("F{P}")
    }
    fn from_bigint(value: &BigInt) -> Self {
        let r = value.mod_floor(&BigInt::from(P));
        Fp::new(r.to_u64().expect("residue below modulus"))
    }
}

impl<const P: u64> Field for Fp<P> {}

impl Scalar for BigInt {
    fn characteristic() -> u64 {
        0
    }
    fn tag() -> String {
        "Z".to_string()
    }
    fn from_bigint(value: &BigInt) -> Self {
        value.clone()
    }
}

impl Scalar for BigRational {
    fn characteristic() -> u64 {
        0
    }
    fn tag() -> String {
        "Q".to_string()
    }
    fn from_bigint(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }
}

impl Field for BigRational {}

/// Parses a decimal integer or `a/b` fraction into a rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(BigRational::new(num, den))
            }
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Returns the integer value of an integral rational.
pub fn rational_to_integer(value: &BigRational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// Reduces an integer into `F_p` given the modulus at run time.
pub fn reduce_mod(value: &BigInt, p: u64) -> u64 {
    let r = value.mod_floor(&BigInt::from(p));
    debug_assert!(!r.is_negative());
    r.to_u64().expect("residue below modulus")
}

/// Binomial coefficient as an arbitrary-precision integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Runs `$body` with `$F` bound to `Fp<p>` for a runtime prime `p`.
///
/// Evaluates to `None` when `p` is not one of the supported primes.
#[macro_export]
macro_rules! with_prime_field {
    ($p:expr, $F:ident => $body:expr) => {{
        match $p {
            2 => { type $F = $crate::scalar::Fp<2>; Some($body) }
            3 => { type $F = $crate::scalar::Fp<3>; Some($body) }
            5 => { type $F = $crate::scalar::Fp<5>; Some($body) }
            7 => { type $F = $crate::scalar::Fp<7>; Some($body) }
            11 => { type $F = $crate::scalar::Fp<11>; Some($body) }
            13 => { type $F = $crate::scalar::Fp<13>; Some($body) }
            17 => { type $F = $crate::scalar::Fp<17>; Some($body) }
            19 => { type $F = $crate::scalar::Fp<19>; Some($body) }
            23 => { type $F = $crate::scalar::Fp<23>; Some($body) }
            29 => { type $F = $crate::scalar::Fp<29>; Some($body) }
            31 => { type $F = $crate::scalar::Fp<31>; Some($body) }
            _ => None,
        }
    }};
}

/// Primes accepted by [`with_prime_field!`].
pub const SUPPORTED_PRIMES: [u64; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
