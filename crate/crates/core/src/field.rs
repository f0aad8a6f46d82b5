//! Coefficient fields.
//!
//! Every algorithm in the crate is generic over [`Field`]. Two families of
//! implementations are provided: the prime fields [`Fp`] (modulus fixed at
//! compile time) and the rationals [`Rat`].

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// A commutative field usable as the coefficient domain of [`crate::Polynomial`].
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// 0 for characteristic zero.
    fn characteristic() -> u64;

    /// A uniformly random element (for `Rat`: a small random integer).
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Splits the element into a sign and a magnitude suitable for printing,
    /// so that `-magnitude == self` when the flag is set.
    fn sign_split(&self) -> (bool, Self);

    /// Parses an unsigned decimal literal.
    fn from_decimal(digits: &str) -> Option<Self> {
        let ten = Self::from_i64(10);
        let mut acc = Self::zero();
        for c in digits.chars() {
            let d = c.to_digit(10)?;
            acc = acc * ten.clone() + Self::from_i64(d as i64);
        }
        Some(acc)
    }

    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv().expect("division by zero")
    }
}

/// Element of the prime field Z/PZ. `P` must be a prime below 2^31.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

/// The default coefficient field.
pub type F32003 = Fp<32003>;

impl<const P: u32> Fp<P> {
    pub const MODULUS: u32 = P;

    pub fn new(v: u64) -> Self {
        Fp((v % P as u64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// True when `P` is prime; checked once at the entry points that pick a
    /// modulus at run time.
    pub fn modulus_is_prime() -> bool {
        is_prime(P as u64)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, mag) = self.sign_split();
        if neg {
            write!(f, "-{}", mag.0)
        } else {
            write!(f, "{}", mag.0)
        }
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // extended Euclid on (a, P)
        let (mut a, mut m) = (self.0 as i64, P as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while m != 0 {
            let q = a / m;
            (a, m) = (m, a - q * m);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Some(Fp(x0.rem_euclid(P as i64) as u32))
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    fn characteristic() -> u64 {
        P as u64
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }

    fn sign_split(&self) -> (bool, Self) {
        if self.0 > P / 2 {
            (true, -*self)
        } else {
            (false, *self)
        }
    }
}

/// Exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Rat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Rat(self.0 + o.0)
    }
}

impl Sub for Rat {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Rat(self.0 - o.0)
    }
}

impl Mul for Rat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Rat(self.0 * o.0)
    }
}

impl Neg for Rat {
    type Output = Self;
    fn neg(self) -> Self {
        Rat(-self.0)
    }
}

impl Zero for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rat {
    fn one() -> Self {
        Rat(BigRational::one())
    }
}

impl Field for Rat {
    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    fn from_i64(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    fn characteristic() -> u64 {
        0
    }

    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_i64(rng.gen_range(-9..=9))
    }

    fn sign_split(&self) -> (bool, Self) {
        if self.0.is_negative() {
            (true, Rat(-self.0.clone()))
        } else {
            (false, self.clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type F7 = Fp<7>;

    #[test]
    fn small_field_tables() {
        for a in 1..7u64 {
            let x = F7::new(a);
            assert_eq!(x * x.inv().unwrap(), F7::one());
            assert_eq!(x + (-x), F7::zero());
        }
        assert!(F7::zero().inv().is_none());
        assert_eq!(F7::from_i64(-1), F7::new(6));
    }

    #[test]
    fn symmetric_printing() {
        assert_eq!(F32003::from_i64(-3).to_string(), "-3");
        assert_eq!(F32003::from_i64(16001).to_string(), "16001");
        assert_eq!(F32003::from_i64(16002).to_string(), "-16001");
    }

    #[test]
    fn decimal_literals_reduce() {
        assert_eq!(F7::from_decimal("100"), Some(F7::new(2)));
        assert_eq!(Rat::from_decimal("12"), Some(Rat::from_i64(12)));
        assert_eq!(F7::from_decimal("1x"), None);
    }

    #[test]
    fn rationals_invert() {
        let a = Rat::new(-3, 4);
        assert_eq!(a.inv().unwrap(), Rat::new(-4, 3));
        assert_eq!(a.sign_split(), (true, Rat::new(3, 4)));
    }

    proptest! {
        #[test]
        fn inverse_law(a in 1u64..32003) {
            let x = F32003::new(a);
            prop_assert_eq!(x * x.inv().unwrap(), F32003::one());
            prop_assert_eq!(x.pow(32002), F32003::one());
        }

        #[test]
        fn distributive(a in 0u64..32003, b in 0u64..32003, c in 0u64..32003) {
            let (a, b, c) = (F32003::new(a), F32003::new(b), F32003::new(c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!((a - b) + b, a);
        }
    }
}
