//! Exact scalar fields.
//!
//! Every computation in the crate is generic over a [`Field`]. Two families
//! are provided: the rationals ([`Rational`], arbitrary precision, always kept
//! in lowest terms) and prime fields [`Fp`] whose modulus is a const
//! parameter, so values from different fields can never be mixed.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Arbitrary precision rationals in reduced form.
pub type Rational = BigRational;

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// The image of `num / den`; `None` when `den` vanishes in the field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic() -> u64;

    /// Human-readable field name (`Q`, `F_1009`, ...).
    fn name() -> String;

    /// All elements, for finite fields small enough to enumerate.
    fn elements() -> Option<Vec<Self>>;

    /// Text form used by the file formats: integers or `a/b` fractions.
    /// Prime field elements use the symmetric representative so that
    /// small signed integer data reads back identically over any field.
    fn to_repr(&self) -> String;

    /// All roots in the field of `sum_k coeffs[k] x^k` (repeated roots once).
    fn roots(coeffs: &[Self]) -> Vec<Self>;

    /// A uniformly chosen small element, used for random linear combinations.
    fn random<R: Rng>(rng: &mut R) -> Self;
}

/// Residues modulo the prime `P`, stored as the canonical representative in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

/// The default working field for decomposition-heavy computations.
pub type F1009 = Fp<1009>;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc: u128 = 1;
        let m = P as u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Fp(acc as u64)
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in prime field")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> MulAssign for Fp<P> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let d = Fp::<P>(bigint_mod(den, P));
        let n = Fp::<P>(bigint_mod(num, P));
        d.inv().map(|di| n * di)
    }

    fn characteristic() -> u64 {
        P
    }

    fn name() -> String {
        format!("F_{P}")
    }

    fn elements() -> Option<Vec<Self>> {
        if P <= 1 << 12 {
            Some((0..P).map(Fp).collect())
        } else {
            None
        }
    }

    fn to_repr(&self) -> String {
        if self.0 > P / 2 {
            format!("-{}", P - self.0)
        } else {
            self.0.to_string()
        }
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Vec::new();
        }
        let mut out = Vec::new();
        for x in 0..P {
            let x = Fp::<P>(x);
            let mut acc = Fp::<P>(0);
            for c in coeffs.iter().rev() {
                acc = acc * x + *c;
            }
            if acc.is_zero() {
                out.push(x);
            }
        }
        out
    }

    fn random<R: Rng>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    // Trial division; characteristic polynomials here have small coefficients.
    let n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let limit = 2_000_000u64;
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
        if d > BigInt::from(limit) {
            break;
        }
    }
    out
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn characteristic() -> u64 {
        0
    }

    fn name() -> String {
        "Q".to_string()
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn to_repr(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn roots(coeffs: &[Self]) -> Vec<Self> {
        // Rational root theorem on the primitive integer polynomial.
        let mut c: Vec<BigRational> = coeffs.to_vec();
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        if c.len() <= 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut shift = 0;
        while c[shift].is_zero() {
            shift += 1;
        }
        if shift > 0 {
            out.push(BigRational::zero());
        }
        let c = &c[shift..];
        if c.len() <= 1 {
            return out;
        }
        let lcm = c
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = c
            .iter()
            .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let lead = ints.last().unwrap();
        let constant = &ints[0];
        let eval = |x: &BigRational| -> bool {
            let mut acc = BigRational::zero();
            for k in ints.iter().rev() {
                acc = acc * x + BigRational::from_integer(k.clone());
            }
            acc.is_zero()
        };
        let mut seen = std::collections::BTreeSet::new();
        for p in small_divisors(constant) {
            for q in small_divisors(lead) {
                for sign in [Sign::Plus, Sign::Minus] {
                    let num = BigInt::from_biguint(sign, p.magnitude().clone());
                    let cand = BigRational::new(num, q.clone());
                    if seen.insert(cand.clone()) && eval(&cand) {
                        out.push(cand);
                    }
                }
            }
        }
        out
    }

    fn random<R: Rng>(rng: &mut R) -> Self {
        BigRational::from_integer(BigInt::from(rng.gen_range(-5i64..=5)))
    }
}

/// Parses `"3"`, `"-2"`, `"1/2"` into the field.
pub fn parse_scalar<F: Field>(s: &str) -> Option<F> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    F::from_ratio(&n, &d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let a = F1009::new(-1);
        assert_eq!(a.value(), 1008);
        assert_eq!(a * a, F1009::one());
        assert_eq!(F1009::new(7).inv().unwrap() * F1009::new(7), F1009::one());
        assert!(F1009::zero().inv().is_none());
        assert_eq!(a.to_repr(), "-1");
    }

    #[test]
    fn ratio_reduction_in_prime_field() {
        let x = F3::from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(x * F3::new(2), F3::one());
        assert!(F3::from_ratio(&BigInt::from(1), &BigInt::from(3)).is_none());
    }

    #[test]
    fn rational_roots() {
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let mut r = Rational::roots(&[q(0, 1), q(-3, 2), q(5, 2), q(1, 1)]);
        r.sort();
        assert_eq!(r, vec![q(-3, 1), q(0, 1), q(1, 2)]);
        assert!(Rational::roots(&[q(1, 1), q(0, 1), q(1, 1)]).is_empty());
    }

    #[test]
    fn prime_field_roots() {
        // x^2 - 1 over F_5
        let r = Fp::<5>::roots(&[Fp::new(-1), Fp::new(0), Fp::new(1)]);
        assert_eq!(r, vec![Fp::new(1), Fp::new(4)]);
    }

    #[test]
    fn parse_and_repr_roundtrip() {
        let x: Rational = parse_scalar("-3/6").unwrap();
        assert_eq!(x.to_repr(), "-1/2");
        let y: F1009 = parse_scalar("-3").unwrap();
        assert_eq!(parse_scalar::<F1009>(&y.to_repr()), Some(y));
    }
}
