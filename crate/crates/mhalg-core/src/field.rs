//! Exact scalar fields: the rationals and the Gaussian rationals.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Which exact field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    /// The rationals.
    Q,
    /// The Gaussian rationals `Q(i)`.
    QI,
}

impl FieldTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FieldTag::Q => "q",
            FieldTag::QI => "qi",
        }
    }
}

/// An exact field.
///
/// Everything in the crate is generic over this trait. Equality is exact.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const TAG: FieldTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Complex conjugation (identity on `Q`).
    fn conj(&self) -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// Real and imaginary parts.
    fn re_im(&self) -> (Rational, Rational);
    /// Builds a scalar from real and imaginary parts; `None` when the field
    /// cannot hold a nonzero imaginary part.
    fn from_re_im(re: Rational, im: Rational) -> Option<Self>;
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

/// An exact rational number.
///
/// Values that fit in machine words are kept as a reduced `i64` fraction and
/// only spill into arbitrary precision when an intermediate result overflows.
/// The representation is canonical, so derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            core::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    /// `num / den`; panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        if n == 0 {
            return Self::zero();
        }
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // `r` is assumed reduced with positive denominator.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            return Rational(Repr::Small(n, d));
        }
        Rational(Repr::Big(Box::new(r)))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    /// Always `p/q` form, including `q = 1`.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

/// Error for malformed rational literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?}", self.0)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p`, `-p` and `p/q` with `q != 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(String::from(s));
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Self::from_big(BigRational::new(n, d)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{}", n),
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

fn add_r(a: &Rational, b: &Rational) -> Rational {
    match (&a.0, &b.0) {
        (Repr::Small(0, _), _) => b.clone(),
        (_, Repr::Small(0, _)) => a.clone(),
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            if d1 == d2 {
                Rational::from_i128(*n1 as i128 + *n2 as i128, *d1 as i128)
            } else {
                let (n1, d1, n2, d2) = (*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128);
                Rational::from_i128(n1 * d2 + n2 * d1, d1 * d2)
            }
        }
        _ => Rational::from_big(a.to_big() + b.to_big()),
    }
}

fn mul_r(a: &Rational, b: &Rational) -> Rational {
    match (&a.0, &b.0) {
        (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Rational::zero(),
        (Repr::Small(1, 1), _) => b.clone(),
        (_, Repr::Small(1, 1)) => a.clone(),
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            Rational::from_i128(*n1 as i128 * *n2 as i128, *d1 as i128 * *d2 as i128)
        }
        _ => Rational::from_big(a.to_big() * b.to_big()),
    }
}

fn neg_r(a: &Rational) -> Rational {
    match &a.0 {
        Repr::Small(n, d) if *n != i64::MIN => Rational(Repr::Small(-n, *d)),
        _ => Rational::from_big(-a.to_big()),
    }
}

macro_rules! forward_binops {
    ($t:ty, $add:path, $sub:path, $mul:path) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                $add(&self, &o)
            }
        }
        impl<'a> Add<&'a $t> for $t {
            type Output = $t;
            fn add(self, o: &'a $t) -> $t {
                $add(&self, o)
            }
        }
        impl<'a, 'b> Add<&'b $t> for &'a $t {
            type Output = $t;
            fn add(self, o: &'b $t) -> $t {
                $add(self, o)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                $sub(&self, &o)
            }
        }
        impl<'a> Sub<&'a $t> for $t {
            type Output = $t;
            fn sub(self, o: &'a $t) -> $t {
                $sub(&self, o)
            }
        }
        impl<'a, 'b> Sub<&'b $t> for &'a $t {
            type Output = $t;
            fn sub(self, o: &'b $t) -> $t {
                $sub(self, o)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                $mul(&self, &o)
            }
        }
        impl<'a> Mul<&'a $t> for $t {
            type Output = $t;
            fn mul(self, o: &'a $t) -> $t {
                $mul(&self, o)
            }
        }
        impl<'a, 'b> Mul<&'b $t> for &'a $t {
            type Output = $t;
            fn mul(self, o: &'b $t) -> $t {
                $mul(self, o)
            }
        }
    };
}

fn sub_r(a: &Rational, b: &Rational) -> Rational {
    add_r(a, &neg_r(b))
}

forward_binops!(Rational, add_r, sub_r, mul_r);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        neg_r(&self)
    }
}

impl<'a> Neg for &'a Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        neg_r(self)
    }
}

impl Field for Rational {
    const TAG: FieldTag = FieldTag::Q;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn re_im(&self) -> (Rational, Rational) {
        (self.clone(), Rational::zero())
    }
    fn from_re_im(re: Rational, im: Rational) -> Option<Self> {
        if im.is_zero() {
            Some(re)
        } else {
            None
        }
    }
}

/// An element `re + im·i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.signum() < 0 {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn add_g(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    GaussianRational::new(&a.re + &b.re, &a.im + &b.im)
}

fn sub_g(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    GaussianRational::new(&a.re - &b.re, &a.im - &b.im)
}

fn mul_g(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussianRational::from(&a.re * &b.re);
    }
    GaussianRational::new(
        &a.re * &b.re - &a.im * &b.im,
        &a.re * &b.im + &a.im * &b.re,
    )
}

forward_binops!(GaussianRational, add_g, sub_g, mul_g);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Field for GaussianRational {
    const TAG: FieldTag = FieldTag::QI;

    fn zero() -> Self {
        GaussianRational::default()
    }
    fn one() -> Self {
        GaussianRational::from(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        let r = norm.recip()?;
        Some(GaussianRational::new(&self.re * &r, -(&self.im * &r)))
    }
    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }
    fn from_i64(n: i64) -> Self {
        GaussianRational::from(Rational::from_integer(n))
    }
    fn from_rational(r: Rational) -> Self {
        GaussianRational::from(r)
    }
    fn re_im(&self) -> (Rational, Rational) {
        (self.re.clone(), self.im.clone())
    }
    fn from_re_im(re: Rational, im: Rational) -> Option<Self> {
        Some(GaussianRational::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        assert_eq!(q(2, -4), q(-1, 2));
        assert_eq!(q(0, -7), Rational::zero());
        assert_eq!(q(6, 3).to_fraction_string(), "2/1");
    }

    #[test]
    fn overflow_spills_and_returns() {
        let big = Rational::from_integer(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = &sq * &big.recip().unwrap();
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let m = Rational::from_integer(i64::MIN);
        assert_eq!(-(-m.clone()), m);
    }

    #[test]
    fn parses_literals() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), q(1, 2));
        assert_eq!("-4".parse::<Rational>().unwrap(), q(-4, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn gaussian_inverse() {
        let z = GaussianRational::new(q(1, 1), q(2, 1));
        let w = z.inv().unwrap();
        assert_eq!(z * w, GaussianRational::one());
        assert_eq!(GaussianRational::i() * GaussianRational::i(), GaussianRational::from_i64(-1));
    }
}
