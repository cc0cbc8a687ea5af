//! Exact arithmetic in the real field ℚ(√2, √3) and its complexification.
//!
//! Every value is stored in the fixed basis `{1, √2, √3, √6}` with
//! arbitrary-precision rational coordinates, so equality is decidable by
//! comparing coordinates and nothing ever overflows. Denominators are always
//! rationalized: `1/√2` is held as `√2/2`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Canonical arbitrary-precision rational (reduced, positive denominator).
pub type Rational = num_rational::BigRational;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT6: f64 = 2.449_489_742_783_178;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::ZeroDivision);
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Formats a rational as `"p/q"`; the denominator is always present.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Which radical a coordinate multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Radical {
    One,
    Sqrt2,
    Sqrt3,
    Sqrt6,
}

impl Radical {
    pub const ALL: [Radical; 4] = [Radical::One, Radical::Sqrt2, Radical::Sqrt3, Radical::Sqrt6];

    fn symbol(self) -> &'static str {
        match self {
            Radical::One => "",
            Radical::Sqrt2 => "√2",
            Radical::Sqrt3 => "√3",
            Radical::Sqrt6 => "√6",
        }
    }
}

/// An element `a + b·√2 + c·√3 + d·√6` of ℚ(√2, √3).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl ExactScalar {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(a: Rational) -> Self {
        Self { a, b: Rational::zero(), c: Rational::zero(), d: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// `num/den` as a rational element.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(rational(num, den))
    }

    /// `(num/den)·radical`.
    pub fn radical(num: i64, den: i64, radical: Radical) -> Self {
        let mut out = Self::zero();
        *out.coord_mut(radical) = rational(num, den);
        out
    }

    pub fn sqrt2() -> Self {
        Self::radical(1, 1, Radical::Sqrt2)
    }

    pub fn sqrt3() -> Self {
        Self::radical(1, 1, Radical::Sqrt3)
    }

    pub fn sqrt6() -> Self {
        Self::radical(1, 1, Radical::Sqrt6)
    }

    pub fn coord(&self, radical: Radical) -> &Rational {
        match radical {
            Radical::One => &self.a,
            Radical::Sqrt2 => &self.b,
            Radical::Sqrt3 => &self.c,
            Radical::Sqrt6 => &self.d,
        }
    }

    fn coord_mut(&mut self, radical: Radical) -> &mut Rational {
        match radical {
            Radical::One => &mut self.a,
            Radical::Sqrt2 => &mut self.b,
            Radical::Sqrt3 => &mut self.c,
            Radical::Sqrt6 => &mut self.d,
        }
    }

    /// Coordinates `[a, b, c, d]`.
    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// The value if it lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then_some(&self.a)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a)
            + rational_to_f64(&self.b) * SQRT2
            + rational_to_f64(&self.c) * SQRT3
            + rational_to_f64(&self.d) * SQRT6
    }

    /// Multiplicative inverse, found by solving the 4×4 rational system
    /// `L_x · y = e₀` where `L_x` is the matrix of multiplication by `x`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let two = Rational::from_integer(2.into());
        let three = Rational::from_integer(3.into());
        let six = Rational::from_integer(6.into());
        // Row k gives coordinate k of x·y as a linear form in y.
        let mut m: Vec<Vec<Rational>> = vec![
            vec![a.clone(), &two * b, &three * c, &six * d],
            vec![b.clone(), a.clone(), &three * d, &three * c],
            vec![c.clone(), &two * d, a.clone(), &two * b],
            vec![d.clone(), c.clone(), b.clone(), a.clone()],
        ];
        let mut rhs = vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::zero()];
        let y = solve_rational(&mut m, &mut rhs).ok_or(Error::ZeroDivision)?;
        let mut it = y.into_iter();
        let mut next = || it.next().expect("four coordinates");
        Ok(Self::new(next(), next(), next(), next()))
    }

    /// Exact sign (`Less`, `Equal` or `Greater` than zero).
    pub fn signum(&self) -> Ordering {
        // x = p + q·√3 with p = a + b√2, q = c + d√2.
        let p = (self.a.clone(), self.b.clone());
        let q = (self.c.clone(), self.d.clone());
        let sp = sign_q2(&p.0, &p.1);
        let sq = sign_q2(&q.0, &q.1);
        if sq == Ordering::Equal || sp == sq {
            return sp;
        }
        if sp == Ordering::Equal {
            return sq;
        }
        let two = Rational::from_integer(2.into());
        let three = Rational::from_integer(3.into());
        // p² − 3q² in ℚ(√2)
        let p2 = (&p.0 * &p.0 + &two * &p.1 * &p.1, &two * &p.0 * &p.1);
        let q2 = (&q.0 * &q.0 + &two * &q.1 * &q.1, &two * &q.0 * &q.1);
        let diff = (&p2.0 - &three * &q2.0, &p2.1 - &three * &q2.1);
        match sign_q2(&diff.0, &diff.1) {
            Ordering::Greater => sp,
            _ => sq,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Square root of a non-negative rational, when it lies in the field.
    pub fn sqrt(&self) -> Option<Self> {
        let r = self.as_rational()?;
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Self::zero());
        }
        // √(p/q) = √(p·q)/q; p·q = 2^e₂·3^e₃·k² with k coprime to 6.
        let mut n = r.numer() * r.denom();
        let (mut e2, mut e3) = (0u32, 0u32);
        let two = BigInt::from(2);
        let three = BigInt::from(3);
        while n.is_even() {
            n /= &two;
            e2 += 1;
        }
        while (&n % &three).is_zero() {
            n /= &three;
            e3 += 1;
        }
        let root = n.sqrt();
        if &root * &root != n {
            return None;
        }
        let k = root * two.pow(e2 / 2) * three.pow(e3 / 2);
        let radical = match (e2 % 2, e3 % 2) {
            (0, 0) => Radical::One,
            (1, 0) => Radical::Sqrt2,
            (0, 1) => Radical::Sqrt3,
            _ => Radical::Sqrt6,
        };
        let mut out = Self::zero();
        *out.coord_mut(radical) = Rational::new(k, r.denom().clone());
        Some(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

/// Sign of `u + v·√2`.
fn sign_q2(u: &Rational, v: &Rational) -> Ordering {
    let su = u.cmp(&Rational::zero());
    let sv = v.cmp(&Rational::zero());
    if sv == Ordering::Equal || su == sv {
        return su;
    }
    if su == Ordering::Equal {
        return sv;
    }
    let two = Rational::from_integer(2.into());
    if u * u > &two * v * v {
        su
    } else {
        sv
    }
}

/// Gauss-Jordan elimination over ℚ. `None` when the system is singular.
#[allow(clippy::needless_range_loop)]
pub(crate) fn solve_rational(m: &mut [Vec<Rational>], rhs: &mut [Rational]) -> Option<Vec<Rational>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].recip();
        for k in col..n {
            m[col][k] = &m[col][k] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for k in col..n {
                let delta = &factor * &m[col][k];
                m[r][k] -= delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    Some(rhs.to_vec())
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for ExactScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b, c: &self.c + &rhs.c, d: &self.d + &rhs.d }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b, c: &self.c - &rhs.c, d: &self.d - &rhs.d }
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        if self.is_zero() || rhs.is_zero() {
            return ExactScalar::zero();
        }
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        // √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2, √6·√6 = 6
        let two = BigInt::from(2);
        let three = BigInt::from(3);
        let six = BigInt::from(6);
        ExactScalar {
            a: a * e + (b * f) * &two + (c * g) * &three + (d * h) * &six,
            b: a * f + b * e + (c * h + d * g) * &three,
            c: a * g + c * e + (b * h + d * f) * &two,
            d: a * h + d * e + b * g + c * f,
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl Div<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;
    /// Panics on division by zero; use [`ExactScalar::invert`] to handle it.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self * &rhs.invert().expect("division by zero")
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $($tr:ident $method:ident),*) => {$(
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(ExactScalar, Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
        self.c += &rhs.c;
        self.d += &rhs.d;
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        self.c -= &rhs.c;
        self.d -= &rhs.d;
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for ExactScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// Human-readable form such as `2√2`, `-√2/6` or `1/3 + √6/6`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for radical in Radical::ALL {
            let r = self.coord(radical);
            if r.is_zero() {
                continue;
            }
            let negative = r.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let num = r.numer().abs();
            let sym = radical.symbol();
            if !num.is_one() || sym.is_empty() {
                write!(f, "{num}")?;
            }
            f.write_str(sym)?;
            if !r.denom().is_one() {
                write!(f, "/{}", r.denom())?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactScalar({self})")
    }
}

// Coordinates omitted on input read as zero.
#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    #[serde(default = "zero_repr")]
    a: String,
    #[serde(default = "zero_repr")]
    b: String,
    #[serde(default = "zero_repr")]
    c: String,
    #[serde(default = "zero_repr")]
    d: String,
}

fn zero_repr() -> String {
    "0".into()
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr {
            a: format_rational(&self.a),
            b: format_rational(&self.b),
            c: format_rational(&self.c),
            d: format_rational(&self.d),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let p = |s: &str| parse_rational(s).map_err(D::Error::custom);
        Ok(ExactScalar::new(p(&repr.a)?, p(&repr.b)?, p(&repr.c)?, p(&repr.d)?))
    }
}

/// `re + i·im` with both parts in ℚ(√2, √3).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ExactComplex {
    pub re: ExactScalar,
    #[serde(default)]
    pub im: ExactScalar,
}

impl ExactComplex {
    pub fn new(re: ExactScalar, im: ExactScalar) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(ExactScalar::one())
    }

    pub fn i() -> Self {
        Self::new(ExactScalar::zero(), ExactScalar::one())
    }

    pub fn real(re: ExactScalar) -> Self {
        Self { re, im: ExactScalar::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(ExactScalar::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> ExactScalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn invert(&self) -> Result<Self> {
        let n = self.norm_sqr().invert()?;
        Ok(self.conj().scale(&n))
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl From<ExactScalar> for ExactComplex {
    fn from(re: ExactScalar) -> Self {
        Self::real(re)
    }
}

impl<'a> Add<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        if self.im.is_zero() && rhs.im.is_zero() {
            return ExactComplex::real(&self.re * &rhs.re);
        }
        ExactComplex::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl<'a> Div<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ExactComplex) -> ExactComplex {
        self * &rhs.invert().expect("division by zero")
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-&self.re, -&self.im)
    }
}

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        -&self
    }
}

forward_owned_binop!(ExactComplex, Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&ExactComplex> for ExactComplex {
    fn add_assign(&mut self, rhs: &ExactComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ExactComplex> for ExactComplex {
    fn sub_assign(&mut self, rhs: &ExactComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl std::iter::Sum for ExactComplex {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})i", self.im),
            (false, false) => write!(f, "{} + ({})i", self.re, self.im),
        }
    }
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactComplex({self})")
    }
}
