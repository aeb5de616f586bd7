//! Exact scalars over ℚ and GF(p).
//!
//! A [`FieldElement`] carries its field with it; mixing elements of two
//! different fields in an arithmetic operator is a programming error and
//! panics. Everything that can fail on legitimate input (parsing, roots,
//! square classes) returns a `Result` or `Option` instead.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Default trial-division bound used when canonicalizing square classes over ℚ.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// The ground field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Prime field GF(p); fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 for ℚ, p for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> FieldElement {
        match *self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => FieldElement::Residue {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num/den` reduced into the field. Panics if `den` vanishes in the field.
    pub fn ratio(&self, num: i64, den: i64) -> FieldElement {
        let d = self.int(den).inv().expect("denominator vanishes in the field");
        self.int(num) * d
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match *self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                FieldElement::Residue {
                    value: r.to_u64().unwrap(),
                    modulus: p,
                }
            }
        }
    }

    /// Parses a scalar literal: optional sign, then an integer or `a/b` with `b > 0`.
    /// Over GF(p) the value is reduced modulo p.
    pub fn parse(&self, text: &str) -> Result<FieldElement> {
        let bad = || Error::BadLiteral(text.to_string());
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num: BigInt = parse_signed(num).ok_or_else(bad)?;
        let den: BigInt = match den {
            Some(d) => {
                if !d.bytes().all(|b| b.is_ascii_digit()) || d.is_empty() {
                    return Err(bad());
                }
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                d
            }
            None => BigInt::one(),
        };
        let den = self.from_bigint(&den).inv().ok_or_else(bad)?;
        Ok(self.from_bigint(&num) * den)
    }

    /// A small random element, for sampling units and test data.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match *self {
            FieldSpec::Rationals => {
                let num = rng.gen_range(-6i64..=6);
                let den = [1i64, 1, 1, 2, 3][rng.gen_range(0..5)];
                self.ratio(num, den)
            }
            FieldSpec::Prime(p) => self.int(rng.gen_range(0..p) as i64),
        }
    }

    pub fn sample_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        loop {
            let x = self.sample(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn parse_signed(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = digits.parse().ok()?;
    Some(if s.starts_with('-') { -n } else { n })
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar in canonical form.
///
/// Rationals are stored reduced with positive denominator (guaranteed by
/// `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rationals,
            FieldElement::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, absent for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Residue { value, modulus } => FieldElement::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            _ => None,
        }
    }

    fn binary(
        &self,
        rhs: &FieldElement,
        q: impl FnOnce(&BigRational, &BigRational) -> BigRational,
        r: impl FnOnce(u64, u64, u64) -> u64,
    ) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(q(a, b)),
            (
                FieldElement::Residue { value: a, modulus: p },
                FieldElement::Residue { value: b, modulus: p2 },
            ) if p == p2 => FieldElement::Residue {
                value: r(*a, *b, *p),
                modulus: *p,
            },
            _ => panic!("arithmetic between {} and {}", self.field(), rhs.field()),
        }
    }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % p) as u128;
    let m = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElement::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.binary(rhs, |a, b| a + b, |a, b, p| ((a as u128 + b as u128) % p as u128) as u64)
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.binary(rhs, |a, b| a - b, |a, b, p| ((a as u128 + p as u128 - b as u128) % p as u128) as u64)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.binary(rhs, |a, b| a * b, |a, b, p| ((a as u128 * b as u128) % p as u128) as u64)
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Residue { value, modulus } => FieldElement::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement { (&self).$m(rhs) }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

/// Canonical representative of a class in k̇/k̇².
///
/// Over ℚ this is the signed squarefree integer; over GF(p), p odd, it is 1
/// or the least positive quadratic nonresidue; over GF(2) it is always 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareClassRep {
    pub rep: FieldElement,
}

impl SquareClassRep {
    pub fn field(&self) -> FieldSpec {
        self.rep.field()
    }

    /// Class of the product of two representatives.
    pub fn mul(&self, other: &SquareClassRep) -> Result<SquareClassRep> {
        square_class(&(&self.rep * &other.rep))
    }
}

impl fmt::Display for SquareClassRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

pub fn square_class(x: &FieldElement) -> Result<SquareClassRep> {
    square_class_with_bound(x, DEFAULT_FACTOR_BOUND)
}

/// Square class of a nonzero scalar; over ℚ, integers are factored by trial
/// division up to `factor_bound`.
pub fn square_class_with_bound(x: &FieldElement, factor_bound: u64) -> Result<SquareClassRep> {
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let field = x.field();
    let rep = match x {
        FieldElement::Rational(q) => {
            let n = q.numer() * q.denom();
            let part = squarefree_part(n.magnitude(), factor_bound)?;
            let signed = BigInt::from_biguint(n.sign(), part);
            field.from_bigint(&signed)
        }
        FieldElement::Residue { value, modulus } => {
            if *modulus == 2 || pow_mod(*value, (modulus - 1) / 2, *modulus) == 1 {
                field.one()
            } else {
                field.int(least_nonresidue(*modulus) as i64)
            }
        }
    };
    Ok(SquareClassRep { rep })
}

fn least_nonresidue(p: u64) -> u64 {
    (2..p)
        .find(|&a| pow_mod(a, (p - 1) / 2, p) != 1)
        .expect("odd prime has a nonresidue")
}

fn squarefree_part(n: &BigUint, bound: u64) -> Result<BigUint> {
    let mut rest = n.clone();
    let mut part = BigUint::one();
    let mut d = 2u64;
    loop {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        if d > bound {
            return Err(Error::FactorBoundExceeded(n.to_string(), bound));
        }
        let mut odd = false;
        while (&rest % &dd).is_zero() {
            rest /= &dd;
            odd = !odd;
        }
        if odd {
            part *= &dd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    // whatever remains is 1 or a prime
    Ok(part * rest)
}

/// Some `u` with `uⁿ = x`, if one exists in the field.
///
/// Over ℚ the positive root is chosen when `n` is even; over GF(p) the least
/// residue is returned.
pub fn nth_root_in_k(x: &FieldElement, n: usize) -> Option<FieldElement> {
    assert!(n >= 1, "root index must be positive");
    match x {
        FieldElement::Rational(q) => {
            if q.is_negative() && n % 2 == 0 {
                return None;
            }
            let root = |z: &BigInt| -> Option<BigInt> {
                let r = z.magnitude().nth_root(n as u32);
                (r.pow(n as u32) == *z.magnitude()).then(|| BigInt::from_biguint(Sign::Plus, r))
            };
            let num = root(q.numer())?;
            let den = root(q.denom())?;
            let num = if q.is_negative() { -num } else { num };
            Some(FieldElement::Rational(BigRational::new(num, den)))
        }
        FieldElement::Residue { value, modulus } => (0..*modulus)
            .find(|&u| pow_mod(u, n as u64, *modulus) == *value)
            .map(|u| FieldElement::Residue {
                value: u,
                modulus: *modulus,
            }),
    }
}
