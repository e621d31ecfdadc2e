//! The indeterminacy semiring: values `a + bI` with nonnegative integer
//! coefficients and the collapse rule `I * I = I`.
//!
//! The collapse rule is never stated as an axiom in the source material. It
//! is what the printed squares of neutrosophic adjacency matrices require:
//! the row `[0, 1, I, 0]` dotted with itself is `1 + I`, not `1 + I^2`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use num_traits::{CheckedAdd, CheckedMul, One, Unsigned, Zero};

use crate::error::Error;

/// Scalars that matrices can be built over: a commutative semiring with
/// explicit identities.
pub trait Semiring: Clone + PartialEq + fmt::Debug + Zero + One {}

impl<T> Semiring for T where T: Clone + PartialEq + fmt::Debug + Zero + One {}

/// A semiring with a distinguished indeterminate element.
pub trait Indeterminate: Semiring {
    fn indeterminate() -> Self;

    /// True when the value has no determinate (real) component.
    fn is_pure_indeterminate(&self) -> bool;
}

/// Coefficient types usable inside a [`NeutroNum`].
///
/// Arithmetic on coefficients is checked; an overflow panics instead of
/// wrapping, so a machine-word instantiation can never return a wrong count.
pub trait Coefficient:
    Clone + Ord + std::hash::Hash + fmt::Debug + fmt::Display + FromStr + Unsigned + CheckedAdd + CheckedMul
{
}

impl<T> Coefficient for T where
    T: Clone
        + Ord
        + std::hash::Hash
        + fmt::Debug
        + fmt::Display
        + FromStr
        + Unsigned
        + CheckedAdd
        + CheckedMul
{
}

/// An element `real + indet * I` of the indeterminacy semiring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NeutroNum<T> {
    real: T,
    indet: T,
}

impl<T: Coefficient> NeutroNum<T> {
    pub fn new(real: T, indet: T) -> Self {
        NeutroNum { real, indet }
    }

    pub fn from_real(real: T) -> Self {
        NeutroNum { real, indet: T::zero() }
    }

    pub fn from_indet(indet: T) -> Self {
        NeutroNum { real: T::zero(), indet }
    }

    /// The bare indeterminate `I`.
    pub fn i() -> Self {
        Self::from_indet(T::one())
    }

    pub fn real(&self) -> &T {
        &self.real
    }

    pub fn indet(&self) -> &T {
        &self.indet
    }

    pub fn into_parts(self) -> (T, T) {
        (self.real, self.indet)
    }

    fn checked_sum(a: &T, b: &T) -> Option<T> {
        a.checked_add(b)
    }

    fn checked_product(&self, rhs: &Self) -> Option<Self> {
        // (a + bI)(c + dI) = ac + (ad + bc + bd)I
        let ac = self.real.checked_mul(&rhs.real)?;
        let ad = self.real.checked_mul(&rhs.indet)?;
        let bc = self.indet.checked_mul(&rhs.real)?;
        let bd = self.indet.checked_mul(&rhs.indet)?;
        let indet = ad.checked_add(&bc)?.checked_add(&bd)?;
        Some(NeutroNum { real: ac, indet })
    }
}

impl<T: Coefficient> Zero for NeutroNum<T> {
    fn zero() -> Self {
        NeutroNum { real: T::zero(), indet: T::zero() }
    }

    fn is_zero(&self) -> bool {
        self.real.is_zero() && self.indet.is_zero()
    }
}

impl<T: Coefficient> One for NeutroNum<T> {
    fn one() -> Self {
        Self::from_real(T::one())
    }
}

impl<T: Coefficient> Indeterminate for NeutroNum<T> {
    fn indeterminate() -> Self {
        Self::i()
    }

    fn is_pure_indeterminate(&self) -> bool {
        self.real.is_zero() && !self.indet.is_zero()
    }
}

impl<T: Coefficient> CheckedAdd for NeutroNum<T> {
    fn checked_add(&self, rhs: &Self) -> Option<Self> {
        Some(NeutroNum {
            real: Self::checked_sum(&self.real, &rhs.real)?,
            indet: Self::checked_sum(&self.indet, &rhs.indet)?,
        })
    }
}

impl<T: Coefficient> CheckedMul for NeutroNum<T> {
    fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        self.checked_product(rhs)
    }
}

impl<'a, T: Coefficient> Add<&'a NeutroNum<T>> for &'a NeutroNum<T> {
    type Output = NeutroNum<T>;

    fn add(self, rhs: &'a NeutroNum<T>) -> NeutroNum<T> {
        self.checked_add(rhs).expect("NeutroNum coefficient overflow")
    }
}

impl<T: Coefficient> Add for NeutroNum<T> {
    type Output = NeutroNum<T>;

    fn add(self, rhs: NeutroNum<T>) -> NeutroNum<T> {
        &self + &rhs
    }
}

impl<T: Coefficient> AddAssign for NeutroNum<T> {
    fn add_assign(&mut self, rhs: NeutroNum<T>) {
        *self = &*self + &rhs;
    }
}

impl<'a, T: Coefficient> Mul<&'a NeutroNum<T>> for &'a NeutroNum<T> {
    type Output = NeutroNum<T>;

    fn mul(self, rhs: &'a NeutroNum<T>) -> NeutroNum<T> {
        self.checked_product(rhs).expect("NeutroNum coefficient overflow")
    }
}

impl<T: Coefficient> Mul for NeutroNum<T> {
    type Output = NeutroNum<T>;

    fn mul(self, rhs: NeutroNum<T>) -> NeutroNum<T> {
        &self * &rhs
    }
}

impl<T: Coefficient> MulAssign for NeutroNum<T> {
    fn mul_assign(&mut self, rhs: NeutroNum<T>) {
        *self = &*self * &rhs;
    }
}

impl<T: Coefficient> Sum for NeutroNum<T> {
    fn sum<It: Iterator<Item = Self>>(iter: It) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

/// Canonical rendering: `0`, `3`, `I`, `2I`, `1+2I`.
impl<T: Coefficient> fmt::Display for NeutroNum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indet = |f: &mut fmt::Formatter<'_>| {
            if self.indet.is_one() {
                write!(f, "I")
            } else {
                write!(f, "{}I", self.indet)
            }
        };
        match (self.real.is_zero(), self.indet.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.real),
            (true, false) => indet(f),
            (false, false) => {
                write!(f, "{}+", self.real)?;
                indet(f)
            }
        }
    }
}

impl<T: Coefficient> FromStr for NeutroNum<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidNumber(s.to_string());
        let text = s.trim();
        if text.is_empty() {
            return Err(bad());
        }
        let mut real: Option<T> = None;
        let mut indet: Option<T> = None;
        for term in text.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad());
            }
            if let Some(coef) = term.strip_suffix('I') {
                if indet.is_some() {
                    return Err(bad());
                }
                let coef = coef.trim();
                indet = Some(if coef.is_empty() {
                    T::one()
                } else {
                    parse_digits(coef).ok_or_else(bad)?
                });
            } else {
                if real.is_some() {
                    return Err(bad());
                }
                real = Some(parse_digits(term).ok_or_else(bad)?);
            }
        }
        Ok(NeutroNum {
            real: real.unwrap_or_else(T::zero),
            indet: indet.unwrap_or_else(T::zero),
        })
    }
}

fn parse_digits<T: FromStr>(s: &str) -> Option<T> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
