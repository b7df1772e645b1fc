//! Dense univariate polynomials over the integers.
//!
//! Coefficients are arbitrary precision. Internally a polynomial whose
//! coefficients all fit in an `i64` is stored as a machine-word vector and
//! every operation runs with checked arithmetic, promoting to big integers on
//! overflow. The representation is canonical (narrow whenever possible), so
//! equality compares values.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Narrow(Vec<i64>),
    Wide(Vec<BigInt>),
}

/// A normalized integer polynomial; index `i` holds the coefficient of `t^i`.
///
/// The zero polynomial has no coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    repr: Repr,
}

fn trim_narrow(mut c: Vec<i64>) -> Vec<i64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { repr: Repr::Narrow(Vec::new()) }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::narrow(coeffs.to_vec())
    }

    fn narrow(coeffs: Vec<i64>) -> Self {
        Self { repr: Repr::Narrow(trim_narrow(coeffs)) }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        match coeffs.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>() {
            Some(small) => Self { repr: Repr::Narrow(small) },
            None => Self { repr: Repr::Wide(coeffs) },
        }
    }

    /// `c · t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::narrow(v)
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[0] -= 1;
        v[n] += 1;
        Self::narrow(v)
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Narrow(c) => c.is_empty(),
            Repr::Wide(c) => c.is_empty(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Number of stored coefficients (degree + 1, or 0 for zero).
    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Narrow(c) => c.len(),
            Repr::Wide(c) => c.len(),
        }
    }

    pub fn degree(&self) -> Option<usize> {
        self.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        match &self.repr {
            Repr::Narrow(c) => c.get(i).map_or_else(BigInt::zero, |&x| BigInt::from(x)),
            Repr::Wide(c) => c.get(i).cloned().unwrap_or_default(),
        }
    }

    pub fn coeffs(&self) -> Vec<BigInt> {
        match &self.repr {
            Repr::Narrow(c) => c.iter().map(|&x| BigInt::from(x)).collect(),
            Repr::Wide(c) => c.clone(),
        }
    }

    /// Coefficients as machine words, when they all fit.
    pub fn as_i64(&self) -> Option<&[i64]> {
        match &self.repr {
            Repr::Narrow(c) => Some(c),
            Repr::Wide(_) => None,
        }
    }

    fn wide(&self) -> std::borrow::Cow<'_, [BigInt]> {
        match &self.repr {
            Repr::Narrow(_) => std::borrow::Cow::Owned(self.coeffs()),
            Repr::Wide(c) => std::borrow::Cow::Borrowed(c),
        }
    }

    pub fn leading_sign(&self) -> Ordering {
        match &self.repr {
            Repr::Narrow(c) => c.last().map_or(Ordering::Equal, |x| x.cmp(&0)),
            Repr::Wide(c) => c.last().map_or(Ordering::Equal, sign_of),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, i64::checked_add, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, i64::checked_sub, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Self,
        narrow_op: fn(i64, i64) -> Option<i64>,
        wide_op: fn(&BigInt, &BigInt) -> BigInt,
    ) -> Self {
        let n = self.len().max(other.len());
        if let (Repr::Narrow(a), Repr::Narrow(b)) = (&self.repr, &other.repr) {
            let out: Option<Vec<i64>> = (0..n)
                .map(|i| narrow_op(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect();
            if let Some(out) = out {
                return Self::narrow(out);
            }
        }
        let (a, b) = (self.wide(), other.wide());
        let zero = BigInt::zero();
        Self::from_coeffs(
            (0..n)
                .map(|i| wide_op(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
                .collect(),
        )
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let n = self.len() + other.len() - 1;
        if let (Repr::Narrow(a), Repr::Narrow(b)) = (&self.repr, &other.repr) {
            if let Some(out) = mul_narrow(a, b, n) {
                return Self::narrow(out);
            }
        }
        let (a, b) = (self.wide(), other.wide());
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Self::from_coeffs(out)
    }

    /// Quotient of an exact division over the integers.
    ///
    /// Fails with [`Error::NonExactDivision`] when `divisor` does not divide
    /// `self` in `Z[t]`, and with [`Error::DivisionByZero`] for a zero divisor.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.len() < divisor.len() {
            return Err(Error::NonExactDivision);
        }
        if let (Repr::Narrow(a), Repr::Narrow(b)) = (&self.repr, &divisor.repr) {
            if let Some(q) = div_narrow(a, b)? {
                return Ok(Self::narrow(q));
            }
        }
        div_wide(&self.wide(), &divisor.wide()).map(Self::from_coeffs)
    }

    /// `p(t^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let n = (self.len() - 1) * k + 1;
        match &self.repr {
            Repr::Narrow(c) => {
                let mut out = vec![0; n];
                for (i, &x) in c.iter().enumerate() {
                    out[i * k] = x;
                }
                Self::narrow(out)
            }
            Repr::Wide(c) => {
                let mut out = vec![BigInt::zero(); n];
                for (i, x) in c.iter().enumerate() {
                    out[i * k] = x.clone();
                }
                Self::from_coeffs(out)
            }
        }
    }

    /// Exact value at `q` by Horner's rule.
    pub fn eval_at(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        match &self.repr {
            Repr::Narrow(c) => {
                for &x in c.iter().rev() {
                    acc = acc * q + x;
                }
            }
            Repr::Wide(c) => {
                for x in c.iter().rev() {
                    acc = acc * q + x;
                }
            }
        }
        acc
    }

    /// Sign of the exact value at an integer `q >= 2`.
    ///
    /// Narrow polynomials are handled without forming `p(q)`: the coefficients
    /// are renormalized to base-`q` digits in `[0, q)` from the lowest degree
    /// up, leaving `p(q) = R + carry · q^len` with `0 <= R < q^len`. The sign is
    /// the sign of the final carry, or of `R` when the carry is zero. Carries
    /// stay below `max|coeff| / (q - 1) + 1` in absolute value.
    pub fn sign_at(&self, q: u64) -> Ordering {
        assert!(q >= 2, "sign_at needs q >= 2");
        match &self.repr {
            Repr::Narrow(c) => {
                let q = i128::from(q);
                let mut carry: i128 = 0;
                let mut any_digit = false;
                for &x in c {
                    let t = i128::from(x) + carry;
                    let digit = t.rem_euclid(q);
                    carry = t.div_euclid(q);
                    any_digit |= digit != 0;
                }
                match carry.cmp(&0) {
                    Ordering::Equal if any_digit => Ordering::Greater,
                    other => other,
                }
            }
            Repr::Wide(_) => sign_of(&self.eval_at(&BigInt::from(q))),
        }
    }

    /// `(a, b)` with `self = a - b`, where `a` keeps the positive coefficients
    /// and `b` the negated negative ones.
    pub fn split_pos_neg(&self) -> (Self, Self) {
        match &self.repr {
            Repr::Narrow(c) => {
                let pos = c.iter().map(|&x| x.max(0)).collect();
                // Negating i64::MIN does not fit; route that case through the
                // wide path.
                let neg = c
                    .iter()
                    .map(|&x| if x < 0 { x.checked_neg() } else { Some(0) })
                    .collect::<Option<Vec<_>>>();
                match neg {
                    Some(neg) => (Self::narrow(pos), Self::narrow(neg)),
                    None => split_wide(&self.coeffs()),
                }
            }
            Repr::Wide(c) => split_wide(c),
        }
    }

    pub fn max_abs_coeff(&self) -> BigUint {
        match &self.repr {
            Repr::Narrow(c) => BigUint::from(c.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)),
            Repr::Wide(c) => c.iter().map(|x| x.magnitude().clone()).max().unwrap_or_default(),
        }
    }

    /// Whether `self = t^k · s(t)` with `s(0) != 0` and the coefficients of `s`
    /// forming a palindrome. The zero polynomial counts as self-reciprocal.
    pub fn is_self_reciprocal_up_to_power(&self) -> bool {
        fn palindrome<T: PartialEq>(c: &[T], zero: &T) -> bool {
            let start = c.iter().position(|x| x != zero).unwrap_or(c.len());
            let s = &c[start..];
            s.iter().eq(s.iter().rev())
        }
        match &self.repr {
            Repr::Narrow(c) => palindrome(c, &0),
            Repr::Wide(c) => palindrome(c, &BigInt::zero()),
        }
    }
}

fn sign_of(x: &BigInt) -> Ordering {
    match x.sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

fn split_wide(c: &[BigInt]) -> (IntPoly, IntPoly) {
    let pos = c.iter().map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() });
    let neg = c.iter().map(|x| if x.is_negative() { -x } else { BigInt::zero() });
    (IntPoly::from_coeffs(pos.collect()), IntPoly::from_coeffs(neg.collect()))
}

fn mul_narrow(a: &[i64], b: &[i64], n: usize) -> Option<Vec<i64>> {
    let mut out = vec![0i64; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(x.checked_mul(y)?)?;
        }
    }
    Some(out)
}

/// `Ok(None)` means an intermediate overflowed and the wide path must redo it.
fn div_narrow(a: &[i64], b: &[i64]) -> Result<Option<Vec<i64>>> {
    let lead = *b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![0i64; a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = rem[k + db];
        if top == 0 {
            continue;
        }
        match top.checked_rem(lead) {
            None => return Ok(None),
            Some(0) => {}
            Some(_) => return Err(Error::NonExactDivision),
        }
        let Some(qk) = top.checked_div(lead) else {
            return Ok(None);
        };
        quot[k] = qk;
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            let Some(r) = qk.checked_mul(bj).and_then(|p| rem[k + j].checked_sub(p)) else {
                return Ok(None);
            };
            rem[k + j] = r;
        }
    }
    if rem.iter().any(|&x| x != 0) {
        return Err(Error::NonExactDivision);
    }
    Ok(Some(quot))
}

fn div_wide(a: &[BigInt], b: &[BigInt]) -> Result<Vec<BigInt>> {
    let lead = b.last().expect("nonzero divisor");
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        if rem[k + db].is_zero() {
            continue;
        }
        let (qk, r) = rem[k + db].div_rem(lead);
        if !r.is_zero() {
            return Err(Error::NonExactDivision);
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[k + j] -= &qk * bj;
            }
        }
        quot[k] = qk;
    }
    if rem.iter().any(|x| !x.is_zero()) {
        return Err(Error::NonExactDivision);
    }
    Ok(quot)
}

impl Default for IntPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Vec<BigInt>> for IntPoly {
    fn from(c: Vec<BigInt>) -> Self {
        Self::from_coeffs(c)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::zero().sub(self)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: Self) -> IntPoly {
        IntPoly::add(self, rhs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: Self) -> IntPoly {
        IntPoly::sub(self, rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: Self) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

/// Descending-degree notation, e.g. `t^4 - t^3 + t^2 - t + 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ if !unit => write!(f, "{mag}")?,
                _ => {}
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
