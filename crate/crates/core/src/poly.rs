//! Dense polynomials over a [`Field`].
//!
//! Coefficients are stored in ascending degree, so a codeword vector
//! `(c0, c1, ..., c(n-1))` and the polynomial `c0 + c1 x + ... + c(n-1) x^(n-1)`
//! share one representation. Every constructor and operation normalizes:
//! the top coefficient is nonzero, and the zero polynomial is empty.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Element, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<'f> {
    field: &'f Field,
    coeffs: Vec<Element>,
}

impl<'f> Poly<'f> {
    pub fn new(field: &'f Field, mut coeffs: Vec<Element>) -> Poly<'f> {
        debug_assert!(coeffs.iter().all(|&c| field.contains(c)));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: &'f Field) -> Poly<'f> {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &'f Field) -> Poly<'f> {
        Poly::constant(field, 1)
    }

    pub fn constant(field: &'f Field, c: Element) -> Poly<'f> {
        Poly::new(field, vec![c])
    }

    /// `c x^k`.
    pub fn monomial(field: &'f Field, c: Element, k: usize) -> Poly<'f> {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(field: &'f Field, n: usize) -> Poly<'f> {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = 1;
        coeffs[n] ^= 1;
        Poly::new(field, coeffs)
    }

    /// Polynomial over GF(2) from bits, bit `i` = coefficient of `x^i`.
    pub fn from_gf2_bits(bits: u64) -> Poly<'static> {
        let coeffs = (0..64 - bits.leading_zeros())
            .map(|i| (bits >> i & 1) as Element)
            .collect();
        Poly::new(Field::gf2(), coeffs)
    }

    /// Inverse of [`Poly::from_gf2_bits`] for polynomials with 0/1 coefficients
    /// of degree below 64.
    pub fn to_gf2_bits(&self) -> Option<u64> {
        if self.coeffs.len() > 64 || self.coeffs.iter().any(|&c| c > 1) {
            return None;
        }
        Some(
            self.coeffs
                .iter()
                .rev()
                .fold(0u64, |acc, &c| acc << 1 | c as u64),
        )
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Element> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Element {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &Poly<'_>) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly<'f>) -> Result<Poly<'f>> {
        self.check(other)?;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (&self.coeffs, &other.coeffs)
        } else {
            (&other.coeffs, &self.coeffs)
        };
        let mut out = long.clone();
        for (o, &s) in out.iter_mut().zip(short) {
            *o ^= s;
        }
        Ok(Poly::new(self.field, out))
    }

    /// Same as [`Poly::add`] in characteristic 2.
    pub fn sub(&self, other: &Poly<'f>) -> Result<Poly<'f>> {
        self.add(other)
    }

    pub fn mul(&self, other: &Poly<'f>) -> Result<Poly<'f>> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let f = self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] ^= f.mul(a, b);
            }
        }
        Ok(Poly::new(f, out))
    }

    pub fn scale(&self, c: Element) -> Poly<'f> {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly<'f> {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            field: self.field,
            coeffs,
        }
    }

    /// Long division: returns `(q, r)` with `self = den * q + r` and `deg r < deg den`.
    pub fn divmod(&self, den: &Poly<'f>) -> Result<(Poly<'f>, Poly<'f>)> {
        self.check(den)?;
        let dd = den.degree().ok_or(Error::DivideByZero)?;
        let f = self.field;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lead_inv = f.inv(den.leading())?;
        let mut quot = vec![0; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], lead_inv);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in den.coeffs.iter().enumerate() {
                rem[i + j] ^= f.mul(c, d);
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, den: &Poly<'f>) -> Result<Poly<'f>> {
        Ok(self.divmod(den)?.1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Element) -> Element {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.mul(acc, x) ^ c)
    }

    /// Formal derivative. In characteristic 2 the even-degree terms vanish.
    pub fn derivative(&self) -> Poly<'f> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| if i % 2 == 1 { c } else { 0 })
            .collect();
        Poly::new(self.field, coeffs)
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Poly<'f> {
        match self.field.inv(self.leading()) {
            Ok(inv) => self.scale(inv),
            Err(_) => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly<'f>) -> Result<Poly<'f>> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple, `a b / gcd(a, b)`.
    pub fn lcm(&self, other: &Poly<'f>) -> Result<Poly<'f>> {
        if self.is_zero() || other.is_zero() {
            self.check(other)?;
            return Ok(Poly::zero(self.field));
        }
        let g = self.gcd(other)?;
        let (q, _) = self.mul(other)?.divmod(&g)?;
        Ok(q.monic())
    }
}

impl fmt::Debug for Poly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Renders in descending degree, `x^3 + x + 1`; coefficients other than 1
/// are printed as their integer value.
impl fmt::Display for Poly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2(bits: u64) -> Poly<'static> {
        Poly::from_gf2_bits(bits)
    }

    #[test]
    fn normalization() {
        let f = Field::qr();
        let p = Poly::new(f, vec![1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::new(f, vec![0, 0]).degree(), None);
        assert!(Poly::new(f, vec![]).is_zero());
    }

    #[test]
    fn add_zero_and_mul_zero() {
        let f = Field::qr();
        let p = Poly::new(f, vec![3, 7, 9]);
        let z = Poly::zero(f);
        assert_eq!(p.add(&z).unwrap(), p);
        assert!(z.mul(&p).unwrap().is_zero());
        assert!(p.add(&p).unwrap().is_zero());
    }

    #[test]
    fn gf2_schoolbook_product() {
        // (x + 1)(x^2 + x + 1) = x^3 + 1 over GF(2)
        assert_eq!(gf2(0b11).mul(&gf2(0b111)).unwrap(), gf2(0b1001));
    }

    #[test]
    fn field_mismatch() {
        let a = gf2(0b11);
        let b = Poly::one(Field::qr());
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&b), Err(Error::FieldMismatch));
        assert_eq!(a.divmod(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn divmod_basics() {
        let f = Field::qr();
        let p = Poly::new(f, vec![5, 0, 17, 200]);
        let (q, r) = p.divmod(&Poly::one(f)).unwrap();
        assert_eq!(q, p);
        assert!(r.is_zero());
        assert_eq!(p.divmod(&Poly::zero(f)), Err(Error::DivideByZero));
        let (q, r) = Poly::one(f).divmod(&p).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, Poly::one(f));
    }

    #[test]
    fn x7_minus_one_factors() {
        let x7 = Poly::x_n_minus_one(Field::gf2(), 7);
        assert!(x7.rem(&gf2(0b1011)).unwrap().is_zero());
        assert!(x7.rem(&gf2(0b1101)).unwrap().is_zero());
        let prod = gf2(0b11)
            .mul(&gf2(0b1101))
            .unwrap()
            .mul(&gf2(0b1011))
            .unwrap();
        assert_eq!(prod, x7);
    }

    #[test]
    fn eval_roots_in_gf8() {
        let f8 = Field::new(3, 0b1011).unwrap();
        let p = Poly::new(&f8, vec![1, 1, 0, 1]);
        assert_eq!(Poly::zero(&f8).eval(3), 0);
        assert_eq!(p.eval(f8.alpha_pow(1)), 0);
        assert_eq!(p.eval(f8.alpha_pow(2)), 0);
        assert_eq!(p.eval(f8.alpha_pow(4)), 0);
        assert_ne!(p.eval(f8.alpha_pow(3)), 0);
    }

    #[test]
    fn shifts() {
        let f = Field::qr();
        assert_eq!(Poly::one(f).shift(32), Poly::monomial(f, 1, 32));
        assert!(Poly::zero(f).shift(5).is_zero());
        let p = Poly::new(f, vec![1, 1]).shift(2);
        assert_eq!(p.coeffs(), &[0, 0, 1, 1]);
    }

    #[test]
    fn gcd_lcm() {
        let a = gf2(0b11).mul(&gf2(0b1011)).unwrap();
        let b = gf2(0b1011).mul(&gf2(0b1101)).unwrap();
        assert_eq!(a.gcd(&b).unwrap(), gf2(0b1011));
        assert_eq!(a.lcm(&b).unwrap(), Poly::x_n_minus_one(Field::gf2(), 7));
        assert_eq!(gf2(0b1011).lcm(&gf2(0b1011)).unwrap(), gf2(0b1011));
    }

    #[test]
    fn derivative_char2() {
        // d/dx (x^3 + x^2 + x + 1) = 3x^2 + 2x + 1 = x^2 + 1
        assert_eq!(gf2(0b1111).derivative(), gf2(0b101));
    }

    #[test]
    fn display() {
        assert_eq!(gf2(0b1011).to_string(), "x^3 + x + 1");
        assert_eq!(
            Poly::new(Field::qr(), vec![3, 0, 5]).to_string(),
            "5x^2 + 3"
        );
        assert_eq!(gf2(0b1011).to_gf2_bits(), Some(0b1011));
    }
}
