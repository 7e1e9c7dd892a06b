//! Binary-extension Galois fields GF(2^m) backed by exponent/logarithm tables.
//!
//! An element is stored as the integer whose bit `i` is the coefficient of
//! `x^i` in its residue-class representative modulo the primitive polynomial,
//! so `0b0011` is `1 + x`. Addition is XOR; multiplication goes through the
//! log/exp tables built once at construction.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A field element, `value < q`.
pub type Element = u16;

/// The QR-code primitive polynomial `x^8 + x^4 + x^3 + x^2 + 1`.
pub const QR_POLY: u32 = 0x11D;

#[derive(Clone)]
pub struct Field {
    m: u32,
    poly: u32,
    /// `exp[i] = β^i` for `i in 0..2(q-1)`; doubled so sums of logs need no reduction.
    exp: Vec<Element>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.poly == other.poly
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:#x}", self.m, self.poly)
    }
}

impl Field {
    /// Builds GF(2^m) from a bit-encoded polynomial of degree `m`
    /// (bit `i` = coefficient of `x^i`).
    ///
    /// The polynomial must be primitive: the powers of `x` modulo it have to
    /// run through all `2^m - 1` nonzero residues before returning to 1.
    pub fn new(m: u32, primitive_poly: u32) -> Result<Field> {
        if !(1..=16).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        if primitive_poly >> m != 1 {
            return Err(Error::DegreeMismatch {
                m,
                poly: primitive_poly,
            });
        }
        let order = (1usize << m) - 1;
        let mut exp = vec![0 as Element; 2 * order];
        let mut log = vec![u32::MAX; order + 1];
        let mut value: u32 = 1;
        for i in 0..order {
            if value == 0 || log[value as usize] != u32::MAX {
                return Err(Error::NotPrimitive {
                    poly: primitive_poly,
                    order: i,
                    expected: order,
                });
            }
            exp[i] = value as Element;
            exp[i + order] = value as Element;
            log[value as usize] = i as u32;
            value <<= 1;
            if value >> m != 0 {
                value ^= primitive_poly;
            }
        }
        if value != 1 {
            return Err(Error::NotPrimitive {
                poly: primitive_poly,
                order,
                expected: order,
            });
        }
        log[0] = 0;
        Ok(Field {
            m,
            poly: primitive_poly,
            exp,
            log,
        })
    }

    /// GF(256) with the QR polynomial `0x11D`, shared.
    pub fn qr() -> &'static Field {
        static QR: OnceLock<Field> = OnceLock::new();
        QR.get_or_init(|| Field::new(8, QR_POLY).expect("0x11D is primitive"))
    }

    /// GF(2), the prime field, shared.
    pub fn gf2() -> &'static Field {
        static GF2: OnceLock<Field> = OnceLock::new();
        GF2.get_or_init(|| Field::new(1, 0b11).expect("x + 1 is primitive"))
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn primitive_poly(&self) -> u32 {
        self.poly
    }

    /// Field order `q = 2^m`.
    pub fn order(&self) -> usize {
        1 << self.m
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn group_order(&self) -> usize {
        self.order() - 1
    }

    pub fn contains(&self, a: Element) -> bool {
        (a as usize) < self.order()
    }

    /// The `q - 1` successive powers of the generator, `β^0 .. β^(q-2)`.
    pub fn exp_table(&self) -> &[Element] {
        &self.exp[..self.group_order()]
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        a ^ b
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn div(&self, a: Element, b: Element) -> Result<Element> {
        if b == 0 {
            return Err(Error::DivideByZero);
        }
        if a == 0 {
            return Ok(0);
        }
        let n = self.group_order() as u32;
        Ok(self.exp[(self.log[a as usize] + n - self.log[b as usize]) as usize])
    }

    pub fn inv(&self, a: Element) -> Result<Element> {
        self.div(1, a)
    }

    /// `a^e`; negative exponents invert. `0^0 = 1`.
    pub fn pow(&self, a: Element, e: i64) -> Result<Element> {
        if a == 0 {
            return match e {
                0 => Ok(1),
                e if e > 0 => Ok(0),
                _ => Err(Error::DivideByZero),
            };
        }
        let n = self.group_order() as i64;
        let l = (self.log[a as usize] as i64 * e.rem_euclid(n)).rem_euclid(n);
        Ok(self.exp[l as usize])
    }

    /// `β^i`, with `i` reduced modulo `q - 1`.
    #[inline]
    pub fn alpha_pow(&self, i: i64) -> Element {
        self.exp[i.rem_euclid(self.group_order() as i64) as usize]
    }

    /// Discrete logarithm base β; `None` for zero.
    #[inline]
    pub fn log(&self, a: Element) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// Rows of the power table: element bits (ascending, `c0 c1 ... c(m-1)`),
    /// the residue polynomial, and the power of β (`None` for zero).
    pub fn power_table(&self) -> Vec<PowerRow> {
        let mut rows = vec![PowerRow {
            element: 0,
            power: None,
        }];
        rows.extend(self.exp_table().iter().enumerate().map(|(i, &e)| PowerRow {
            element: e,
            power: Some(i as u32),
        }));
        rows
    }

    /// Ascending bit string of an element, `1100` for `1 + x` in GF(16).
    pub fn bits(&self, a: Element) -> String {
        (0..self.m)
            .map(|i| if a >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Residue polynomial rendering, `1 + x + x^3`.
    pub fn residue(&self, a: Element) -> String {
        if a == 0 {
            return "0".to_string();
        }
        let terms: Vec<String> = (0..self.m)
            .filter(|i| a >> i & 1 == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        terms.join(" + ")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerRow {
    pub element: Element,
    pub power: Option<u32>,
}
