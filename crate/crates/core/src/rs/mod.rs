//! Systematic Reed-Solomon codes over GF(2^m).
//!
//! A codeword is `data ‖ ec`, read as a polynomial with `data[0]` on the
//! highest power `x^(n-1)`. The parity symbols are the remainder of
//! `data(x) · x^ec_len` divided by the generator
//! `g(x) = (x - α^b)(x - α^(b+1))...(x - α^(b+ec_len-1))`, so every codeword
//! vanishes at each generator root. QR codes use `b = 0`.
//!
//! Shortened codes (`n < q - 1`) are the full-length code with the leading
//! data symbols fixed to zero; nothing is stored for them.

mod decode;

pub use decode::Decoded;

use crate::codes::CodeParams;
use crate::error::{Error, Result};
use crate::gf::{Element, Field};
use crate::poly::Poly;

/// First generator root exponent used by QR codes.
pub const QR_FIRST_ROOT: i64 = 0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsParams<'f> {
    field: &'f Field,
    n: usize,
    ec_len: usize,
    first_root: i64,
    generator: Poly<'f>,
    /// Generator coefficients below the leading 1, highest degree first.
    feedback: Vec<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsCodeword {
    pub data: Vec<Element>,
    pub ec: Vec<Element>,
}

impl RsCodeword {
    /// `data ‖ ec`, the transmitted order.
    pub fn combined(&self) -> Vec<Element> {
        let mut out = self.data.clone();
        out.extend_from_slice(&self.ec);
        out
    }
}

impl<'f> RsParams<'f> {
    /// RS(n, k) with generator roots `α^first_root .. α^(first_root + n - k - 1)`.
    pub fn new(field: &'f Field, n: usize, k: usize, first_root: i64) -> Result<RsParams<'f>> {
        let q = field.order();
        if k == 0 || k >= n || n > q - 1 {
            return Err(Error::BadDimensions { n, k, q });
        }
        let ec_len = n - k;
        let mut generator = Poly::one(field);
        for i in 0..ec_len as i64 {
            let root = field.alpha_pow(first_root + i);
            generator = generator.mul(&Poly::new(field, vec![root, 1]))?;
        }
        let feedback = generator.coeffs()[..ec_len].iter().rev().copied().collect();
        Ok(RsParams {
            field,
            n,
            ec_len,
            first_root,
            generator,
            feedback,
        })
    }

    /// QR-convention code over GF(256) with `first_root = 0`.
    pub fn qr(n: usize, k: usize) -> Result<RsParams<'static>> {
        RsParams::new(Field::qr(), n, k, QR_FIRST_ROOT)
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.ec_len
    }

    pub fn ec_len(&self) -> usize {
        self.ec_len
    }

    pub fn first_root(&self) -> i64 {
        self.first_root
    }

    pub fn generator(&self) -> &Poly<'f> {
        &self.generator
    }

    /// Designed (and actual, RS being MDS) minimum distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.ec_len + 1
    }

    /// Correctable symbol errors, `floor((d - 1) / 2)`.
    pub fn t(&self) -> usize {
        self.ec_len / 2
    }

    pub fn code_params(&self) -> CodeParams {
        CodeParams {
            n: self.n,
            k: self.k(),
            d: self.d(),
            q: self.field.order(),
        }
    }

    /// Systematic encoding.
    pub fn encode(&self, data: &[Element]) -> Result<RsCodeword> {
        if data.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                actual: data.len(),
            });
        }
        let mut ec = vec![0; self.ec_len];
        self.parity_into(data.iter().copied(), &mut ec);
        Ok(RsCodeword {
            data: data.to_vec(),
            ec,
        })
    }

    /// Parity bytes for byte data; requires `m <= 8`.
    pub fn encode_bytes(&self, data: &[u8]) -> Result<Vec<u8>> {
        let mut ec = vec![0u8; self.ec_len];
        self.parity_bytes_into(data, &mut ec)?;
        Ok(ec)
    }

    /// Like [`RsParams::encode_bytes`] but writes into a caller buffer of
    /// length `ec_len`.
    pub fn parity_bytes_into(&self, data: &[u8], out: &mut [u8]) -> Result<()> {
        if data.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                actual: data.len(),
            });
        }
        if out.len() != self.ec_len {
            return Err(Error::LengthMismatch {
                expected: self.ec_len,
                actual: out.len(),
            });
        }
        debug_assert!(self.field.degree() <= 8);
        let f = self.field;
        out.fill(0);
        for &b in data {
            let factor = (b ^ out[0]) as Element;
            out.copy_within(1.., 0);
            out[self.ec_len - 1] = 0;
            if factor != 0 {
                for (o, &g) in out.iter_mut().zip(&self.feedback) {
                    *o ^= f.mul(g, factor) as u8;
                }
            }
        }
        Ok(())
    }

    // Shift-register division of data(x) x^ec_len by the monic generator.
    fn parity_into(&self, data: impl Iterator<Item = Element>, out: &mut [Element]) {
        let f = self.field;
        for b in data {
            let factor = b ^ out[0];
            out.copy_within(1.., 0);
            out[self.ec_len - 1] = 0;
            if factor != 0 {
                for (o, &g) in out.iter_mut().zip(&self.feedback) {
                    *o ^= f.mul(g, factor);
                }
            }
        }
    }

    /// `S_j = r(α^(b+j))` for `j in 0..ec_len`.
    pub fn syndromes(&self, received: &[Element]) -> Result<Vec<Element>> {
        if received.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: received.len(),
            });
        }
        let f = self.field;
        Ok((0..self.ec_len as i64)
            .map(|j| {
                let x = f.alpha_pow(self.first_root + j);
                received.iter().fold(0, |acc, &c| f.mul(acc, x) ^ c)
            })
            .collect())
    }

    pub fn is_codeword(&self, received: &[Element]) -> Result<bool> {
        Ok(self.syndromes(received)?.iter().all(|&s| s == 0))
    }

    /// Byte convenience wrapper for [`RsParams::decode`].
    pub fn decode_bytes(&self, received: &[u8]) -> Result<(Vec<u8>, usize)> {
        let symbols: Vec<Element> = received.iter().map(|&b| b as Element).collect();
        let d = self.decode(&symbols)?;
        Ok((
            d.corrected.into_iter().map(|s| s as u8).collect(),
            d.n_errors,
        ))
    }
}

/// Reference systematic encoder by explicit polynomial long division,
/// `s(x) = (f(x) x^ec_len) mod g(x)`. Slow; kept as a cross-check for the
/// shift-register path.
pub fn encode_by_division<'f>(params: &RsParams<'f>, data: &[Element]) -> Result<RsCodeword> {
    if data.len() != params.k() {
        return Err(Error::LengthMismatch {
            expected: params.k(),
            actual: data.len(),
        });
    }
    let f = params.field();
    let msg = Poly::new(f, data.iter().rev().copied().collect());
    let rem = msg.shift(params.ec_len()).rem(params.generator())?;
    let ec = (0..params.ec_len()).rev().map(|i| rem.coeff(i)).collect();
    Ok(RsCodeword {
        data: data.to_vec(),
        ec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const B1: [u8; 26] = [
        64, 180, 150, 67, 162, 3, 19, 35, 51, 67, 83, 99, 112, 196, 144, 22, 34, 115, 74, 89, 202,
        212, 234, 197, 39, 150,
    ];
    const B2: [u8; 26] = [
        64, 180, 150, 67, 162, 3, 19, 35, 51, 67, 83, 99, 96, 188, 116, 128, 47, 172, 71, 62, 26,
        14, 96, 156, 143, 69,
    ];

    #[test]
    fn params() {
        let rs = RsParams::qr(255, 223).unwrap();
        assert_eq!((rs.d(), rs.t()), (33, 16));
        let rs = RsParams::qr(26, 13).unwrap();
        assert_eq!(rs.t(), 6);
        let rs = RsParams::qr(26, 19).unwrap();
        assert_eq!((rs.ec_len(), rs.t()), (7, 3));
        assert!(rs.generator().is_monic());
        assert_eq!(rs.generator().degree(), Some(7));
        assert!(rs.code_params().is_mds());
    }

    #[test]
    fn bad_dimensions() {
        for (n, k) in [(26, 0), (26, 26), (256, 10), (10, 11)] {
            assert!(matches!(
                RsParams::qr(n, k),
                Err(Error::BadDimensions { .. })
            ));
        }
    }

    #[test]
    fn qr_v1q_parity() {
        let rs = RsParams::qr(26, 13).unwrap();
        assert_eq!(rs.encode_bytes(&B1[..13]).unwrap(), &B1[13..]);
        assert_eq!(rs.encode_bytes(&B2[..13]).unwrap(), &B2[13..]);
    }

    #[test]
    fn qr_v1l_parity() {
        let data = [
            64, 244, 150, 67, 162, 6, 38, 134, 23, 103, 86, 183, 54, 150, 182, 182, 16, 236, 17,
        ];
        let rs = RsParams::qr(26, 19).unwrap();
        assert_eq!(
            rs.encode_bytes(&data).unwrap(),
            [235, 223, 145, 221, 73, 238, 102]
        );
    }

    #[test]
    fn zero_data_zero_parity() {
        let rs = RsParams::qr(26, 13).unwrap();
        assert_eq!(rs.encode_bytes(&[0; 13]).unwrap(), [0; 13]);
    }

    #[test]
    fn division_route_agrees() {
        let rs = RsParams::qr(26, 13).unwrap();
        let data: Vec<Element> = B1[..13].iter().map(|&b| b as Element).collect();
        assert_eq!(
            encode_by_division(&rs, &data).unwrap(),
            rs.encode(&data).unwrap()
        );
    }

    #[test]
    fn codewords_vanish_at_roots() {
        for b in [0, 1, 5] {
            let rs = RsParams::new(Field::qr(), 40, 30, b).unwrap();
            let data: Vec<Element> = (0..30).map(|i| (i * 37 % 256) as Element).collect();
            let cw = rs.encode(&data).unwrap().combined();
            let f = rs.field();
            // data[0] sits on x^(n-1): evaluate directly from that convention.
            for j in 0..10 {
                let x = f.alpha_pow(b + j);
                let mut acc = 0;
                for (i, &c) in cw.iter().enumerate() {
                    acc ^= f.mul(c, f.pow(x, (cw.len() - 1 - i) as i64).unwrap());
                }
                assert_eq!(acc, 0);
            }
            assert!(rs.syndromes(&cw).unwrap().iter().all(|&s| s == 0));
        }
    }

    #[test]
    fn length_checks() {
        let rs = RsParams::qr(26, 13).unwrap();
        assert_eq!(
            rs.encode(&[0; 12]),
            Err(Error::LengthMismatch {
                expected: 13,
                actual: 12
            })
        );
        assert_eq!(
            rs.syndromes(&[0; 25]),
            Err(Error::LengthMismatch {
                expected: 26,
                actual: 25
            })
        );
    }
}
