//! Bounded-distance decoding: syndromes, Berlekamp-Massey for the error
//! locator Λ(x), Chien search for its roots, Forney for the magnitudes.
//!
//! Position `p` of the error-location numbers counts from the low end of the
//! codeword polynomial, so `received[i]` has `p = n - 1 - i`.

use super::RsParams;
use crate::error::{Error, Result};
use crate::gf::{Element, Field};
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub corrected: Vec<Element>,
    pub n_errors: usize,
}

/// Shortest LFSR generating `syndromes`; returns the connection polynomial
/// `Λ(x)` (with `Λ(0) = 1`) and its length `L`.
fn berlekamp_massey<'f>(field: &'f Field, syndromes: &[Element]) -> (Poly<'f>, usize) {
    let mut c = vec![1 as Element];
    let mut b = vec![1 as Element];
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut last_disc: Element = 1;
    for step in 0..syndromes.len() {
        let mut disc = syndromes[step];
        for i in 1..=len.min(c.len() - 1) {
            disc ^= field.mul(c[i], syndromes[step - i]);
        }
        if disc == 0 {
            shift += 1;
            continue;
        }
        let coef = field
            .div(disc, last_disc)
            .expect("last discrepancy is nonzero");
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, 0);
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + shift] ^= field.mul(coef, bi);
        }
        if 2 * len <= step {
            len = step + 1 - len;
            b = prev;
            last_disc = disc;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    (Poly::new(field, c), len)
}

impl RsParams<'_> {
    /// Corrects up to `t` symbol errors. More errors are reported as
    /// [`Error::DecodeFailure`] unless they happen to land within distance `t`
    /// of another codeword.
    pub fn decode(&self, received: &[Element]) -> Result<Decoded> {
        let syn = self.syndromes(received)?;
        if syn.iter().all(|&s| s == 0) {
            return Ok(Decoded {
                corrected: received.to_vec(),
                n_errors: 0,
            });
        }
        let f = self.field();
        let n = self.n();
        let (locator, len) = berlekamp_massey(f, &syn);
        if len > self.t() || locator.degree() != Some(len) {
            return Err(Error::DecodeFailure);
        }

        // Chien search over the n live positions only; roots of a shortened
        // code's virtual prefix are failures.
        let positions: Vec<usize> = (0..n)
            .filter(|&p| locator.eval(f.alpha_pow(-(p as i64))) == 0)
            .collect();
        if positions.len() != len {
            return Err(Error::DecodeFailure);
        }

        let syn_poly = Poly::new(f, syn);
        let omega = {
            let prod = syn_poly.mul(&locator)?;
            Poly::new(
                f,
                prod.coeffs().iter().take(self.ec_len()).copied().collect(),
            )
        };
        let dlocator = locator.derivative();
        let mut corrected = received.to_vec();
        for &p in &positions {
            let x = f.alpha_pow(p as i64);
            let x_inv = f.alpha_pow(-(p as i64));
            let denom = dlocator.eval(x_inv);
            let scale = f.pow(x, 1 - self.first_root())?;
            let magnitude = f.mul(
                scale,
                f.div(omega.eval(x_inv), denom)
                    .map_err(|_| Error::DecodeFailure)?,
            );
            corrected[n - 1 - p] ^= magnitude;
        }
        if !self.is_codeword(&corrected)? {
            return Err(Error::DecodeFailure);
        }
        Ok(Decoded {
            corrected,
            n_errors: len,
        })
    }
}
