//! Block-code utilities: Hamming distance and weight, brute-force minimum
//! distance, decoding capability, cyclic-code matrices, BCH generators and
//! the NIF check-letter code.

mod cyclic;
mod nif;

pub use cyclic::{
    bch_generator, bch_generator_over, cyclic_generator_matrix, minimal_polynomial,
    minimal_polynomial_over, parity_check_matrix, Matrix,
};
pub use nif::{nif_check, nif_control_letter, NifCheck, NIF_LETTERS};

use rayon::prelude::*;

use crate::error::{Error, Result};

/// `[n, k, d]_q` parameters of a linear code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: usize,
}

impl CodeParams {
    /// Number of codewords, `q^k`, if it fits in a `u128`.
    pub fn size(&self) -> Option<u128> {
        (self.q as u128).checked_pow(self.k as u32)
    }

    /// `M <= q^(n-d+1)`, checked in exponent form.
    pub fn satisfies_singleton(&self) -> bool {
        self.d <= self.n && self.k <= self.n - self.d + 1
    }

    /// Singleton bound met with equality.
    pub fn is_mds(&self) -> bool {
        self.d + self.k == self.n + 1
    }

    /// Errors correctable by a bounded-distance decoder.
    pub fn t(&self) -> usize {
        detect_correct_capability(self.d).0
    }
}

pub fn hamming_distance<T: PartialEq>(u: &[T], v: &[T]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            actual: v.len(),
        });
    }
    Ok(u.iter().zip(v).filter(|(a, b)| a != b).count())
}

/// Number of nonzero symbols.
pub fn weight<T: PartialEq + Default>(v: &[T]) -> usize {
    let zero = T::default();
    v.iter().filter(|&x| *x != zero).count()
}

/// Exact minimum pairwise distance over an explicit list of codewords.
pub fn min_distance_bruteforce<T>(words: &[Vec<T>]) -> Result<usize>
where
    T: PartialEq + Sync,
{
    if words.len() < 2 {
        return Err(Error::TooFewWords(words.len()));
    }
    let n = words[0].len();
    if let Some(w) = words.iter().find(|w| w.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: w.len(),
        });
    }
    let best = (0..words.len())
        .into_par_iter()
        .map(|i| {
            words[i + 1..]
                .iter()
                .map(|w| words[i].iter().zip(w).filter(|(a, b)| a != b).count())
                .min()
                .unwrap_or(usize::MAX)
        })
        .min()
        .unwrap_or(usize::MAX);
    Ok(best)
}

/// Minimum weight over the nonzero words; `None` if every word is zero.
pub fn min_weight<T: PartialEq + Default + Sync>(words: &[Vec<T>]) -> Option<usize> {
    words.par_iter().map(|w| weight(w)).filter(|&w| w > 0).min()
}

/// Minimum distance of a linear code, computed both pairwise and as the
/// minimum nonzero weight. The two must agree for a linear code.
pub fn linear_min_distance<T>(words: &[Vec<T>]) -> Result<usize>
where
    T: PartialEq + Default + Sync,
{
    let distance = min_distance_bruteforce(words)?;
    let weight = min_weight(words).unwrap_or(0);
    if distance != weight {
        return Err(Error::NotLinear { distance, weight });
    }
    Ok(distance)
}

/// `(t, d - 1)`: errors correctable, and errors detectable when not correcting.
pub fn detect_correct_capability(d: usize) -> (usize, usize) {
    let d = d.max(1);
    ((d - 1) / 2, d - 1)
}

/// Nearest-codeword search over a word list. Returns the index of the closest
/// word, its distance, and whether it is the unique closest.
pub fn nearest_codeword<T: PartialEq>(
    words: &[Vec<T>],
    received: &[T],
) -> Option<(usize, usize, bool)> {
    let mut best: Option<(usize, usize, bool)> = None;
    for (i, w) in words.iter().enumerate() {
        let d = hamming_distance(w, received).ok()?;
        best = match best {
            None => Some((i, d, true)),
            Some((_, bd, _)) if d < bd => Some((i, d, true)),
            Some((bi, bd, _)) if d == bd => Some((bi, bd, false)),
            keep => keep,
        };
    }
    best
}
