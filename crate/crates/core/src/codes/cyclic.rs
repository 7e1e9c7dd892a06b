use crate::error::{Error, Result};
use crate::gf::{Element, Field};
use crate::poly::Poly;

/// Dense row-major matrix over a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<'f> {
    field: &'f Field,
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl<'f> Matrix<'f> {
    pub fn from_rows(field: &'f Field, cols: usize, rows: Vec<Vec<Element>>) -> Matrix<'f> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix {
            field,
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> Element {
        self.data[r * self.cols + c]
    }

    /// `M v`.
    pub fn mul_vec(&self, v: &[Element]) -> Result<Vec<Element>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| acc ^ f.mul(a, b))
            })
            .collect())
    }

    /// `A B^T`, both with the same column count.
    pub fn mul_transpose(&self, other: &Matrix<'f>) -> Result<Matrix<'f>> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                actual: other.cols,
            });
        }
        let rows = (0..self.rows)
            .map(|i| other.mul_vec(self.row(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(self.field, other.rows, rows))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `H w = 0`, the membership test when `self` is a parity-check matrix.
    pub fn annihilates(&self, w: &[Element]) -> Result<bool> {
        Ok(self.mul_vec(w)?.iter().all(|&s| s == 0))
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m: Vec<Vec<Element>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, p);
            let inv = f.inv(m[rank][col]).expect("nonzero pivot");
            for v in m[rank].iter_mut() {
                *v = f.mul(*v, inv);
            }
            let pivot = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let factor = row[col];
                    for (v, &p) in row.iter_mut().zip(&pivot) {
                        *v ^= f.mul(factor, p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Every linear combination of the rows (`q^rows` vectors, possibly with
    /// repeats if the rows are dependent). Meant for small enumerations.
    pub fn row_span(&self) -> Vec<Vec<Element>> {
        let f = self.field;
        let q = f.order();
        let total = q.pow(self.rows as u32);
        let mut out = Vec::with_capacity(total);
        let mut coeffs = vec![0usize; self.rows];
        for _ in 0..total {
            let mut word = vec![0 as Element; self.cols];
            for (r, &c) in coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (w, &g) in word.iter_mut().zip(self.row(r)) {
                    *w ^= f.mul(c as Element, g);
                }
            }
            out.push(word);
            for c in coeffs.iter_mut() {
                *c += 1;
                if *c < q {
                    break;
                }
                *c = 0;
            }
        }
        out
    }
}

fn cofactor<'f>(g: &Poly<'f>, n: usize) -> Result<Poly<'f>> {
    let (h, r) = Poly::x_n_minus_one(g.field(), n).divmod(g)?;
    if !r.is_zero() || g.degree().is_none_or(|d| d > n) {
        return Err(Error::NotADivisor { n });
    }
    Ok(h)
}

/// `k x n` generator matrix of the cyclic code `<g>` of length `n`, with rows
/// `g, x g, ..., x^(k-1) g` and `k = n - deg g`.
pub fn cyclic_generator_matrix<'f>(g: &Poly<'f>, n: usize) -> Result<Matrix<'f>> {
    cofactor(g, n)?;
    let deg = g.degree().expect("divisor is nonzero");
    let k = n - deg;
    let rows = (0..k)
        .map(|i| {
            let mut row = vec![0; n];
            row[i..i + deg + 1].copy_from_slice(g.coeffs());
            row
        })
        .collect();
    Ok(Matrix::from_rows(g.field(), n, rows))
}

/// `(n - k) x n` parity-check matrix built from the reversed cofactor
/// `h(x) = (x^n - 1) / g(x)`: row `i` holds `h_k, ..., h_0` starting at column `i`.
pub fn parity_check_matrix<'f>(g: &Poly<'f>, n: usize) -> Result<Matrix<'f>> {
    let h = cofactor(g, n)?;
    let k = h.degree().expect("cofactor is nonzero");
    let reversed: Vec<Element> = h.coeffs().iter().rev().copied().collect();
    let rows = (0..n - k)
        .map(|i| {
            let mut row = vec![0; n];
            row[i..i + k + 1].copy_from_slice(&reversed);
            row
        })
        .collect();
    Ok(Matrix::from_rows(g.field(), n, rows))
}

/// Minimal polynomial over GF(2) of `elem`: the product of `(x - c)` over the
/// conjugates `elem^(2^j)`.
pub fn minimal_polynomial(field: &Field, elem: Element) -> Poly<'static> {
    let p = minimal_polynomial_over(field, elem, 1);
    debug_assert!(p.coeffs().iter().all(|&x| x <= 1));
    Poly::new(Field::gf2(), p.into_coeffs())
}

/// Minimal polynomial of `elem` over the subfield GF(2^s) of `field`, with
/// coefficients expressed in `field`. Conjugates are `elem^(2^(s j))`; with
/// `s = m` the result is the linear factor `x - elem`.
pub fn minimal_polynomial_over<'f>(field: &'f Field, elem: Element, s: u32) -> Poly<'f> {
    assert!(
        s >= 1 && field.degree().is_multiple_of(s),
        "GF(2^{s}) is not a subfield"
    );
    if elem == 0 {
        return Poly::monomial(field, 1, 1);
    }
    let frobenius = |c: Element| field.pow(c, 1 << s).expect("nonzero");
    let mut acc = Poly::one(field);
    let mut c = elem;
    loop {
        acc = acc.mul(&Poly::new(field, vec![c, 1])).expect("same field");
        c = frobenius(c);
        if c == elem {
            break;
        }
    }
    acc
}

/// Generator of the narrow-sense binary BCH code of length `q - 1` with
/// designed distance `delta`: `lcm` of the minimal polynomials of
/// `α, α^2, ..., α^(delta-1)`.
pub fn bch_generator(field: &Field, delta: usize) -> Result<Poly<'static>> {
    let g = bch_generator_over(field, delta, 1)?;
    Ok(Poly::new(Field::gf2(), g.into_coeffs()))
}

/// Narrow-sense BCH generator over the subfield GF(2^s). With `s = m` this is
/// the Reed-Solomon generator `(x - α)(x - α^2)...(x - α^(delta-1))`.
pub fn bch_generator_over(field: &Field, delta: usize, s: u32) -> Result<Poly<'_>> {
    let max = field.group_order();
    if delta < 2 || delta > max {
        return Err(Error::DeltaOutOfRange { delta, max });
    }
    let mut g = Poly::one(field);
    for i in 1..delta {
        g = g.lcm(&minimal_polynomial_over(
            field,
            field.alpha_pow(i as i64),
            s,
        ))?;
    }
    Ok(g)
}
