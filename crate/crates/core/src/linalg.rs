//! Dense exact matrices and univariate polynomials over a [`FieldSpec`].
//!
//! Similarity is decided with the rational canonical form: the invariant
//! factors of `A` are the nontrivial diagonal entries of the Smith normal
//! form of `xI - A` over `k[x]`, and two matrices are similar iff these
//! lists agree.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows. Panics on ragged input.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            field,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<FieldElement>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<FieldElement> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &FieldElement) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| x * s).collect(),
            ..self.clone()
        }
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Upper triangular with every diagonal entry equal to 1.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_one() && (0..i).all(|j| self[(i, j)].is_zero())
            })
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: FieldSpec, blocks: &[Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, Matrix::cols);
        assert!(blocks.iter().all(|b| b.cols == cols), "vstack column mismatch");
        Matrix {
            rows: blocks.iter().map(Matrix::rows).sum(),
            cols,
            field,
            data: blocks.iter().flat_map(|b| b.data.iter().cloned()).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().unwrap();
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = &m[(i, j)] - &(&f * &m[(r, j)]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : A v = 0}`; empty iff `A` is injective.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<FieldElement> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.inv().unwrap();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    if !m[(c, j)].is_zero() {
                        m[(i, j)] = &m[(i, j)] - &(&f * &m[(c, j)]);
                    }
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, absent when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Some solution of `A v = b`, if the system is consistent.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut v = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = r[(row, self.cols)].clone();
        }
        Some(v)
    }

    /// Characteristic polynomial `det(xI - A)`, via reduction to upper
    /// Hessenberg form. Valid over any field.
    pub fn char_poly(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let f = self.field;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            h.swap_rows(i, m);
            h.swap_cols(i, m);
            let inv = h[(m, m - 1)].inv().unwrap();
            for i in m + 1..n {
                let u = &h[(i, m - 1)] * &inv;
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &u * &h[(m, j)];
                    h[(i, j)] = &h[(i, j)] - &t;
                }
                for j in 0..n {
                    let t = &u * &h[(j, i)];
                    h[(j, m)] = &h[(j, m)] + &t;
                }
            }
        }
        let x = Polynomial::x(f);
        let mut p = vec![Polynomial::one(f)];
        for k in 0..n {
            let mut next = &(&x - &Polynomial::constant(h[(k, k)].clone())) * &p[k];
            let mut t = f.one();
            for i in (0..k).rev() {
                t = &t * &h[(i + 1, i)];
                if t.is_zero() {
                    break;
                }
                let c = &h[(i, k)] * &t;
                next = &next - &p[i].scale(&c);
            }
            p.push(next);
        }
        Ok(p.pop().unwrap())
    }

    /// Minimal polynomial, from the first linear dependency among `I, A, A², …`.
    pub fn minimal_polynomial(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut powers = vec![Self::identity(self.field, n)];
        loop {
            let d = powers.len();
            let columns: Vec<Vec<FieldElement>> = powers.iter().map(|p| p.data.clone()).collect();
            let krylov = Self::from_columns(self.field, n * n, &columns);
            if let Some(v) = krylov.kernel_basis().into_iter().next() {
                // the first dependency is unique up to scale and involves the top power
                let top = v[d - 1].inv().expect("first dependency uses the top power");
                return Ok(Polynomial::new(self.field, v.iter().map(|c| c * &top).collect()));
            }
            let next = powers.last().unwrap() * self;
            powers.push(next);
        }
    }

    /// Invariant factors `f₁ | f₂ | … | f_r` (monic, nonconstant) of the
    /// rational canonical form.
    pub fn invariant_factors(&self) -> Result<Vec<Polynomial>> {
        if !self.is_square() {
            return Err(Error::NonSquare(self.rows, self.cols));
        }
        let f = self.field;
        let n = self.rows;
        let mut m: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = Polynomial::constant(-&self[(i, j)]);
                        if i == j {
                            &c + &Polynomial::x(f)
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        let mut diagonal = Vec::with_capacity(n);
        for t in 0..n {
            loop {
                let pivot = (t..n)
                    .flat_map(|i| (t..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| !m[i][j].is_zero())
                    .min_by_key(|&(i, j)| m[i][j].degree());
                let Some((pi, pj)) = pivot else { break };
                m.swap(t, pi);
                for row in m.iter_mut() {
                    row.swap(t, pj);
                }
                let mut clean = true;
                for i in t + 1..n {
                    if m[i][t].is_zero() {
                        continue;
                    }
                    let (q, r) = m[i][t].div_rem(&m[t][t]);
                    clean &= r.is_zero();
                    for j in t..n {
                        let d = &q * &m[t][j];
                        m[i][j] = &m[i][j] - &d;
                    }
                }
                for j in t + 1..n {
                    if m[t][j].is_zero() {
                        continue;
                    }
                    let (q, r) = m[t][j].div_rem(&m[t][t]);
                    clean &= r.is_zero();
                    for row in m.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] = &row[j] - &d;
                    }
                }
                if !clean {
                    continue;
                }
                let bad_row = (t + 1..n).find(|&i| {
                    (t + 1..n).any(|j| !m[i][j].div_rem(&m[t][t]).1.is_zero())
                });
                match bad_row {
                    Some(i) => {
                        for j in t..n {
                            let s = &m[t][j] + &m[i][j];
                            m[t][j] = s;
                        }
                    }
                    None => break,
                }
            }
            diagonal.push(m[t][t].monic());
        }
        Ok(diagonal.into_iter().filter(|p| p.degree().unwrap_or(0) > 0).collect())
    }
}

/// True iff `a` and `b` are similar over the field.
pub fn is_similar(a: &Matrix, b: &Matrix) -> Result<bool> {
    if a.rows != b.rows || a.cols != b.cols || a.field != b.field {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} over {} vs {}x{} over {}",
            a.rows, a.cols, a.field, b.rows, b.cols, b.field
        )));
    }
    Ok(a.invariant_factors()? == b.invariant_factors()?)
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        Matrix {
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
            ..self.clone()
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        Matrix {
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
            ..self.clone()
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[ {} ]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Univariate polynomial, coefficients stored from the constant term up.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(field: FieldSpec, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field.one())
    }

    pub fn x(field: FieldSpec) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// Monic polynomial from its coefficients below the leading 1.
    pub fn monic_from_ints(field: FieldSpec, lower: &[i64]) -> Self {
        let mut c: Vec<FieldElement> = lower.iter().map(|&x| field.int(x)).collect();
        c.push(field.one());
        Self::new(field, c)
    }

    pub fn coefficients(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &FieldElement) -> Polynomial {
        Self::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(l) => self.scale(&l.inv().unwrap()),
            None => self.clone(),
        }
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Polynomial::zero(self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&c * dc);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Polynomial::new(self.field, q), Polynomial::new(self.field, r))
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(A)` for a square matrix `A`.
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let n = a.rows();
        self.coeffs.iter().rev().fold(Matrix::zeros(self.field, n, n), |acc, c| {
            &(&acc * a) + &Matrix::identity(self.field, n).scale(c)
        })
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = self.field.zero();
        Polynomial::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(self.field, out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coeff = if mag == "1" && k > 0 { String::new() } else { mag };
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}{}x", if coeff.is_empty() { "" } else { "*" })?,
                _ => write!(f, "{coeff}{}x^{k}", if coeff.is_empty() { "" } else { "*" })?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn determinants() {
        assert!(Matrix::identity(Q, 4).det().unwrap().is_one());
        let m = Matrix::from_ints(Q, &[&[0, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 2, 0], &[1, 0, 0, 0]]);
        assert_eq!(m.det().unwrap(), Q.int(-1));
        let r = Matrix::from_rows(
            Q,
            vec![
                vec![Q.int(0), Q.int(0), Q.int(0), Q.int(1)],
                vec![Q.int(0), Q.int(1), Q.int(1), Q.int(0)],
                vec![Q.int(0), Q.int(1), Q.ratio(1, 2), Q.int(0)],
                vec![Q.int(1), Q.int(0), Q.int(0), Q.int(0)],
            ],
        );
        assert_eq!(r.det().unwrap(), Q.ratio(1, 2));
        assert!(matches!(Matrix::zeros(Q, 2, 3).det(), Err(Error::NonSquare(2, 3))));
    }

    #[test]
    fn kernels() {
        assert!(Matrix::identity(Q, 3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(Q, 3, 3).kernel_basis().len(), 3);
        let k = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![Q.int(-1), Q.int(1)]]);
    }

    #[test]
    fn inverse_and_solve() {
        let a = Matrix::from_ints(Q, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert!(Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(a.solve(&[Q.int(3), Q.int(2)]).unwrap(), vec![Q.int(1), Q.int(1)]);
        let sing = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&[Q.int(1), Q.int(2)]).is_none());
    }

    #[test]
    fn invariant_factor_examples() {
        let x_minus_1 = Polynomial::monic_from_ints(Q, &[-1]);
        assert_eq!(
            Matrix::identity(Q, 3).invariant_factors().unwrap(),
            vec![x_minus_1.clone(), x_minus_1.clone(), x_minus_1]
        );
        let jordan3 = Matrix::from_ints(Q, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(
            jordan3.invariant_factors().unwrap(),
            vec![Polynomial::monic_from_ints(Q, &[0, 0, 0])]
        );
        let j21 = Matrix::from_ints(Q, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(!is_similar(&j21, &jordan3).unwrap());
        assert!(is_similar(&j21, &j21.transpose()).unwrap());
        assert!(is_similar(&j21, &Matrix::identity(Q, 2)).is_err());
    }

    #[test]
    fn char_poly_of_companion() {
        // companion matrix of x³ - 2x + 5
        let c = Matrix::from_ints(Q, &[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(c.char_poly().unwrap(), Polynomial::monic_from_ints(Q, &[5, -2, 0]));
        assert_eq!(c.minimal_polynomial().unwrap(), c.char_poly().unwrap());
    }

    #[test]
    fn polynomial_display() {
        let p = Polynomial::monic_from_ints(Q, &[-1, 0, 2]);
        assert_eq!(p.to_string(), "x^3 + 2*x^2 - 1");
        assert_eq!(Polynomial::zero(Q).to_string(), "0");
    }
}
