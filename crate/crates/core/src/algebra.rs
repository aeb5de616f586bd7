//! Finite-dimensional associative unital algebras given by structure constants.

use std::collections::HashSet;
use std::sync::OnceLock;
use std::ops::{Add, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{FieldElement, FieldSpec};

/// Coordinates of an algebra element with respect to the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<FieldElement>,
}

impl Element {
    pub fn new(coords: Vec<FieldElement>) -> Self {
        Element { coords }
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<FieldElement> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(FieldElement::is_zero)
    }

    pub fn scale(&self, s: &FieldElement) -> Element {
        Element::new(self.coords.iter().map(|c| c * s).collect())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.len(), rhs.len(), "element length mismatch");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.len(), rhs.len(), "element length mismatch");
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::new(self.coords.iter().map(|c| -c).collect())
    }
}

/// Unvalidated algebra description, as read from a file or produced by a builder.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub one: Vec<FieldElement>,
    /// Sparse structure constants `(i, j, k, c)`: `e_i e_j` has `c` on `e_k`.
    /// Repeated entries are summed.
    pub mul: Vec<(usize, usize, usize, FieldElement)>,
    /// Optional explicit basis of the maximal ideal, bypassing the trace-form radical.
    pub radical_basis: Option<Vec<Vec<FieldElement>>>,
}

/// A validated algebra. Immutable.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: FieldSpec,
    names: Vec<String>,
    one: Element,
    table: Vec<FieldElement>,
    /// Nonzero `(k, c)` of `e_i e_j`, indexed by `i * dim + j`.
    sparse: Vec<Vec<(usize, FieldElement)>>,
    declared_radical: Option<Vec<Element>>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    local: OnceLock<Result<Option<LocalData>>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.names == other.names
            && self.one == other.one
            && self.table == other.table
            && self.declared_radical == other.declared_radical
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Checks associativity on all basis triples and the two-sided unit law.
    pub fn validate(data: AlgebraData) -> Result<Algebra> {
        let field = data.field;
        let m = data.basis.len();
        if m == 0 {
            return Err(Error::DimensionMismatch("algebra must have positive dimension".into()));
        }
        let mut seen = HashSet::new();
        for name in &data.basis {
            if name.is_empty() || !seen.insert(name.as_str()) {
                return Err(Error::Format(format!("basis name `{name}` is empty or repeated")));
            }
        }
        if data.one.len() != m {
            return Err(Error::AlgebraMismatch { got: data.one.len(), dim: m });
        }
        let mut table = vec![field.zero(); m * m * m];
        for (i, j, k, c) in &data.mul {
            if *i >= m || *j >= m || *k >= m {
                return Err(Error::Format(format!("structure constant index ({i}, {j}, {k}) out of range")));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            let slot = &mut table[(i * m + j) * m + k];
            *slot = &*slot + c;
        }
        let sparse = table
            .chunks(m)
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect()
            })
            .collect();
        let mut alg = Algebra {
            field,
            names: data.basis,
            one: Element::new(data.one),
            table,
            sparse,
            declared_radical: None,
            left: Vec::new(),
            right: Vec::new(),
            local: OnceLock::new(),
        };
        alg.left = (0..m).map(|i| alg.left_mul_basis(i)).collect();
        alg.right = (0..m).map(|j| alg.right_mul_basis(j)).collect();
        alg.check_associative()?;
        for i in 0..m {
            let e = alg.basis(i);
            if alg.mul(&alg.one, &e) != e || alg.mul(&e, &alg.one) != e {
                return Err(Error::BadUnit);
            }
        }
        if let Some(rad) = data.radical_basis {
            let rad = rad
                .into_iter()
                .map(|v| alg.element(v))
                .collect::<Result<Vec<_>>>()?;
            alg.check_declared_radical(&rad)?;
            alg.declared_radical = Some(rad);
        }
        Ok(alg)
    }

    fn check_associative(&self) -> Result<()> {
        let m = self.dim();
        for i in 0..m {
            for j in 0..m {
                for l in 0..m {
                    // ρ_{e_l}(e_i e_j) against ℓ_{e_i}(e_j e_l)
                    let ij = self.left[i].column(j);
                    let lhs = self.right[l].mul_vec(&ij);
                    let jl = self.left[j].column(l);
                    let rhs = self.left[i].mul_vec(&jl);
                    if lhs != rhs {
                        return Err(Error::NotAssociative(i, j, l));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_declared_radical(&self, rad: &[Element]) -> Result<()> {
        let basis = self.span(rad);
        let rank = basis.len();
        let within = |extra: &[Element]| {
            let mut all = basis.clone();
            all.extend_from_slice(extra);
            self.span(&all).len() == rank
        };
        for r in &basis {
            let products: Vec<Element> = (0..self.dim())
                .flat_map(|i| {
                    let e = self.basis(i);
                    [self.mul(&e, r), self.mul(r, &e)]
                })
                .collect();
            if !within(&products) {
                return Err(Error::BadRadical);
            }
        }
        if self.ideal_powers(&basis).last().is_some_and(|p| !p.is_empty()) {
            return Err(Error::BadRadical);
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn declared_radical(&self) -> Option<&[Element]> {
        self.declared_radical.as_deref()
    }

    /// `c` such that `e_i e_j = Σ_k c[k] e_k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &FieldElement {
        let m = self.dim();
        &self.table[(i * m + j) * m + k]
    }

    /// The unvalidated description this algebra was built from (zeros dropped).
    pub fn to_data(&self) -> AlgebraData {
        let m = self.dim();
        let mut mul = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        mul.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        AlgebraData {
            field: self.field,
            basis: self.names.clone(),
            one: self.one.coords.clone(),
            mul,
            radical_basis: self
                .declared_radical
                .as_ref()
                .map(|r| r.iter().map(|e| e.coords.clone()).collect()),
        }
    }

    pub fn element(&self, coords: Vec<FieldElement>) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(Error::AlgebraMismatch {
                got: coords.len(),
                dim: self.dim(),
            });
        }
        if coords.iter().any(|c| c.field() != self.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Element::new(coords))
    }

    pub fn zero(&self) -> Element {
        Element::new(vec![self.field.zero(); self.dim()])
    }

    pub fn one(&self) -> Element {
        self.one.clone()
    }

    pub fn scalar(&self, c: &FieldElement) -> Element {
        self.one.scale(c)
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        Element::new(v)
    }

    /// Index of the basis vector with the given name.
    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        assert_eq!(x.len(), self.dim(), "element length mismatch");
        assert_eq!(y.len(), self.dim(), "element length mismatch");
        let m = self.dim();
        let mut out = vec![self.field.zero(); m];
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.sparse[i * m + j] {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        Element::new(out)
    }

    /// Checked multiplication for elements of unknown provenance.
    pub fn try_mul(&self, x: &Element, y: &Element) -> Result<Element> {
        for e in [x, y] {
            if e.len() != self.dim() {
                return Err(Error::AlgebraMismatch {
                    got: e.len(),
                    dim: self.dim(),
                });
            }
        }
        Ok(self.mul(x, y))
    }

    pub fn pow(&self, x: &Element, mut n: u64) -> Element {
        let mut acc = self.one();
        let mut base = x.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn left_mul_basis(&self, i: usize) -> Matrix {
        let m = self.dim();
        let mut l = Matrix::zeros(self.field, m, m);
        for j in 0..m {
            for k in 0..m {
                l[(k, j)] = self.structure_constant(i, j, k).clone();
            }
        }
        l
    }

    fn right_mul_basis(&self, j: usize) -> Matrix {
        let m = self.dim();
        let mut r = Matrix::zeros(self.field, m, m);
        for i in 0..m {
            for k in 0..m {
                r[(k, i)] = self.structure_constant(i, j, k).clone();
            }
        }
        r
    }

    fn combine(&self, mats: &[Matrix], x: &Element) -> Matrix {
        let m = self.dim();
        let mut out = Matrix::zeros(self.field, m, m);
        for (c, mat) in x.coords.iter().zip(mats) {
            if !c.is_zero() {
                out = &out + &mat.scale(c);
            }
        }
        out
    }

    /// Left multiplication `ℓ_x`: column `i` holds the coordinates of `x e_i`.
    pub fn left_mul(&self, x: &Element) -> Matrix {
        self.combine(&self.left, x)
    }

    /// Right multiplication `ρ_x`: column `i` holds the coordinates of `e_i x`.
    pub fn right_mul(&self, x: &Element) -> Matrix {
        self.combine(&self.right, x)
    }

    /// Applies a linear map given by its matrix on coordinate columns.
    pub fn apply(&self, map: &Matrix, x: &Element) -> Element {
        Element::new(map.mul_vec(&x.coords))
    }

    pub fn try_inverse(&self, x: &Element) -> Option<Element> {
        let z = Element::new(self.left_mul(x).solve(&self.one.coords)?);
        (self.mul(&z, x) == self.one).then_some(z)
    }

    pub fn is_unit(&self, x: &Element) -> bool {
        self.try_inverse(x).is_some()
    }

    pub fn is_central(&self, x: &Element) -> bool {
        self.left_mul(x) == self.right_mul(x)
    }

    pub fn is_commutative(&self) -> bool {
        self.left == self.right
    }

    /// Basis of the center `Z(R)`.
    pub fn center(&self) -> Vec<Element> {
        let blocks: Vec<Matrix> = self
            .left
            .iter()
            .zip(&self.right)
            .map(|(l, r)| l - r)
            .collect();
        Matrix::vstack(self.field, &blocks)
            .kernel_basis()
            .into_iter()
            .map(Element::new)
            .collect()
    }

    /// Canonical (row-reduced) basis of the span of `vectors`.
    pub fn span(&self, vectors: &[Element]) -> Vec<Element> {
        if vectors.is_empty() {
            return Vec::new();
        }
        let rows = vectors.iter().map(|v| v.coords.clone()).collect();
        let (r, pivots) = Matrix::from_rows(self.field, rows).rref();
        (0..pivots.len()).map(|i| Element::new(r.row(i))).collect()
    }

    /// Successive powers `I, I², …` of the ideal spanned by `basis`, ending with
    /// the first zero power (empty vector) or after `dim + 1` steps.
    fn ideal_powers(&self, basis: &[Element]) -> Vec<Vec<Element>> {
        let mut powers = vec![basis.to_vec()];
        while !powers.last().unwrap().is_empty() && powers.len() <= self.dim() + 1 {
            let prev = powers.last().unwrap();
            let products: Vec<Element> = prev
                .iter()
                .flat_map(|a| basis.iter().map(move |b| (a, b)))
                .map(|(a, b)| self.mul(a, b))
                .collect();
            powers.push(self.span(&products));
        }
        powers
    }

    /// Basis of the Jacobson radical.
    ///
    /// Uses the declared radical when present; otherwise the radical of the
    /// trace form `Tr(ℓ_x ℓ_y)`, which requires characteristic 0 or above the
    /// dimension.
    pub fn radical(&self) -> Result<Vec<Element>> {
        if let Some(r) = &self.declared_radical {
            return Ok(self.span(r));
        }
        let p = self.field.characteristic();
        let m = self.dim();
        if p != 0 && p <= m as u64 {
            return Err(Error::CharTooSmall {
                characteristic: p,
                dim: m,
            });
        }
        let mut gram = Matrix::zeros(self.field, m, m);
        for i in 0..m {
            for j in 0..m {
                let prod = &self.left[i] * &self.left[j];
                let mut tr = self.field.zero();
                for d in 0..m {
                    tr = &tr + &prod[(d, d)];
                }
                gram[(i, j)] = tr;
            }
        }
        let kernel: Vec<Element> = gram.kernel_basis().into_iter().map(Element::new).collect();
        Ok(self.span(&kernel))
    }

    /// Filtration data when the algebra is local with residue field `k`, i.e.
    /// the radical has codimension one.
    pub fn local_structure(&self) -> Result<Option<LocalData>> {
        self.local.get_or_init(|| self.compute_local_structure()).clone()
    }

    fn compute_local_structure(&self) -> Result<Option<LocalData>> {
        let rad = self.radical()?;
        if rad.len() + 1 != self.dim() {
            return Ok(None);
        }
        let mut powers = self.ideal_powers(&rad);
        powers.pop();
        let nilpotency = powers.len();

        let mut filtered: Vec<Element> = Vec::with_capacity(self.dim());
        let mut layer_sizes = Vec::new();
        for layer in powers.iter().rev() {
            let before = filtered.len();
            for v in layer {
                let mut trial = filtered.clone();
                trial.push(v.clone());
                if self.span(&trial).len() == trial.len() {
                    filtered = trial;
                }
            }
            layer_sizes.push(filtered.len() - before);
        }
        filtered.push(self.one());
        layer_sizes.push(1);

        let columns: Vec<_> = filtered.iter().map(|e| e.coords.clone()).collect();
        let change = Matrix::from_columns(self.field, self.dim(), &columns);
        let change_inv = change
            .inverse()
            .ok_or_else(|| Error::Assertion("filtered basis is not a basis".into()))?;
        Ok(Some(LocalData {
            radical: rad,
            powers,
            nilpotency,
            filtered_basis: filtered,
            layer_sizes,
            change,
            change_inv,
        }))
    }

    pub fn sample_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        Element::new((0..self.dim()).map(|_| self.field.sample(rng)).collect())
    }

    /// A random unit by rejection sampling.
    pub fn sample_unit<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        loop {
            let x = self.sample_element(rng);
            if self.is_unit(&x) {
                return x;
            }
        }
    }

    /// Human-readable rendering such as `1 + x - 1/2*xy`.
    pub fn format(&self, x: &Element) -> String {
        let one_index = (0..self.dim()).find(|&i| self.basis(i) == self.one);
        let mut out = String::new();
        for (i, (c, name)) in x.coords.iter().zip(&self.names).enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, text),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if one_index == Some(i) {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(name);
            } else {
                out.push_str(&format!("{mag}*{name}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Radical filtration of a local algebra with residue field `k`.
#[derive(Clone, Debug)]
pub struct LocalData {
    /// Basis of `m`.
    pub radical: Vec<Element>,
    /// Bases of `m¹, m², …, mⁿ` (all nonzero).
    pub powers: Vec<Vec<Element>>,
    /// `n` with `mⁿ ≠ 0 = mⁿ⁺¹`.
    pub nilpotency: usize,
    /// Basis of `mⁿ`, completed to `mⁿ⁻¹`, …, to `m`, then `1`.
    pub filtered_basis: Vec<Element>,
    /// Number of basis vectors contributed by each layer, deepest first.
    pub layer_sizes: Vec<usize>,
    change: Matrix,
    change_inv: Matrix,
}

impl LocalData {
    /// The image of `x` in `R/m ≅ k`.
    pub fn residue(&self, x: &Element) -> FieldElement {
        let c = self.change_inv.mul_vec(x.coords());
        c.last().unwrap().clone()
    }

    pub fn in_radical(&self, x: &Element) -> bool {
        self.residue(x).is_zero()
    }

    /// Matrix of a linear map expressed in the filtered basis.
    pub fn in_filtered_basis(&self, map: &Matrix) -> Matrix {
        &(&self.change_inv * map) * &self.change
    }

    /// Random unit: nonzero residue plus a random combination of the radical basis.
    pub fn sample_unit<R: Rng + ?Sized>(&self, alg: &Algebra, rng: &mut R) -> Element {
        let field = alg.field();
        let mut u = alg.scalar(&field.sample_nonzero(rng));
        for r in &self.radical {
            u = &u + &r.scale(&field.sample(rng));
        }
        u
    }

    /// Random element of `m`.
    pub fn sample_radical<R: Rng + ?Sized>(&self, alg: &Algebra, rng: &mut R) -> Element {
        let mut u = alg.zero();
        for r in &self.radical {
            u = &u + &r.scale(&alg.field().sample(rng));
        }
        u
    }
}

/// True iff `map` (target.dim × source.dim) sends 1 to 1 and respects products
/// of basis vectors.
pub fn verify_morphism(map: &Matrix, source: &Algebra, target: &Algebra) -> Result<bool> {
    if map.rows() != target.dim() || map.cols() != source.dim() || source.field() != target.field() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, algebras have dimensions {} -> {}",
            map.rows(),
            map.cols(),
            source.dim(),
            target.dim()
        )));
    }
    if target.apply(map, &source.one()) != target.one() {
        return Ok(false);
    }
    let images: Vec<Element> = (0..source.dim())
        .map(|i| target.apply(map, &source.basis(i)))
        .collect();
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = target.apply(map, &source.mul(&source.basis(i), &source.basis(j)));
            if lhs != target.mul(&images[i], &images[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn truncated(n: usize) -> Algebra {
        let mut mul = Vec::new();
        for i in 0..n {
            for j in 0..n - i {
                mul.push((i, j, i + j, Q.one()));
            }
        }
        let mut one = vec![Q.zero(); n];
        one[0] = Q.one();
        Algebra::validate(AlgebraData {
            field: Q,
            basis: (0..n).map(|i| format!("t{i}")).collect(),
            one,
            mul,
            radical_basis: None,
        })
        .unwrap()
    }

    fn matrix_algebra() -> Algebra {
        // e_ij e_kl = δ_jk e_il on basis e11, e12, e21, e22
        let idx = |i: usize, j: usize| 2 * i + j;
        let mut mul = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    mul.push((idx(i, j), idx(j, l), idx(i, l), Q.one()));
                }
            }
        }
        Algebra::validate(AlgebraData {
            field: Q,
            basis: vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()],
            one: vec![Q.one(), Q.zero(), Q.zero(), Q.one()],
            mul,
            radical_basis: None,
        })
        .unwrap()
    }

    #[test]
    fn ground_field_is_an_algebra() {
        let k = Algebra::validate(AlgebraData {
            field: Q,
            basis: vec!["1".into()],
            one: vec![Q.one()],
            mul: vec![(0, 0, 0, Q.one())],
            radical_basis: None,
        })
        .unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.radical().unwrap().is_empty());
        assert_eq!(k.local_structure().unwrap().unwrap().nilpotency, 0);
    }

    #[test]
    fn corrupted_table_is_rejected() {
        let mut data = truncated(3).to_data();
        // t1 t2 = t1 gives (t1 t1) t2 = 0 but t1 (t1 t2) = t2
        data.mul.push((1, 2, 1, Q.one()));
        assert!(matches!(Algebra::validate(data), Err(Error::NotAssociative(..))));
        let mut data = truncated(3).to_data();
        data.one = vec![Q.zero(), Q.one(), Q.zero()];
        assert!(matches!(Algebra::validate(data), Err(Error::BadUnit)));
    }

    #[test]
    fn radicals() {
        let a = truncated(4);
        let rad = a.radical().unwrap();
        assert_eq!(rad, vec![a.basis(1), a.basis(2), a.basis(3)]);
        assert!(matrix_algebra().radical().unwrap().is_empty());
        assert!(matrix_algebra().local_structure().unwrap().is_none());
    }

    #[test]
    fn small_characteristic_guard() {
        let f = FieldSpec::Prime(3);
        let data = AlgebraData {
            field: f,
            basis: vec!["1".into(), "t".into(), "t2".into(), "t3".into()],
            one: vec![f.one(), f.zero(), f.zero(), f.zero()],
            mul: truncated(4)
                .to_data()
                .mul
                .into_iter()
                .map(|(i, j, k, _)| (i, j, k, f.one()))
                .collect(),
            radical_basis: None,
        };
        let a = Algebra::validate(data.clone()).unwrap();
        assert!(matches!(a.radical(), Err(Error::CharTooSmall { .. })));
        let with_rad = Algebra::validate(AlgebraData {
            radical_basis: Some((1..4).map(|i| a.basis(i).into_coords()).collect()),
            ..data.clone()
        })
        .unwrap();
        assert_eq!(with_rad.local_structure().unwrap().unwrap().nilpotency, 3);
        let bogus = AlgebraData {
            radical_basis: Some(vec![a.one().into_coords()]),
            ..data
        };
        assert!(matches!(Algebra::validate(bogus), Err(Error::BadRadical)));
    }

    #[test]
    fn inverses_and_center() {
        let a = truncated(3);
        let t = a.basis(1);
        assert!(a.try_inverse(&t).is_none());
        let u = &a.one() + &t;
        let inv = a.try_inverse(&u).unwrap();
        assert_eq!(a.mul(&u, &inv), a.one());
        assert_eq!(a.center().len(), 3);
        let m = matrix_algebra();
        assert_eq!(m.center().len(), 1);
        assert!(!m.is_central(&m.basis(1)));
        assert!(m.try_inverse(&m.basis(0)).is_none());
        let swap = m.element(vec![Q.zero(), Q.one(), Q.one(), Q.zero()]).unwrap();
        assert_eq!(m.try_inverse(&swap).unwrap(), swap);
    }

    #[test]
    fn filtration_order() {
        let a = truncated(4);
        let local = a.local_structure().unwrap().unwrap();
        assert_eq!(local.nilpotency, 3);
        assert_eq!(local.layer_sizes, vec![1, 1, 1, 1]);
        assert_eq!(
            local.filtered_basis,
            vec![a.basis(3), a.basis(2), a.basis(1), a.basis(0)]
        );
        let x = &a.scalar(&Q.int(5)) + &a.basis(2);
        assert_eq!(local.residue(&x), Q.int(5));
    }

    #[test]
    fn identity_is_a_morphism() {
        let a = truncated(3);
        assert!(verify_morphism(&Matrix::identity(Q, 3), &a, &a).unwrap());
        assert!(!verify_morphism(&Matrix::identity(Q, 3).scale(&Q.int(2)), &a, &a).unwrap());
        assert!(verify_morphism(&Matrix::identity(Q, 2), &a, &a).is_err());
    }

    #[test]
    fn formatting() {
        let a = truncated(3);
        let x = a.element(vec![Q.int(1), Q.int(-1), Q.ratio(1, 2)]).unwrap();
        assert_eq!(a.format(&x), "1 - t1 + 1/2*t2");
    }
}
