//! Functionals, associative forms, the Nakayama automorphism and the
//! transpose calculus.
//!
//! Forms use the column convention `B(r, s) = rᵀ B s`, so the Nakayama
//! automorphism is `Σ = B⁻¹ Bᵀ` and the transpose of an endomorphism `φ`
//! with respect to `B` is `φᵗ = B⁻¹ φᵀ B`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{verify_morphism, Algebra, Element};
use crate::error::{ensure, Error, Result};
use crate::linalg::Matrix;
use crate::scalar::FieldElement;

/// Default bound when searching for the order of an automorphism.
pub const DEFAULT_ORDER_BOUND: usize = 256;
/// Random null-space combinations tried by [`inner_decompose`] outside the local case.
pub const DEFAULT_INNER_ATTEMPTS: usize = 64;

/// A linear functional `λ: R → k`, stored as a row of values on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Functional {
    pub covector: Vec<FieldElement>,
}

impl Functional {
    pub fn new(covector: Vec<FieldElement>) -> Self {
        Functional { covector }
    }

    /// The functional reading off the coefficient of basis vector `index`.
    pub fn coefficient(alg: &Algebra, index: usize) -> Self {
        Functional::new(alg.basis(index).into_coords())
    }

    pub fn eval(&self, x: &Element) -> FieldElement {
        let field = x.coords()[0].field();
        self.covector
            .iter()
            .zip(x.coords())
            .fold(field.zero(), |acc, (a, b)| &acc + &(a * b))
    }
}

/// A nondegenerate associative bilinear form, with its inverse cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    matrix: Matrix,
    inverse: Matrix,
    symmetric: bool,
}

impl Form {
    /// Wraps a matrix after checking it is nondegenerate and associative for `alg`.
    pub fn from_matrix(alg: &Algebra, matrix: Matrix) -> Result<Form> {
        let m = alg.dim();
        if matrix.rows() != m || matrix.cols() != m {
            return Err(Error::DimensionMismatch(format!(
                "form is {}x{}, algebra has dimension {m}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let Some(inverse) = matrix.inverse() else {
            let witness = matrix.kernel_basis().swap_remove(0);
            return Err(Error::Degenerate { witness });
        };
        let form = Form {
            symmetric: matrix == matrix.transpose(),
            matrix,
            inverse,
        };
        let products: Vec<Vec<Element>> = (0..m)
            .map(|i| (0..m).map(|j| alg.mul(&alg.basis(i), &alg.basis(j))).collect())
            .collect();
        // (Bᵀ (e_i e_j))_l = B(e_i e_j, e_l)
        let bt = form.matrix.transpose();
        for i in 0..m {
            for j in 0..m {
                let left = bt.mul_vec(products[i][j].coords());
                let row_i = form.matrix.row(i);
                for l in 0..m {
                    let right = products[j][l]
                        .coords()
                        .iter()
                        .zip(&row_i)
                        .fold(alg.field().zero(), |acc, (a, b)| &acc + &(a * b));
                    if left[l] != right {
                        return Err(Error::NotAssociativeForm(i, j, l));
                    }
                }
            }
        }
        Ok(form)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `B⁻¹`.
    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `B(r, s) = rᵀ B s`.
    pub fn eval(&self, r: &Element, s: &Element) -> FieldElement {
        let bs = self.matrix.mul_vec(s.coords());
        let field = self.matrix.field();
        r.coords()
            .iter()
            .zip(&bs)
            .fold(field.zero(), |acc, (a, b)| &acc + &(a * b))
    }
}

/// `B(r, s) := λ(rs)`; fails with a kernel vector `s` (so `Rs ⊆ ker λ`) when degenerate.
pub fn form_from_functional(alg: &Algebra, lambda: &Functional) -> Result<Form> {
    if lambda.covector.len() != alg.dim() {
        return Err(Error::AlgebraMismatch {
            got: lambda.covector.len(),
            dim: alg.dim(),
        });
    }
    let m = alg.dim();
    let mut b = Matrix::zeros(alg.field(), m, m);
    for i in 0..m {
        for j in 0..m {
            b[(i, j)] = lambda.eval(&alg.mul(&alg.basis(i), &alg.basis(j)));
        }
    }
    Form::from_matrix(alg, b).map_err(|e| match e {
        Error::NotAssociativeForm(..) => Error::Assertion("λ(rs) form is not associative".into()),
        other => other,
    })
}

/// `λ(r) := B(r, 1)`.
pub fn functional_from_form(alg: &Algebra, form: &Form) -> Functional {
    Functional::new(form.matrix.mul_vec(alg.one().coords()))
}

/// Searches for a functional giving a nondegenerate form.
///
/// For local algebras the functional dual to the first basis vector of the top
/// power `mⁿ` is tried first; then `attempts` seeded random covectors. Failure
/// is [`Error::Inconclusive`], never a proof that the algebra is not Frobenius.
pub fn find_frobenius_functional(alg: &Algebra, seed: u64, attempts: usize) -> Result<Functional> {
    if let Ok(Some(local)) = alg.local_structure() {
        let change = Matrix::from_columns(
            alg.field(),
            alg.dim(),
            &local
                .filtered_basis
                .iter()
                .map(|e| e.coords().to_vec())
                .collect::<Vec<_>>(),
        );
        if let Some(inv) = change.inverse() {
            let candidate = Functional::new(inv.row(0));
            if form_from_functional(alg, &candidate).is_ok() {
                return Ok(candidate);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let candidate = Functional::new(alg.sample_element(&mut rng).into_coords());
        match form_from_functional(alg, &candidate) {
            Ok(_) => return Ok(candidate),
            Err(Error::Degenerate { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Inconclusive { attempts })
}

/// The twisted form `B'(r, s) = B(r, su)`, with matrix `B ρ_u`.
pub fn twist(alg: &Algebra, form: &Form, u: &Element) -> Result<Form> {
    let u_inv = alg.try_inverse(u).ok_or(Error::NotAUnit)?;
    let matrix = form.matrix() * &alg.right_mul(u);
    let inverse = &alg.right_mul(&u_inv) * form.inverse();
    Ok(Form {
        symmetric: matrix == matrix.transpose(),
        matrix,
        inverse,
    })
}

/// Matrix of the Nakayama automorphism, `Σ = B⁻¹ Bᵀ`, characterized by
/// `B(r, s) = B(s, Σ r)`.
pub fn nakayama(alg: &Algebra, form: &Form) -> Result<Matrix> {
    let sigma = form.inverse() * &form.matrix().transpose();
    ensure(verify_morphism(&sigma, alg, alg)?, || {
        "Nakayama map is not an algebra automorphism".into()
    })?;
    for i in 0..alg.dim() {
        let r = alg.basis(i);
        let sr = alg.apply(&sigma, &r);
        for j in 0..alg.dim() {
            let s = alg.basis(j);
            ensure(form.eval(&r, &s) == form.eval(&s, &sr), || {
                format!("B(e{i}, e{j}) != B(e{j}, Σ e{i})")
            })?;
        }
    }
    Ok(sigma)
}

/// Transpose with respect to the form: `φᵗ = B⁻¹ φᵀ B`, so `B(φr, s) = B(r, φᵗ s)`.
pub fn transpose(phi: &Matrix, form: &Form) -> Matrix {
    &(form.inverse() * &phi.transpose()) * form.matrix()
}

/// `k`-fold transpose `φ^{t^k}`.
pub fn transpose_power(phi: &Matrix, form: &Form, k: usize) -> Matrix {
    (0..k).fold(phi.clone(), |acc, _| transpose(&acc, form))
}

/// Least `n ≤ bound` with `Σⁿ = Id`.
pub fn automorphism_order(sigma: &Matrix, bound: usize) -> Option<usize> {
    let mut power = sigma.clone();
    for n in 1..=bound {
        if power.is_identity() {
            return Some(n);
        }
        power = &power * sigma;
    }
    None
}

/// The inner automorphism `I_a: r ↦ a r a⁻¹` as a matrix, `ℓ_a ρ_{a⁻¹}`.
pub fn inner_automorphism(alg: &Algebra, a: &Element) -> Result<Matrix> {
    let a_inv = alg.try_inverse(a).ok_or(Error::NotAUnit)?;
    Ok(&alg.left_mul(a) * &alg.right_mul(&a_inv))
}

/// Finds a unit `a` with `τ = I_a`, using the default seed and attempts.
pub fn inner_decompose(alg: &Algebra, tau: &Matrix) -> Result<Option<Element>> {
    inner_decompose_with(alg, tau, 0, DEFAULT_INNER_ATTEMPTS)
}

/// Finds a unit `a` with `τ(r) = a r a⁻¹` for all `r`.
///
/// The candidates form the null space of the stacked maps `ℓ_{τ(e_i)} − ρ_{e_i}`.
/// In a local algebra the answer is exact: `Ok(None)` proves `τ` is outer.
/// Otherwise basis vectors and `attempts` random combinations are tried and
/// failure is reported as [`Error::Incomplete`].
pub fn inner_decompose_with(
    alg: &Algebra,
    tau: &Matrix,
    seed: u64,
    attempts: usize,
) -> Result<Option<Element>> {
    if !verify_morphism(tau, alg, alg)? || tau.inverse().is_none() {
        return Err(Error::NotAnAutomorphism);
    }
    if tau.is_identity() {
        return Ok(Some(alg.one()));
    }
    let blocks: Vec<Matrix> = (0..alg.dim())
        .map(|i| {
            let image = alg.apply(tau, &alg.basis(i));
            &alg.left_mul(&image) - &alg.right_mul(&alg.basis(i))
        })
        .collect();
    let null: Vec<Element> = Matrix::vstack(alg.field(), &blocks)
        .kernel_basis()
        .into_iter()
        .map(Element::new)
        .collect();
    if let Some(a) = null.iter().find(|a| alg.is_unit(a)) {
        return Ok(Some(a.clone()));
    }
    let local = matches!(alg.local_structure(), Ok(Some(_)));
    if local || null.is_empty() {
        // in a local algebra the null space lies in m, so it contains no unit
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let mut a = alg.zero();
        for v in &null {
            a = &a + &v.scale(&alg.field().sample(&mut rng));
        }
        if alg.is_unit(&a) {
            return Ok(Some(a));
        }
    }
    Err(Error::Incomplete)
}

/// Least `n ≤ bound` such that `Σⁿ` is inner, with a witness `a` (`Σⁿ = I_a`).
///
/// The witness is checked to be fixed by `Σ`.
pub fn inner_order(alg: &Algebra, sigma: &Matrix, bound: usize) -> Result<Option<(usize, Element)>> {
    let mut power = sigma.clone();
    let mut incomplete = false;
    for n in 1..=bound {
        match inner_decompose(alg, &power) {
            Ok(Some(a)) => {
                ensure(alg.apply(sigma, &a) == a, || {
                    "inner witness of a Nakayama power is not fixed".into()
                })?;
                return Ok(Some((n, a)));
            }
            Ok(None) => {}
            Err(Error::Incomplete) => incomplete = true,
            Err(e) => return Err(e),
        }
        power = &power * sigma;
    }
    if incomplete {
        Err(Error::Incomplete)
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraData;
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn dual_numbers() -> Algebra {
        Algebra::validate(AlgebraData {
            field: Q,
            basis: vec!["1".into(), "t".into()],
            one: vec![Q.one(), Q.zero()],
            mul: vec![(0, 0, 0, Q.one()), (0, 1, 1, Q.one()), (1, 0, 1, Q.one())],
            radical_basis: None,
        })
        .unwrap()
    }

    /// k[x, y]/(x, y)²: local with a two-dimensional socle.
    fn square_zero_plane() -> Algebra {
        Algebra::validate(AlgebraData {
            field: Q,
            basis: vec!["1".into(), "x".into(), "y".into()],
            one: vec![Q.one(), Q.zero(), Q.zero()],
            mul: vec![
                (0, 0, 0, Q.one()),
                (0, 1, 1, Q.one()),
                (1, 0, 1, Q.one()),
                (0, 2, 2, Q.one()),
                (2, 0, 2, Q.one()),
            ],
            radical_basis: None,
        })
        .unwrap()
    }

    #[test]
    fn degenerate_functional_reports_ideal() {
        let a = dual_numbers();
        let err = form_from_functional(&a, &Functional::coefficient(&a, 0)).unwrap_err();
        match err {
            Error::Degenerate { witness } => assert_eq!(witness, vec![Q.zero(), Q.one()]),
            other => panic!("unexpected {other:?}"),
        }
        let form = form_from_functional(&a, &Functional::coefficient(&a, 1)).unwrap();
        assert!(form.is_symmetric());
        assert_eq!(functional_from_form(&a, &form), Functional::coefficient(&a, 1));
    }

    #[test]
    fn ground_field_functional() {
        let k = Algebra::validate(AlgebraData {
            field: Q,
            basis: vec!["1".into()],
            one: vec![Q.one()],
            mul: vec![(0, 0, 0, Q.one())],
            radical_basis: None,
        })
        .unwrap();
        let lambda = find_frobenius_functional(&k, 1, 4).unwrap();
        assert!(!lambda.covector[0].is_zero());
        let form = Form::from_matrix(&k, Matrix::identity(Q, 1)).unwrap();
        assert_eq!(functional_from_form(&k, &form).covector, vec![Q.one()]);
    }

    #[test]
    fn socle_of_dimension_two_defeats_every_functional() {
        // Oracle: for λ = (a, b, c) the Gram matrix is
        //   [[a, b, c], [b, 0, 0], [c, 0, 0]]
        // whose determinant expands to 0 identically, so no λ works.
        let a = square_zero_plane();
        for (p, q, r) in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (3, -2, 5)] {
            let lambda = Functional::new(vec![Q.int(p), Q.int(q), Q.int(r)]);
            let m = Matrix::from_ints(Q, &[&[p, q, r], &[q, 0, 0], &[r, 0, 0]]);
            assert!(m.det().unwrap().is_zero());
            assert!(form_from_functional(&a, &lambda).is_err());
        }
        assert!(matches!(
            find_frobenius_functional(&a, 7, 50),
            Err(Error::Inconclusive { attempts: 50 })
        ));
    }

    #[test]
    fn twist_by_one_and_back() {
        let a = dual_numbers();
        let form = form_from_functional(&a, &Functional::coefficient(&a, 1)).unwrap();
        assert_eq!(twist(&a, &form, &a.one()).unwrap(), form);
        let u = a.element(vec![Q.int(2), Q.int(3)]).unwrap();
        let u_inv = a.try_inverse(&u).unwrap();
        let back = twist(&a, &twist(&a, &form, &u).unwrap(), &u_inv).unwrap();
        assert_eq!(back.matrix(), form.matrix());
        assert!(matches!(twist(&a, &form, &a.basis(1)), Err(Error::NotAUnit)));
    }

    #[test]
    fn symmetric_forms_have_trivial_nakayama() {
        let a = dual_numbers();
        let form = form_from_functional(&a, &Functional::coefficient(&a, 1)).unwrap();
        let sigma = nakayama(&a, &form).unwrap();
        assert!(sigma.is_identity());
        assert_eq!(automorphism_order(&sigma, 10), Some(1));
        let phi = Matrix::from_ints(Q, &[&[1, 2], &[3, 4]]);
        assert_eq!(transpose_power(&phi, &form, 2), phi);
        assert!(transpose(&Matrix::identity(Q, 2), &form).is_identity());
        assert_eq!(inner_order(&a, &sigma, 5).unwrap(), Some((1, a.one())));
    }
}
