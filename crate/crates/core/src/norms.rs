//! σ-norms, root lifting through the radical filtration, and straightening
//! a form so its Nakayama automorphism has finite order.
//!
//! Both lifting routines work in the commutative subalgebra `k[m]` generated
//! by a radical element `m`: the unknown root is a truncated power series
//! in `m`, and its coefficients are solved one degree at a time.

use crate::algebra::{verify_morphism, Algebra, Element, LocalData};
use crate::error::{ensure, Error, Result};
use crate::frobenius::{inner_order, nakayama, twist, Form};
use crate::linalg::Matrix;
use crate::scalar::{nth_root_in_k, FieldElement, FieldSpec};

/// `N_i(r) = r σ(r) ⋯ σ^{i-1}(r)`, with `N_0(r) = 1`.
pub fn partial_norm(alg: &Algebra, sigma: &Matrix, r: &Element, i: usize) -> Result<Element> {
    if !verify_morphism(sigma, alg, alg)? {
        return Err(Error::NotAnAutomorphism);
    }
    Ok(partial_norm_unchecked(alg, sigma, r, i))
}

fn partial_norm_unchecked(alg: &Algebra, sigma: &Matrix, r: &Element, i: usize) -> Element {
    let mut acc = alg.one();
    let mut factor = r.clone();
    for _ in 0..i {
        acc = alg.mul(&acc, &factor);
        factor = alg.apply(sigma, &factor);
    }
    acc
}

/// An automorphism together with the exponent used for its norm.
#[derive(Clone, Debug)]
pub struct NormContext {
    sigma: Matrix,
    n: usize,
}

impl NormContext {
    pub fn new(alg: &Algebra, sigma: Matrix, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroParameter);
        }
        if !verify_morphism(&sigma, alg, alg)? || sigma.inverse().is_none() {
            return Err(Error::NotAnAutomorphism);
        }
        Ok(NormContext { sigma, n })
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

/// `N_σ(u) = u σ(u) ⋯ σ^{n-1}(u)`.
pub fn norm(alg: &Algebra, ctx: &NormContext, u: &Element) -> Result<Element> {
    if !alg.is_unit(u) {
        return Err(Error::NotAUnit);
    }
    Ok(partial_norm_unchecked(alg, &ctx.sigma, u, ctx.n))
}

fn require_local(alg: &Algebra) -> Result<LocalData> {
    alg.local_structure()?.ok_or(Error::NotLocal)
}

/// Powers `1, m, m², …` up to the last nonzero one.
fn nilpotent_powers(alg: &Algebra, m: &Element) -> Vec<Element> {
    let mut powers = vec![alg.one()];
    let mut p = m.clone();
    while !p.is_zero() {
        powers.push(p.clone());
        p = alg.mul(&p, m);
        if powers.len() > alg.dim() + 1 {
            break;
        }
    }
    powers
}

fn evaluate_series(alg: &Algebra, coeffs: &[FieldElement], powers: &[Element]) -> Element {
    coeffs
        .iter()
        .zip(powers)
        .fold(alg.zero(), |acc, (c, p)| &acc + &p.scale(c))
}

/// Product of truncated series (coefficients from degree 0), cut at `len` terms.
fn series_mul(field: FieldSpec, a: &[FieldElement], b: &[FieldElement], len: usize) -> Vec<FieldElement> {
    let mut out = vec![field.zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn series_pow(field: FieldSpec, a: &[FieldElement], mut e: usize, len: usize) -> Vec<FieldElement> {
    let mut acc = vec![field.zero(); len];
    acc[0] = field.one();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = series_mul(field, &acc, &base, len);
        }
        e >>= 1;
        if e > 0 {
            base = series_mul(field, &base, &base, len);
        }
    }
    acc
}

/// Solves `(1 + b₁T + b₂T² + …)ⁿ = 1 + cT` modulo `T^len` one coefficient at
/// a time: the coefficient of `T^j` is `n·b_j` plus terms in lower `b`'s.
fn solve_power_series(field: FieldSpec, n: usize, c: &FieldElement, len: usize) -> Vec<FieldElement> {
    let n_inv = field.int(n as i64).inv().expect("characteristic does not divide n");
    let mut b = vec![field.zero(); len];
    b[0] = field.one();
    for j in 1..len {
        let current = series_pow(field, &b, n, j + 1);
        let target = if j == 1 { c.clone() } else { field.zero() };
        b[j] = &(&target - &current[j]) * &n_inv;
    }
    b
}

/// `(α, v)` with `α v² = u`, where `α` is the residue of `u` and
/// `v = 1 + a₁m + a₂m² + …` for `m = u − α`.
///
/// `v` lies in the unital subalgebra generated by `u`, so it is central
/// whenever `u` is.
pub fn central_square_root(alg: &Algebra, u: &Element) -> Result<(FieldElement, Element)> {
    let field = alg.field();
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic(2));
    }
    let local = require_local(alg)?;
    let alpha = local.residue(u);
    if alpha.is_zero() {
        return Err(Error::NotAUnit);
    }
    let m = u - &alg.scalar(&alpha);
    let powers = nilpotent_powers(alg, &m);
    let coeffs = solve_power_series(field, 2, &alpha.inv().unwrap(), powers.len());
    let v = evaluate_series(alg, &coeffs, &powers);
    ensure(alg.mul(&v, &v).scale(&alpha) == *u, || "α v² != u".into())?;
    Ok((alpha, v))
}

/// A unit `u` with `uⁿ = x` and `σ(u) = u`, for `x` fixed by `σ` whose
/// residue has an `n`-th root in `k`.
pub fn fixed_nth_root(alg: &Algebra, x: &Element, sigma: &Matrix, n: usize) -> Result<Element> {
    let field = alg.field();
    let p = field.characteristic();
    if n == 0 {
        return Err(Error::ZeroParameter);
    }
    if p != 0 && n as u64 % p == 0 {
        return Err(Error::BadCharacteristic(p));
    }
    let local = require_local(alg)?;
    if alg.apply(sigma, x) != *x {
        return Err(Error::NotFixed);
    }
    let alpha = local.residue(x);
    if alpha.is_zero() {
        return Err(Error::NotAUnit);
    }
    let u0 = nth_root_in_k(&alpha, n).ok_or_else(|| Error::NoRootInResidueField(alpha.clone(), n))?;
    let m = x - &alg.scalar(&alpha);
    let powers = nilpotent_powers(alg, &m);
    // u = u₀(1 + w) with (1 + w)ⁿ = 1 + m/α
    let coeffs = solve_power_series(field, n, &alpha.inv().unwrap(), powers.len());
    let u = evaluate_series(alg, &coeffs, &powers).scale(&u0);
    ensure(alg.pow(&u, n as u64) == *x, || "uⁿ != x".into())?;
    ensure(alg.apply(sigma, &u) == u, || "σ(u) != u".into())?;
    Ok(u)
}

/// Output of [`straighten_form`].
#[derive(Clone, Debug)]
pub struct Straightened {
    /// The new form `B'(r, s) = B(r, su)`.
    pub form: Form,
    /// Inner order `n` of the original Nakayama automorphism.
    pub order: usize,
    /// Normalized witness `a` with `σⁿ = I_a` and residue 1.
    pub inner_witness: Element,
    /// The twisting unit `u`, with `N_σ(u) = a⁻¹`.
    pub unit: Element,
}

/// Replaces `B` by a twist whose Nakayama automorphism `σ'` has `(σ')ⁿ = Id`,
/// where `n` is the inner order of `σ`.
pub fn straighten_form(alg: &Algebra, form: &Form, bound: usize) -> Result<Straightened> {
    let local = require_local(alg)?;
    let sigma = nakayama(alg, form)?;
    let (n, a) = inner_order(alg, &sigma, bound)?.ok_or(Error::OrderBoundExceeded(bound))?;
    let p = alg.field().characteristic();
    if p != 0 && n as u64 % p == 0 {
        return Err(Error::BadCharacteristic(p));
    }
    let a = a.scale(&local.residue(&a).inv().expect("witness is a unit"));
    ensure(alg.apply(&sigma, &a) == a, || "σ(a) != a".into())?;
    let a_inv = alg.try_inverse(&a).ok_or(Error::NotAUnit)?;
    let u = fixed_nth_root(alg, &a_inv, &sigma, n)?;
    let straightened = twist(alg, form, &u)?;
    let sigma2 = nakayama(alg, &straightened)?;
    ensure(sigma2.pow(n as u64).is_identity(), || {
        format!("straightened Nakayama automorphism does not have order dividing {n}")
    })?;
    Ok(Straightened {
        form: straightened,
        order: n,
        inner_witness: a,
        unit: u,
    })
}
