#![allow(dead_code)]

use frobform::corpus::{self, CorpusEntry};
use frobform::{Algebra, Element, FieldSpec, Matrix};
use rand::Rng;

pub const Q: FieldSpec = FieldSpec::Rationals;

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// Every local corpus algebra that the property suites range over.
pub fn local_corpus() -> Vec<CorpusEntry> {
    let (f7, f5, f3) = (gf(7), gf(5), gf(3));
    vec![
        corpus::nakayama_nesbitt(Q, &Q.one()).unwrap(),
        corpus::nakayama_nesbitt(f7, &f7.int(2)).unwrap(),
        corpus::nakayama_nesbitt(Q, &Q.int(2)).unwrap(),
        corpus::extended_nn(Q),
        corpus::extended_nn(f7),
        corpus::planar_quartic(Q, &Q.int(1), &Q.int(1), &Q.int(2)).unwrap(),
        corpus::planar_quartic(f7, &f7.int(1), &f7.int(1), &f7.int(2)).unwrap(),
        corpus::quartic_companion(Q, &Q.int(2)).unwrap(),
        corpus::truncated_poly(Q, 4).unwrap(),
        corpus::truncated_poly(f5, 4).unwrap(),
        corpus::truncated_poly(f3, 3).unwrap(),
        corpus::heisenberg27(),
    ]
}

pub fn label(e: &CorpusEntry) -> String {
    let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{}({}; {})", e.name, e.algebra.field(), params.join(", "))
}

pub fn random_matrix<R: Rng>(field: FieldSpec, n: usize, rng: &mut R) -> Matrix {
    let rows = (0..n).map(|_| (0..n).map(|_| field.sample(rng)).collect()).collect();
    Matrix::from_rows(field, rows)
}

pub fn random_unit<R: Rng>(alg: &Algebra, rng: &mut R) -> Element {
    match alg.local_structure().unwrap() {
        Some(local) => local.sample_unit(alg, rng),
        None => alg.sample_unit(rng),
    }
}

/// A random unit in the center: a random combination of a center basis.
pub fn random_central_unit<R: Rng>(alg: &Algebra, rng: &mut R) -> Element {
    let center = alg.center();
    loop {
        let mut x = alg.zero();
        for z in &center {
            x = &x + &z.scale(&alg.field().sample(rng));
        }
        if alg.is_unit(&x) {
            return x;
        }
    }
}
