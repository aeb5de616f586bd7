//! Structure-constant builders for the standard example algebras, each paired
//! with a distinguished Frobenius functional and known answers.

use std::collections::HashMap;

use crate::algebra::{Algebra, AlgebraData};
use crate::error::{Error, Result};
use crate::frobenius::Functional;
use crate::linalg::Matrix;
use crate::scalar::{FieldElement, FieldSpec};

/// Facts about an entry that are known independently of the library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnownAnswer {
    /// Matrix of the form defined by the distinguished functional.
    FormMatrix(Matrix),
    /// Nakayama automorphism of that form.
    Nakayama(Matrix),
    /// Order of the Nakayama automorphism; `None` when it is infinite.
    NakayamaOrder(Option<usize>),
    /// Whether some form on the algebra is symmetric.
    Symmetric(bool),
    /// `N_σ(unit) = norm` for the Nakayama automorphism of the form.
    Norm { unit: Vec<FieldElement>, norm: Vec<FieldElement>, central: bool },
    /// A representative of the determinant class of every form.
    DetClass(FieldElement),
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub algebra: Algebra,
    pub functional: Functional,
    pub known: Vec<KnownAnswer>,
}

impl CorpusEntry {
    fn new(name: &str, params: Vec<(String, String)>, algebra: Algebra, lambda_index: usize) -> Self {
        let functional = Functional::coefficient(&algebra, lambda_index);
        CorpusEntry {
            name: name.to_string(),
            params,
            algebra,
            functional,
            known: Vec::new(),
        }
    }
}

fn unit_vector(field: FieldSpec, dim: usize, i: usize) -> Vec<FieldElement> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// Builds a table from a product rule on basis indices.
fn table(dim: usize, rule: impl Fn(usize, usize) -> Option<(usize, FieldElement)>) -> Vec<(usize, usize, usize, FieldElement)> {
    let mut mul = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if let Some((k, c)) = rule(i, j) {
                if !c.is_zero() {
                    mul.push((i, j, k, c));
                }
            }
        }
    }
    mul
}

/// `R_α = k⟨x,y⟩/(x² = y² = 0, yx = α xy)` on the basis `1, x, y, xy`.
pub fn nakayama_nesbitt(field: FieldSpec, alpha: &FieldElement) -> Result<CorpusEntry> {
    if alpha.field() != field {
        return Err(Error::FieldMismatch);
    }
    let alpha_inv = alpha.inv().ok_or(Error::ZeroParameter)?;
    let mul = table(4, |i, j| match (i, j) {
        (0, j) => Some((j, field.one())),
        (i, 0) => Some((i, field.one())),
        (1, 2) => Some((3, field.one())),
        (2, 1) => Some((3, alpha.clone())),
        _ => None,
    });
    let algebra = Algebra::validate(AlgebraData {
        field,
        basis: names(&["one", "x", "y", "xy"]),
        one: unit_vector(field, 4, 0),
        mul,
        radical_basis: None,
    })?;
    let mut entry = CorpusEntry::new("nakayama_nesbitt", vec![("alpha".into(), alpha.to_string())], algebra, 3);
    let mut sigma = Matrix::identity(field, 4);
    sigma[(1, 1)] = alpha_inv;
    sigma[(2, 2)] = alpha.clone();
    entry.known.push(KnownAnswer::Nakayama(sigma));
    entry.known.push(KnownAnswer::Symmetric(alpha.is_one()));
    Ok(entry)
}

/// `k⟨x,y⟩/(x² = y² = 0, xyx = yxy)` on the basis `1, x, y, xy, yx, xyx`.
pub fn extended_nn(field: FieldSpec) -> CorpusEntry {
    let words = ["", "x", "y", "xy", "yx", "xyx"];
    let mul = table(6, |i, j| {
        let w = format!("{}{}", words[i], words[j]);
        if w.contains("xx") || w.contains("yy") || w.len() > 3 {
            return None;
        }
        let w = if w == "yxy" { "xyx".to_string() } else { w };
        words.iter().position(|b| *b == w).map(|k| (k, field.one()))
    });
    let algebra = Algebra::validate(AlgebraData {
        field,
        basis: names(&["one", "x", "y", "xy", "yx", "xyx"]),
        one: unit_vector(field, 6, 0),
        mul,
        radical_basis: None,
    })
    .expect("extended Nakayama-Nesbitt table is associative");
    let mut entry = CorpusEntry::new("extended_nn", Vec::new(), algebra, 5);

    let f = |rows: &[&[i64]]| Matrix::from_ints(field, rows);
    entry.known.push(KnownAnswer::FormMatrix(f(&[
        &[0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 1, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0],
        &[1, 0, 0, 0, 0, 0],
    ])));
    entry.known.push(KnownAnswer::Nakayama(f(&[
        &[1, 0, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 0, 1],
    ])));
    entry.known.push(KnownAnswer::NakayamaOrder(Some(2)));
    let v = |c: &[i64]| c.iter().map(|&n| field.int(n)).collect::<Vec<_>>();
    entry.known.push(KnownAnswer::Norm {
        unit: v(&[1, 1, 0, 0, 0, 0]),
        norm: v(&[1, 1, 1, 1, 0, 0]),
        central: false,
    });
    entry.known.push(KnownAnswer::Norm {
        unit: v(&[1, 1, -1, 0, 0, 0]),
        norm: v(&[1, 0, 0, 1, 1, 0]),
        central: true,
    });
    entry
}

/// The printed matrix of `B_ε = twist(B, 1 + εx)` on [`extended_nn`].
pub fn extended_nn_twisted_matrix(field: FieldSpec, epsilon: &FieldElement) -> Matrix {
    let (z, o, e) = (field.zero(), field.one(), epsilon.clone());
    Matrix::from_rows(
        field,
        vec![
            vec![z.clone(), z.clone(), z.clone(), e.clone(), z.clone(), o.clone()],
            vec![z.clone(), z.clone(), e.clone(), z.clone(), o.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), o.clone(), z.clone(), z.clone()],
            vec![e, o.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), o.clone(), z.clone(), z.clone(), z.clone()],
            vec![o, z.clone(), z.clone(), z.clone(), z.clone(), z],
        ],
    )
}

/// `k[x,y]/(ax² = bxy = cy², (x,y)³ = 0)` on the basis `1, x, y, x²`.
pub fn planar_quartic(field: FieldSpec, a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Result<CorpusEntry> {
    if [a, b, c].iter().any(|t| t.field() != field) {
        return Err(Error::FieldMismatch);
    }
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::DegenerateParameters("a, b and c must be nonzero".into()));
    }
    if b * b == a * c {
        return Err(Error::DegenerateParameters("b^2 = ac".into()));
    }
    let ab = a * &b.inv().expect("nonzero");
    let ac = a * &c.inv().expect("nonzero");
    let mul = table(4, |i, j| match (i, j) {
        (0, j) => Some((j, field.one())),
        (i, 0) => Some((i, field.one())),
        (1, 1) => Some((3, field.one())),
        (1, 2) | (2, 1) => Some((3, ab.clone())),
        (2, 2) => Some((3, ac.clone())),
        _ => None,
    });
    let algebra = Algebra::validate(AlgebraData {
        field,
        basis: names(&["one", "x", "y", "x2"]),
        one: unit_vector(field, 4, 0),
        mul,
        radical_basis: None,
    })?;
    let params = vec![
        ("a".into(), a.to_string()),
        ("b".into(), b.to_string()),
        ("c".into(), c.to_string()),
    ];
    let mut entry = CorpusEntry::new("planar_quartic", params, algebra, 3);
    let (z, o) = (field.zero(), field.one());
    entry.known.push(KnownAnswer::FormMatrix(
        Matrix::from_rows(
            field,
            vec![
                vec![z.clone(), z.clone(), z.clone(), o.clone()],
                vec![z.clone(), o.clone(), ab.clone(), z.clone()],
                vec![z.clone(), ab, ac, z.clone()],
                vec![o, z.clone(), z.clone(), z],
            ],
        ),
    ));
    entry.known.push(KnownAnswer::DetClass(a * c * (a * c - b * b)));
    entry.known.push(KnownAnswer::Symmetric(true));
    Ok(entry)
}

/// `k[u,v]/(u² = -δv², uv = 0, (u,v)³ = 0)` on the basis `1, u, v, u²`.
pub fn quartic_companion(field: FieldSpec, delta: &FieldElement) -> Result<CorpusEntry> {
    if delta.field() != field {
        return Err(Error::FieldMismatch);
    }
    let delta_inv = delta.inv().ok_or(Error::ZeroParameter)?;
    let v2 = -&delta_inv;
    let mul = table(4, |i, j| match (i, j) {
        (0, j) => Some((j, field.one())),
        (i, 0) => Some((i, field.one())),
        (1, 1) => Some((3, field.one())),
        (2, 2) => Some((3, v2.clone())),
        _ => None,
    });
    let algebra = Algebra::validate(AlgebraData {
        field,
        basis: names(&["one", "u", "v", "u2"]),
        one: unit_vector(field, 4, 0),
        mul,
        radical_basis: None,
    })?;
    let mut entry = CorpusEntry::new("quartic_companion", vec![("delta".into(), delta.to_string())], algebra, 3);
    entry.known.push(KnownAnswer::Symmetric(true));
    Ok(entry)
}

/// Matrix of `u ↦ δy, v ↦ abx − acy` from [`quartic_companion`]`(δ)` to
/// [`planar_quartic`]`(a, b, c)`, extended multiplicatively.
pub fn companion_map(a: &FieldElement, b: &FieldElement, c: &FieldElement, delta: &FieldElement) -> Matrix {
    let field = a.field();
    let z = field.zero();
    // u² = (δy)² = δ² (a/c) x²
    let u2 = delta * delta * a * &c.inv().expect("nonzero");
    let columns = vec![
        vec![field.one(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), delta.clone(), z.clone()],
        vec![z.clone(), a * b, -(a * c), z.clone()],
        vec![z.clone(), z.clone(), z, u2],
    ];
    Matrix::from_columns(field, 4, &columns)
}

/// `k[t]/(tⁿ)` on the basis `1, t, …, t^{n-1}`. When `char k ≤ n` the radical
/// is declared, since the trace form no longer detects it.
pub fn truncated_poly(field: FieldSpec, n: usize) -> Result<CorpusEntry> {
    if n == 0 {
        return Err(Error::ZeroParameter);
    }
    let mul = table(n, |i, j| (i + j < n).then(|| (i + j, field.one())));
    let basis = (0..n)
        .map(|i| match i {
            0 => "one".to_string(),
            1 => "t".to_string(),
            _ => format!("t{i}"),
        })
        .collect();
    let p = field.characteristic();
    let radical_basis = (p != 0 && p <= n as u64).then(|| (1..n).map(|i| unit_vector(field, n, i)).collect());
    let algebra = Algebra::validate(AlgebraData {
        field,
        basis,
        one: unit_vector(field, n, 0),
        mul,
        radical_basis,
    })?;
    let mut entry = CorpusEntry::new("truncated_poly", vec![("n".into(), n.to_string())], algebra, n - 1);
    entry.known.push(KnownAnswer::Nakayama(Matrix::identity(field, n)));
    entry.known.push(KnownAnswer::NakayamaOrder(Some(1)));
    entry.known.push(KnownAnswer::Symmetric(true));
    Ok(entry)
}

fn check_group(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    let bad = |what: &str| Err(Error::NotAGroup(what.to_string()));
    if n == 0 {
        return bad("empty table");
    }
    if table.iter().any(|row| row.len() != n || row.iter().any(|&g| g >= n)) {
        return bad("table is not a square table on its own elements");
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
        return bad("no identity");
    };
    for g in 0..n {
        if !(0..n).any(|h| table[g][h] == e && table[h][g] == e) {
            return Err(Error::NotAGroup(format!("element {g} has no inverse")));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("({a}*{b})*{c} differs from {a}*({b}*{c})")));
                }
            }
        }
    }
    Ok(e)
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    if p < 2 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Group algebra `kG` from a Cayley table; elements are named `g0, g1, …`.
pub fn group_algebra(field: FieldSpec, cayley_table: &[Vec<usize>]) -> Result<CorpusEntry> {
    let names = (0..cayley_table.len()).map(|i| format!("g{i}")).collect();
    group_algebra_named(field, names, cayley_table)
}

/// As [`group_algebra`] with explicit element names. The augmentation ideal is
/// declared as the radical when `G` is a `p`-group in characteristic `p`.
pub fn group_algebra_named(field: FieldSpec, names: Vec<String>, cayley_table: &[Vec<usize>]) -> Result<CorpusEntry> {
    let e = check_group(cayley_table)?;
    let n = cayley_table.len();
    if names.len() != n {
        return Err(Error::DimensionMismatch(format!("{} names for a group of order {n}", names.len())));
    }
    let mul = table(n, |i, j| Some((cayley_table[i][j], field.one())));
    let p = field.characteristic();
    let radical_basis = is_power_of(n as u64, p).then(|| {
        (0..n)
            .filter(|&g| g != e)
            .map(|g| {
                let mut v = unit_vector(field, n, g);
                v[e] = -field.one();
                v
            })
            .collect()
    });
    let algebra = Algebra::validate(AlgebraData {
        field,
        basis: names,
        one: unit_vector(field, n, e),
        mul,
        radical_basis,
    })?;
    let mut entry = CorpusEntry::new("group_algebra", vec![("order".into(), n.to_string())], algebra, e);
    entry.known.push(KnownAnswer::Symmetric(true));
    Ok(entry)
}

/// Cayley table of the Heisenberg group of order 27, elements `(a, b, c)` with
/// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')` mod 3, indexed `9a + 3b + c`.
pub fn heisenberg27_table() -> Vec<Vec<usize>> {
    let split = |g: usize| (g / 9, (g / 3) % 3, g % 3);
    (0..27)
        .map(|g| {
            let (a, b, c) = split(g);
            (0..27)
                .map(|h| {
                    let (a2, b2, c2) = split(h);
                    9 * ((a + a2) % 3) + 3 * ((b + b2) % 3) + (c + c2 + a * b2) % 3
                })
                .collect()
        })
        .collect()
}

/// The group algebra of the order-27 Heisenberg group over GF(3): local,
/// symmetric and noncommutative.
pub fn heisenberg27() -> CorpusEntry {
    let field = FieldSpec::Prime(3);
    let names = (0..27).map(|g| format!("g{}{}{}", g / 9, (g / 3) % 3, g % 3)).collect();
    let mut entry = group_algebra_named(field, names, &heisenberg27_table()).expect("Heisenberg group");
    entry.name = "heisenberg27".into();
    entry.params.clear();
    entry
}

/// Builds an entry by name from string parameters, as used by the command line.
pub fn build(name: &str, field: FieldSpec, params: &HashMap<String, String>) -> Result<CorpusEntry> {
    let get = |key: &str| -> Result<FieldElement> {
        let text = params
            .get(key)
            .ok_or_else(|| Error::Format(format!("missing parameter {key}")))?;
        field.parse(text)
    };
    match name {
        "nakayama_nesbitt" => nakayama_nesbitt(field, &get("alpha")?),
        "extended_nn" => Ok(extended_nn(field)),
        "planar_quartic" => planar_quartic(field, &get("a")?, &get("b")?, &get("c")?),
        "quartic_companion" => quartic_companion(field, &get("delta")?),
        "truncated_poly" => {
            let n = params
                .get("n")
                .ok_or_else(|| Error::Format("missing parameter n".into()))?
                .parse()
                .map_err(|_| Error::Format("n must be a positive integer".into()))?;
            truncated_poly(field, n)
        }
        "heisenberg27" => {
            if field != FieldSpec::Prime(3) {
                return Err(Error::FieldMismatch);
            }
            Ok(heisenberg27())
        }
        other => Err(Error::Format(format!("unknown corpus entry {other}"))),
    }
}

pub const NAMES: &[&str] = &[
    "nakayama_nesbitt",
    "extended_nn",
    "planar_quartic",
    "quartic_companion",
    "truncated_poly",
    "heisenberg27",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::verify_morphism;
    use crate::frobenius::form_from_functional;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn xyx_products() {
        let e = extended_nn(Q);
        let a = &e.algebra;
        let (x, y) = (a.basis(1), a.basis(2));
        assert_eq!(a.mul(&a.mul(&x, &y), &x), a.basis(5));
        assert_eq!(a.mul(&a.mul(&y, &x), &y), a.basis(5));
        assert!(a.mul(&x, &x).is_zero());
        assert!(a.mul(&a.basis(3), &a.basis(3)).is_zero());
    }

    #[test]
    fn guards() {
        assert!(matches!(nakayama_nesbitt(Q, &Q.zero()), Err(Error::ZeroParameter)));
        assert!(matches!(
            planar_quartic(Q, &Q.int(1), &Q.int(2), &Q.int(4)),
            Err(Error::DegenerateParameters(_))
        ));
        assert!(matches!(quartic_companion(Q, &Q.zero()), Err(Error::ZeroParameter)));
        assert!(matches!(group_algebra(Q, &[vec![0, 1], vec![1, 1]]), Err(Error::NotAGroup(_))));
    }

    #[test]
    fn companion_map_is_a_morphism() {
        let (a, b, c, d) = (Q.int(1), Q.int(1), Q.int(2), Q.int(2));
        let src = quartic_companion(Q, &d).unwrap();
        let dst = planar_quartic(Q, &a, &b, &c).unwrap();
        let map = companion_map(&a, &b, &c, &d);
        assert!(verify_morphism(&map, &src.algebra, &dst.algebra).unwrap());
        let mut bent = map.clone();
        bent[(1, 2)] = Q.int(3);
        assert!(!verify_morphism(&bent, &src.algebra, &dst.algebra).unwrap());
    }

    #[test]
    fn cyclic_groups() {
        let c3: Vec<Vec<usize>> = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
        let over_q = group_algebra(Q, &c3).unwrap();
        assert!(over_q.algebra.declared_radical().is_none());
        assert!(over_q.algebra.radical().unwrap().is_empty());
        let over_3 = group_algebra(FieldSpec::Prime(3), &c3).unwrap();
        assert_eq!(over_3.algebra.radical().unwrap().len(), 2);
        assert!(over_3.algebra.local_structure().unwrap().is_some());
    }

    #[test]
    fn heisenberg_is_noncommutative_and_symmetric() {
        let h = heisenberg27();
        assert!(!h.algebra.is_commutative());
        let b = form_from_functional(&h.algebra, &h.functional).unwrap();
        assert!(b.is_symmetric());
        assert_eq!(h.algebra.basis_names()[0], "g000");
    }
}
