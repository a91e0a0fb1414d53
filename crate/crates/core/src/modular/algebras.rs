use super::{LieModel, ModularError, RestrictedLieAlgebra};

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn sl2_model() -> LieModel {
    // basis e, h, f in the defining 2-dimensional representation
    LieModel {
        name: "sl2",
        rep_dim: 2,
        dim: 3,
        labels: vec!["e".into(), "h".into(), "f".into()],
        basis: vec![
            vec![0, 1, 0, 0],
            vec![1, 0, 0, -1],
            vec![0, 0, 1, 0],
        ],
        coord: vec![
            vec![0, 1, 0, 0], // e <- entry (0,1)
            vec![1, 0, 0, 0], // h <- entry (0,0)
            vec![0, 0, 1, 0], // f <- entry (1,0)
        ],
    }
}

fn gl3_model() -> LieModel {
    // basis E_ij in row-major order
    let mut basis = Vec::new();
    let mut coord = Vec::new();
    let mut labels = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let mut m = vec![0i64; 9];
            m[i * 3 + j] = 1;
            basis.push(m.clone());
            coord.push(m);
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    LieModel { name: "gl3", rep_dim: 3, dim: 9, labels, basis, coord }
}

fn sl3_model() -> LieModel {
    let e = |i: usize, j: usize| -> Vec<i64> {
        let mut m = vec![0i64; 9];
        m[i * 3 + j] = 1;
        m
    };
    let pick = |i: usize, j: usize, s: i64| -> Vec<i64> {
        let mut m = vec![0i64; 9];
        m[i * 3 + j] = s;
        m
    };
    let mut h1 = vec![0i64; 9];
    h1[0] = 1;
    h1[4] = -1;
    let mut h2 = vec![0i64; 9];
    h2[4] = 1;
    h2[8] = -1;
    LieModel {
        name: "sl3",
        rep_dim: 3,
        dim: 8,
        labels: vec![
            "e12".into(),
            "e13".into(),
            "e23".into(),
            "e21".into(),
            "e31".into(),
            "e32".into(),
            "h1".into(),
            "h2".into(),
        ],
        basis: vec![e(0, 1), e(0, 2), e(1, 2), e(1, 0), e(2, 0), e(2, 1), h1, h2],
        coord: vec![
            pick(0, 1, 1),
            pick(0, 2, 1),
            pick(1, 2, 1),
            pick(1, 0, 1),
            pick(2, 0, 1),
            pick(2, 1, 1),
            pick(0, 0, 1),  // h1 coefficient of diag(a, b, c) with a+b+c=0 is a
            pick(2, 2, -1), // h2 coefficient is -c
        ],
    }
}

pub fn build_sl2(p: u64) -> Result<RestrictedLieAlgebra, ModularError> {
    if p < 3 || !is_prime(p) {
        return Err(ModularError::BadPrime(p));
    }
    Ok(RestrictedLieAlgebra::from_model(sl2_model(), p))
}

pub fn build_gl3(p: u64) -> Result<RestrictedLieAlgebra, ModularError> {
    if p < 3 || !is_prime(p) {
        return Err(ModularError::BadPrime(p));
    }
    Ok(RestrictedLieAlgebra::from_model(gl3_model(), p))
}

pub fn build_sl3(p: u64) -> Result<RestrictedLieAlgebra, ModularError> {
    // at p = 3 the trace form degenerates and the coordinate extraction
    // breaks; use gl3 for that case instead
    if p < 3 || p == 3 || !is_prime(p) {
        return Err(ModularError::BadPrime(p));
    }
    Ok(RestrictedLieAlgebra::from_model(sl3_model(), p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilpotentKind {
    Regular,
    Minimal,
}

/// Standard sl2-triple `(e, h, f)` for the given nilpotent class, in integer
/// basis coordinates.
pub fn standard_triple(
    l: &RestrictedLieAlgebra,
    kind: NilpotentKind,
) -> Option<(Vec<i64>, Vec<i64>, Vec<i64>)> {
    match (l.model.name, kind) {
        ("sl2", NilpotentKind::Regular) => Some((
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        )),
        ("gl3", NilpotentKind::Regular) => Some((
            // e = E12 + E23, h = diag(2, 0, -2), f = 2 E21 + 2 E32
            vec![0, 1, 0, 0, 0, 1, 0, 0, 0],
            vec![2, 0, 0, 0, 0, 0, 0, 0, -2],
            vec![0, 0, 0, 2, 0, 0, 0, 2, 0],
        )),
        ("sl3", NilpotentKind::Regular) => Some((
            vec![1, 0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 2, 2],
            vec![0, 0, 0, 2, 0, 2, 0, 0],
        )),
        ("sl3", NilpotentKind::Minimal) => Some((
            // e = e13, h = diag(1, 0, -1), f = e31
            vec![0, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1, 0, 0, 0],
        )),
        _ => None,
    }
}

/// Indices of the toral (grade-0 Cartan) basis elements for the regular
/// triple; the parameter space of baby Verma highest weights.
pub fn cartan_indices(l: &RestrictedLieAlgebra) -> Vec<usize> {
    match l.model.name {
        "sl2" => vec![1],
        "gl3" => vec![0, 4, 8],
        "sl3" => vec![6, 7],
        _ => unreachable!(),
    }
}
