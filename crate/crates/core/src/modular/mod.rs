//! Restricted Lie algebras over F_p at desk scale (sl_2, gl_3, sl_3),
//! graded slices attached to sl_2-triples, modules induced from the
//! nilpotent subalgebra m or from a Borel, Whittaker spaces, and the
//! dimension bookkeeping of the reduced-enveloping-algebra results.

mod algebras;
mod checks;
pub mod fp;
mod induced;

pub use algebras::{build_gl3, build_sl2, build_sl3, cartan_indices, standard_triple, NilpotentKind};
pub use checks::{is_simple, qeta_report, theorem_d_check, whittaker_space, CheckResult, ModularReport};
pub use induced::{baby_verma, induced_module, FpModule};

use fp::{fp_inv, FpMat};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("prime {0} is not supported here")]
    BadPrime(u64),
    #[error("(e,h,f) is not an sl2-triple, or ad h is not integrally diagonal on the basis")]
    NotSl2Triple,
    #[error("the symplectic form on g(-1) is degenerate")]
    OddGradingDegenerate,
    #[error("character is not admissible: {0}")]
    CharacterNotAdmissible(String),
}

/// Integral model behind a restricted Lie algebra: a basis of matrices in
/// a defining representation, with a linear coordinate-extraction map.
/// Structure constants, p-power maps and gradings all come from here.
#[derive(Clone, Debug)]
pub struct LieModel {
    pub name: &'static str,
    pub rep_dim: usize,
    pub dim: usize,
    pub labels: Vec<String>,
    /// basis matrices, row-major `rep_dim x rep_dim`, integer entries
    pub basis: Vec<Vec<i64>>,
    /// `coord[k]` is the linear functional (on matrix entries) giving the
    /// k-th basis coordinate
    coord: Vec<Vec<i64>>,
}

impl LieModel {
    fn mat_of(&self, coords: &[i64]) -> Vec<i64> {
        let mut m = vec![0i64; self.rep_dim * self.rep_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (x, y) in m.iter_mut().zip(b) {
                *x += c * y;
            }
        }
        m
    }

    fn extract(&self, mat: &[i64]) -> Vec<i64> {
        self.coord
            .iter()
            .map(|f| f.iter().zip(mat).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn commutator(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let (x, y) = (a[i * n + k], b[i * n + k]);
                if x != 0 {
                    for j in 0..n {
                        out[i * n + j] += x * b[k * n + j];
                    }
                }
                if y != 0 {
                    for j in 0..n {
                        out[i * n + j] -= y * a[k * n + j];
                    }
                }
            }
        }
        out
    }

    /// `[x, y]` in basis coordinates, over the integers.
    pub fn bracket_z(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let c = Self::commutator(&self.mat_of(x), &self.mat_of(y), self.rep_dim);
        self.extract(&c)
    }

    /// Trace form pairing `(x, y) = tr(xy)` in the defining representation.
    pub fn trace_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let (a, b) = (self.mat_of(x), self.mat_of(y));
        let n = self.rep_dim;
        let mut t = 0i64;
        for i in 0..n {
            for k in 0..n {
                t += a[i * n + k] * b[k * n + i];
            }
        }
        t
    }
}

/// Linear functional chi on the Lie algebra, coordinates over F_p with
/// respect to the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PChar(pub Vec<u64>);

impl PChar {
    pub fn eval(&self, coords: &[u64], p: u64) -> u64 {
        self.0
            .iter()
            .zip(coords)
            .fold(0u64, |acc, (&a, &b)| (acc + a * b) % p)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

/// A restricted Lie algebra over F_p given by structure constants and a
/// p-power map on the basis, both reduced from an integral matrix model.
#[derive(Clone, Debug)]
pub struct RestrictedLieAlgebra {
    pub p: u64,
    pub dim: usize,
    pub labels: Vec<String>,
    /// `bracket[i][j]` = coordinates of `[b_i, b_j]`
    bracket: Vec<Vec<Vec<u64>>>,
    /// coordinates of `b_i^{[p]}`
    pub p_power: Vec<Vec<u64>>,
    model: LieModel,
}

impl RestrictedLieAlgebra {
    pub(crate) fn from_model(model: LieModel, p: u64) -> Self {
        let dim = model.dim;
        let to_fp = |v: &[i64]| -> Vec<u64> {
            v.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()
        };
        let mut bracket = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut x = vec![0i64; dim];
                let mut y = vec![0i64; dim];
                x[i] = 1;
                y[j] = 1;
                bracket[i][j] = to_fp(&model.bracket_z(&x, &y));
            }
        }
        let mut p_power = Vec::with_capacity(dim);
        for i in 0..dim {
            let b = FpMat::from_rows(
                p,
                &(0..model.rep_dim)
                    .map(|r| {
                        model.basis[i][r * model.rep_dim..(r + 1) * model.rep_dim]
                            .iter()
                            .map(|&x| x.rem_euclid(p as i64) as u64)
                            .collect()
                    })
                    .collect::<Vec<_>>(),
            );
            let bp = b.pow(p);
            let mat: Vec<i64> = (0..model.rep_dim * model.rep_dim)
                .map(|k| bp.get(k / model.rep_dim, k % model.rep_dim) as i64)
                .collect();
            p_power.push(to_fp(&model.extract(&mat)));
        }
        let labels = model.labels.clone();
        RestrictedLieAlgebra { p, dim, labels, bracket, p_power, model }
    }

    pub fn model(&self) -> &LieModel {
        &self.model
    }

    /// Bilinear bracket of coordinate vectors over F_p.
    pub fn bracket_vec(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut out = vec![0u64; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = xi * yj % p;
                for (o, &b) in out.iter_mut().zip(&self.bracket[i][j]) {
                    *o = (*o + c * b) % p;
                }
            }
        }
        out
    }

    /// Matrix of `ad x` on the basis.
    pub fn ad(&self, x: &[u64]) -> FpMat {
        let mut m = FpMat::zero(self.p, self.dim, self.dim);
        for j in 0..self.dim {
            let mut ej = vec![0u64; self.dim];
            ej[j] = 1;
            let col = self.bracket_vec(x, &ej);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// p-power of an arbitrary element, via the defining representation.
    pub fn p_power_vec(&self, x: &[u64]) -> Vec<u64> {
        let p = self.p;
        let n = self.model.rep_dim;
        let mut rows = vec![vec![0u64; n]; n];
        for (i, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for r in 0..n {
                for s in 0..n {
                    let e = self.model.basis[i][r * n + s].rem_euclid(p as i64) as u64;
                    rows[r][s] = (rows[r][s] + c * e) % p;
                }
            }
        }
        let m = FpMat::from_rows(p, &rows).pow(p);
        let mat: Vec<i64> = (0..n * n).map(|k| m.get(k / n, k % n) as i64).collect();
        self.model
            .extract(&mat)
            .iter()
            .map(|&v| v.rem_euclid(p as i64) as u64)
            .collect()
    }

    /// The p-character `chi = (e, .)` given by the trace form of the
    /// defining representation.
    pub fn chi_from_e(&self, e_coords: &[i64]) -> PChar {
        let p = self.p as i64;
        PChar(
            (0..self.dim)
                .map(|i| {
                    let mut b = vec![0i64; self.dim];
                    b[i] = 1;
                    self.model.trace_form(e_coords, &b).rem_euclid(p) as u64
                })
                .collect(),
        )
    }

    /// Checks antisymmetry, the Jacobi identity on basis triples, and
    /// restrictedness `ad(x^[p]) = (ad x)^p` on every basis element.
    pub fn validate(&self) -> Result<(), String> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let a = &self.bracket[i][j];
                let b = &self.bracket[j][i];
                for k in 0..d {
                    if (a[k] + b[k]) % self.p != 0 {
                        return Err(format!("antisymmetry fails at ({i},{j})"));
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut acc = vec![0u64; d];
                    let ei = unit(d, i);
                    let ej = unit(d, j);
                    let ek = unit(d, k);
                    for v in [
                        self.bracket_vec(&ei, &self.bracket_vec(&ej, &ek)),
                        self.bracket_vec(&ej, &self.bracket_vec(&ek, &ei)),
                        self.bracket_vec(&ek, &self.bracket_vec(&ei, &ej)),
                    ] {
                        for (a, b) in acc.iter_mut().zip(&v) {
                            *a = (*a + b) % self.p;
                        }
                    }
                    if acc.iter().any(|&x| x != 0) {
                        return Err(format!("Jacobi fails at ({i},{j},{k})"));
                    }
                }
            }
        }
        for i in 0..d {
            let adx = self.ad(&unit(d, i));
            if adx.pow(self.p) != self.ad(&self.p_power[i]) {
                return Err(format!("restrictedness fails at basis element {i}"));
            }
        }
        Ok(())
    }
}

pub(crate) fn unit(dim: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; dim];
    v[i] = 1;
    v
}

/// The grading by an sl2-triple's semisimple element, the nilpotent
/// subalgebra `m = g(-1)^0 + sum_{i<=-2} g(i)` and the complementary half
/// of `g(-1)`, together with the p-character `chi = (e, .)`.
#[derive(Clone, Debug)]
pub struct GradedSlice {
    /// ad h eigenvalue of each basis element, over the integers
    pub grading: Vec<i64>,
    /// basis of m, as coordinate vectors over F_p
    pub m_basis: Vec<Vec<u64>>,
    /// Lagrangian complement inside g(-1) (empty when g(-1) = 0)
    pub lagrangian_complement: Vec<Vec<u64>>,
    pub chi: PChar,
}

/// Builds the graded slice attached to an integral sl2-triple `(e, h, f)`
/// given in basis coordinates.
pub fn grading_and_m(
    l: &RestrictedLieAlgebra,
    e: &[i64],
    h: &[i64],
    f: &[i64],
) -> Result<GradedSlice, ModularError> {
    let model = &l.model;
    let two_e: Vec<i64> = e.iter().map(|x| 2 * x).collect();
    let neg_two_f: Vec<i64> = f.iter().map(|x| -2 * x).collect();
    if model.bracket_z(h, e) != two_e
        || model.bracket_z(h, f) != neg_two_f
        || model.bracket_z(e, f) != h.to_vec()
    {
        return Err(ModularError::NotSl2Triple);
    }

    // integer grading: ad h must be diagonal on the basis
    let mut grading = Vec::with_capacity(l.dim);
    for i in 0..l.dim {
        let mut b = vec![0i64; l.dim];
        b[i] = 1;
        let br = model.bracket_z(h, &b);
        let g = br[i];
        let mut check = vec![0i64; l.dim];
        check[i] = g;
        if br != check {
            return Err(ModularError::NotSl2Triple);
        }
        grading.push(g);
    }

    let chi = l.chi_from_e(e);
    let p = l.p;

    let mut m_basis: Vec<Vec<u64>> = (0..l.dim)
        .filter(|&i| grading[i] <= -2)
        .map(|i| unit(l.dim, i))
        .collect();

    // symplectic reduction of g(-1) under <x,y> = chi([x,y])
    let mut odd: Vec<Vec<u64>> = (0..l.dim)
        .filter(|&i| grading[i] == -1)
        .map(|i| unit(l.dim, i))
        .collect();
    let mut lagr_complement = Vec::new();
    let form = |x: &[u64], y: &[u64]| chi.eval(&l.bracket_vec(x, y), p);
    while let Some(v) = odd.first().cloned() {
        let Some(wi) = (1..odd.len()).find(|&k| form(&v, &odd[k]) != 0) else {
            return Err(ModularError::OddGradingDegenerate);
        };
        let w = odd.remove(wi);
        odd.remove(0);
        let c = fp_inv(form(&v, &w), p);
        let w: Vec<u64> = w.iter().map(|&x| x * c % p).collect();
        for u in odd.iter_mut() {
            // replace u by u - B(u,w) v + B(u,v) w, orthogonal to the
            // hyperbolic plane (v, w)
            let a = form(u, &w);
            let b = form(u, &v);
            for ((x, &vv), &ww) in u.iter_mut().zip(&v).zip(&w) {
                *x = (*x + (p - a) * vv % p + b * ww) % p;
            }
        }
        m_basis.push(v);
        lagr_complement.push(w);
    }

    // chi vanishes on [m, m]
    for x in &m_basis {
        for y in &m_basis {
            if chi.eval(&l.bracket_vec(x, y), p) != 0 {
                return Err(ModularError::CharacterNotAdmissible(
                    "chi does not vanish on [m, m]".into(),
                ));
            }
        }
    }

    Ok(GradedSlice { grading, m_basis, lagrangian_complement: lagr_complement, chi })
}

#[cfg(test)]
mod tests {
    use super::algebras::{build_gl3, build_sl2, build_sl3, standard_triple, NilpotentKind};
    use super::*;

    #[test]
    fn sl2_structure_constants() {
        let l = build_sl2(5).unwrap();
        l.validate().unwrap();
        let (e, h, f) = (unit(3, 0), unit(3, 1), unit(3, 2));
        // [h,e] = 2e, [h,f] = -2f = 3f over F_5, [e,f] = h
        assert_eq!(l.bracket_vec(&h, &e), vec![2, 0, 0]);
        assert_eq!(l.bracket_vec(&h, &f), vec![0, 0, 3]);
        assert_eq!(l.bracket_vec(&e, &f), vec![0, 1, 0]);
        // nilpotent and toral p-powers
        assert_eq!(l.p_power[0], vec![0, 0, 0]);
        assert_eq!(l.p_power[2], vec![0, 0, 0]);
        assert_eq!(l.p_power[1], vec![0, 1, 0]);
    }

    #[test]
    fn restrictedness_is_validated() {
        for p in [3, 5, 7] {
            build_sl2(p).unwrap().validate().unwrap();
        }
        build_gl3(3).unwrap().validate().unwrap();
        build_sl3(5).unwrap().validate().unwrap();
    }

    #[test]
    fn gl3_identity_is_central_and_fixed() {
        let l = build_gl3(3).unwrap();
        // I = E11 + E22 + E33 at indices 0, 4, 8
        let mut id = vec![0u64; 9];
        id[0] = 1;
        id[4] = 1;
        id[8] = 1;
        for i in 0..9 {
            assert!(l.bracket_vec(&id, &unit(9, i)).iter().all(|&x| x == 0));
        }
        assert_eq!(l.p_power_vec(&id), id);
    }

    #[test]
    fn bad_primes_rejected() {
        assert!(matches!(build_sl2(2), Err(ModularError::BadPrime(2))));
        assert!(matches!(build_sl2(4), Err(ModularError::BadPrime(4))));
        assert!(matches!(build_sl3(3), Err(ModularError::BadPrime(3))));
        assert!(matches!(build_gl3(9), Err(ModularError::BadPrime(9))));
    }

    #[test]
    fn sl2_regular_slice() {
        let l = build_sl2(5).unwrap();
        let (e, h, f) = standard_triple(&l, NilpotentKind::Regular).unwrap();
        let s = grading_and_m(&l, &e, &h, &f).unwrap();
        assert_eq!(s.grading, vec![2, 0, -2]);
        assert_eq!(s.m_basis, vec![unit(3, 2)]);
        assert!(s.lagrangian_complement.is_empty());
        // chi = (e, .) pairs only with f
        assert_eq!(s.chi, PChar(vec![0, 0, 1]));
    }

    #[test]
    fn gl3_regular_slice() {
        let l = build_gl3(3).unwrap();
        let (e, h, f) = standard_triple(&l, NilpotentKind::Regular).unwrap();
        let s = grading_and_m(&l, &e, &h, &f).unwrap();
        // grading by diag(2,0,-2): all degrees even, m = strictly lower part
        assert!(s.grading.iter().all(|g| g % 2 == 0));
        assert_eq!(s.m_basis.len(), 3);
        assert!(s.lagrangian_complement.is_empty());
        for b in &s.m_basis {
            let i = b.iter().position(|&x| x == 1).unwrap();
            assert!(s.grading[i] < 0);
        }
    }

    #[test]
    fn sl3_minimal_slice_has_lagrangian() {
        let l = build_sl3(5).unwrap();
        let (e, h, f) = standard_triple(&l, NilpotentKind::Minimal).unwrap();
        let s = grading_and_m(&l, &e, &h, &f).unwrap();
        let odd = s.grading.iter().filter(|&&g| g == -1).count();
        assert_eq!(odd, 2, "g(-1) is two-dimensional");
        // m = g(-2) plus half of g(-1): dimension d(e) = 2
        assert_eq!(s.m_basis.len(), 2);
        assert_eq!(s.lagrangian_complement.len(), 1);
        // chi kills [m, m] by construction; the pairing on the chosen
        // hyperbolic pair is 1
        let v = &s.m_basis[1];
        let w = &s.lagrangian_complement[0];
        assert_eq!(s.chi.eval(&l.bracket_vec(v, w), 5), 1);
    }

    #[test]
    fn non_triple_rejected() {
        let l = build_sl2(5).unwrap();
        let e = vec![1i64, 0, 0];
        let h = vec![0i64, 2, 0]; // [e,f] = h fails for this h
        let f = vec![0i64, 0, 1];
        assert!(matches!(
            grading_and_m(&l, &e, &h, &f),
            Err(ModularError::NotSl2Triple)
        ));
    }
}
