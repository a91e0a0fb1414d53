//! Modules over reduced enveloping algebras by PBW straightening.
//!
//! A module is induced from a one-dimensional character of a graded
//! subalgebra (the nilpotent `m` for generalized Gelfand-Graev modules, a
//! Borel for baby Vermas). Basis monomials live on a complement of the
//! subalgebra with exponents below p; straightening uses the commutation
//! relations together with the p-truncation `x^p = x^[p] + chi(x)^p`.

use std::collections::HashMap;

use super::fp::FpMat;
use super::{GradedSlice, ModularError, PChar, RestrictedLieAlgebra};

/// Finite-dimensional module over a restricted Lie algebra, given by one
/// action matrix per basis element.
#[derive(Clone, Debug)]
pub struct FpModule {
    pub p: u64,
    pub dim: usize,
    /// action matrix of each Lie algebra basis element
    pub action: Vec<FpMat>,
    pub pchar: PChar,
}

impl FpModule {
    /// Action matrix of an arbitrary element given by coordinates.
    pub fn action_of(&self, coords: &[u64]) -> FpMat {
        let mut m = FpMat::zero(self.p, self.dim, self.dim);
        for (c, a) in coords.iter().zip(&self.action) {
            if *c != 0 {
                m = m.add(&a.scale(*c));
            }
        }
        m
    }

    /// Verifies `rho(x)^p - rho(x^[p]) - chi(x)^p = 0` for every basis
    /// element.
    pub fn check_p_character(&self, l: &RestrictedLieAlgebra) -> bool {
        (0..l.dim).all(|i| {
            let rho_p = self.action[i].pow(self.p);
            let rho_pw = self.action_of(&l.p_power[i]);
            // chi(x)^p = chi(x) for chi(x) in F_p
            let scalar = FpMat::identity(self.p, self.dim).scale(self.pchar.0[i]);
            rho_p.sub(&rho_pw).sub(&scalar).is_zero()
        })
    }

    /// Verifies `[rho(x_i), rho(x_j)] = rho([x_i, x_j])` on the given basis
    /// pairs (all pairs if `None`).
    pub fn check_brackets(&self, l: &RestrictedLieAlgebra, pairs: Option<&[(usize, usize)]>) -> bool {
        let all: Vec<(usize, usize)> = (0..l.dim)
            .flat_map(|i| (i + 1..l.dim).map(move |j| (i, j)))
            .collect();
        let pairs = pairs.unwrap_or(&all);
        pairs.iter().all(|&(i, j)| {
            let lhs = self.action[i]
                .mul(&self.action[j])
                .sub(&self.action[j].mul(&self.action[i]));
            let mut ei = vec![0u64; l.dim];
            ei[i] = 1;
            let mut ej = vec![0u64; l.dim];
            ej[j] = 1;
            lhs == self.action_of(&l.bracket_vec(&ei, &ej))
        })
    }

    /// Direct sum, for tests of (non-)simplicity.
    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        assert_eq!(self.pchar, other.pchar);
        let dim = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = FpMat::zero(self.p, dim, dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j));
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j));
                    }
                }
                m
            })
            .collect();
        FpModule { p: self.p, dim, action, pchar: self.pchar.clone() }
    }
}

type Mono = Vec<u8>;
type ModVec = HashMap<Mono, u64>;

struct Straightener {
    p: u64,
    /// ordered generator list: complement first, then subalgebra
    gens: Vec<Vec<u64>>,
    s: usize,
    /// character value of each subalgebra generator
    phi: Vec<u64>,
    /// global p-character value of each generator
    chi_gen: Vec<u64>,
    /// bracket table in generator coordinates
    brk: Vec<Vec<Vec<u64>>>,
    /// p-power of each generator, in generator coordinates
    ppow: Vec<Vec<u64>>,
    memo: HashMap<(usize, Mono), ModVec>,
}

impl Straightener {
    fn new(
        l: &RestrictedLieAlgebra,
        complement: &[Vec<u64>],
        subalg: &[Vec<u64>],
        phi: &[u64],
        chi: &PChar,
    ) -> Result<Self, ModularError> {
        let p = l.p;
        let dim = l.dim;
        let gens: Vec<Vec<u64>> = complement.iter().chain(subalg).cloned().collect();
        if gens.len() != dim {
            return Err(ModularError::CharacterNotAdmissible(
                "complement and subalgebra do not form a basis".into(),
            ));
        }
        // change of basis: generator coordinates of a g-coordinate vector
        let mut cols = FpMat::zero(p, dim, dim);
        for (j, g) in gens.iter().enumerate() {
            for (i, &v) in g.iter().enumerate() {
                cols.set(i, j, v);
            }
        }
        let inv = invert(&cols).ok_or_else(|| {
            ModularError::CharacterNotAdmissible(
                "complement and subalgebra do not form a basis".into(),
            )
        })?;
        let to_gen = |v: &[u64]| -> Vec<u64> { inv.mul_vec(v) };

        let s = complement.len();
        let brk: Vec<Vec<Vec<u64>>> = gens
            .iter()
            .map(|a| gens.iter().map(|b| to_gen(&l.bracket_vec(a, b))).collect())
            .collect();
        let ppow: Vec<Vec<u64>> = gens.iter().map(|g| to_gen(&l.p_power_vec(g))).collect();
        let chi_gen: Vec<u64> = gens.iter().map(|g| chi.eval(g, p)).collect();

        // the subalgebra must be closed under brackets and p-powers, phi
        // must kill its derived part, and phi must satisfy the p-character
        // compatibility phi(x)^p - phi(x^[p]) = chi(x)^p
        let sub_only = |v: &[u64]| v[..s].iter().all(|&x| x == 0);
        let eval_phi = |v: &[u64]| -> u64 {
            v[s..]
                .iter()
                .zip(phi)
                .fold(0u64, |acc, (&a, &b)| (acc + a * b) % p)
        };
        for i in s..gens.len() {
            for j in s..gens.len() {
                let b = &brk[i][j];
                if !sub_only(b) {
                    return Err(ModularError::CharacterNotAdmissible(
                        "subalgebra is not closed under the bracket".into(),
                    ));
                }
                if eval_phi(b) != 0 {
                    return Err(ModularError::CharacterNotAdmissible(
                        "character does not vanish on the derived subalgebra".into(),
                    ));
                }
            }
            if !sub_only(&ppow[i]) {
                return Err(ModularError::CharacterNotAdmissible(
                    "subalgebra is not closed under p-powers".into(),
                ));
            }
            let lhs = super::fp::fp_pow(phi[i - s], p, p);
            let rhs = (eval_phi(&ppow[i]) + chi_gen[i]) % p;
            if lhs != rhs {
                return Err(ModularError::CharacterNotAdmissible(
                    "character is incompatible with the p-structure".into(),
                ));
            }
        }

        Ok(Straightener {
            p,
            gens,
            s,
            phi: phi.to_vec(),
            chi_gen,
            brk,
            ppow,
            memo: HashMap::new(),
        })
    }

    /// Action of generator `k` on the PBW basis monomial `a`, as a linear
    /// combination of basis monomials.
    fn act(&mut self, k: usize, a: &Mono) -> ModVec {
        if let Some(v) = self.memo.get(&(k, a.clone())) {
            return v.clone();
        }
        let p = self.p;
        let mut out: ModVec = HashMap::new();
        let first = a.iter().position(|&x| x > 0);
        match first {
            None => {
                if k < self.s {
                    let mut m = a.clone();
                    m[k] = 1;
                    out.insert(m, 1);
                } else {
                    let c = self.phi[k - self.s];
                    if c != 0 {
                        out.insert(a.clone(), c);
                    }
                }
            }
            Some(j) if k < self.s && k < j => {
                let mut m = a.clone();
                m[k] = 1;
                out.insert(m, 1);
            }
            Some(j) if k < self.s && k == j => {
                if a[k] + 1 < p as u8 {
                    let mut m = a.clone();
                    m[k] += 1;
                    out.insert(m, 1);
                } else {
                    // c_k^p = c_k^[p] + chi(c_k)^p in the reduced algebra
                    let mut rest = a.clone();
                    rest[k] = 0;
                    if self.chi_gen[k] != 0 {
                        out.insert(rest.clone(), self.chi_gen[k]);
                    }
                    let pw = self.ppow[k].clone();
                    for (m, &c) in pw.iter().enumerate() {
                        if c != 0 {
                            for (mono, v) in self.act(m, &rest) {
                                merge(&mut out, mono, v * c % p, p);
                            }
                        }
                    }
                }
            }
            Some(j) => {
                // k acts past the leading generator j < k:
                // g_k c_j X = c_j (g_k X) + [g_k, c_j] X
                let mut rest = a.clone();
                rest[j] -= 1;
                let inner = self.act(k, &rest);
                for (mono, v) in inner {
                    for (m2, v2) in self.act(j, &mono) {
                        merge(&mut out, m2, v2 * v % p, p);
                    }
                }
                let br = self.brk[k][j].clone();
                for (m, &c) in br.iter().enumerate() {
                    if c != 0 {
                        for (mono, v) in self.act(m, &rest) {
                            merge(&mut out, mono, v * c % p, p);
                        }
                    }
                }
            }
        }
        self.memo.insert((k, a.clone()), out.clone());
        out
    }
}

fn merge(acc: &mut ModVec, mono: Mono, c: u64, p: u64) {
    let c = c % p;
    if c == 0 {
        return;
    }
    match acc.entry(mono) {
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::hash_map::Entry::Occupied(mut e) => {
            let v = (*e.get() + c) % p;
            if v == 0 {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

fn invert(m: &FpMat) -> Option<FpMat> {
    let n = m.rows;
    let p = m.p;
    let mut aug = FpMat::zero(p, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, n + i, 1);
    }
    let pivots = aug.rref();
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    let mut inv = FpMat::zero(p, n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, aug.get(i, n + j));
        }
    }
    Some(inv)
}

fn mono_index(a: &Mono, p: u64) -> usize {
    a.iter().fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

fn build_module(
    l: &RestrictedLieAlgebra,
    complement: &[Vec<u64>],
    subalg: &[Vec<u64>],
    phi: &[u64],
    chi: &PChar,
) -> Result<FpModule, ModularError> {
    let p = l.p;
    let mut st = Straightener::new(l, complement, subalg, phi, chi)?;
    let s = st.s;
    let dim = (p as usize).pow(s as u32);

    // enumerate PBW monomials in mixed-radix order
    let mut monos: Vec<Mono> = Vec::with_capacity(dim);
    let mut cur: Mono = vec![0; s];
    loop {
        monos.push(cur.clone());
        let mut i = s;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if cur[i] + 1 < p as u8 {
                cur[i] += 1;
                for x in cur.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            } else if i == 0 {
                i = usize::MAX;
                break;
            }
        }
        if i == usize::MAX || monos.len() == dim {
            break;
        }
    }
    debug_assert_eq!(monos.len(), dim);

    // action of each Lie basis element, expanded through the generators
    let gen_coords: Vec<Vec<u64>> = {
        let mut cols = FpMat::zero(p, l.dim, l.dim);
        for (j, g) in st.gens.iter().enumerate() {
            for (i, &v) in g.iter().enumerate() {
                cols.set(i, j, v);
            }
        }
        let inv = invert(&cols).expect("checked in Straightener::new");
        (0..l.dim)
            .map(|i| {
                let mut e = vec![0u64; l.dim];
                e[i] = 1;
                inv.mul_vec(&e)
            })
            .collect()
    };

    let mut action = Vec::with_capacity(l.dim);
    for coords in &gen_coords {
        let mut m = FpMat::zero(p, dim, dim);
        for (col, mono) in monos.iter().enumerate() {
            for (k, &c) in coords.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (out_mono, v) in st.act(k, mono) {
                    let row = mono_index(&out_mono, p);
                    let cur = m.get(row, col);
                    m.set(row, col, (cur + v * c) % p);
                }
            }
        }
        action.push(m);
    }

    Ok(FpModule { p, dim, action, pchar: chi.clone() })
}

/// The generalized Gelfand-Graev module `Q_chi^chi`: induction of the
/// character `chi|_m` from the nilpotent subalgebra m of the slice.
/// Dimension `p^(dim g - dim m)`.
pub fn induced_module(
    l: &RestrictedLieAlgebra,
    slice: &GradedSlice,
    chi: &PChar,
) -> Result<FpModule, ModularError> {
    // complement: nonnegative grades plus the Lagrangian complement in g(-1)
    let mut complement: Vec<Vec<u64>> = (0..l.dim)
        .filter(|&i| slice.grading[i] >= 0)
        .map(|i| super::unit(l.dim, i))
        .collect();
    complement.extend(slice.lagrangian_complement.iter().cloned());
    let phi: Vec<u64> = slice.m_basis.iter().map(|v| chi.eval(v, l.p)).collect();
    build_module(l, &complement, &slice.m_basis, &phi, chi)
}

/// Baby Verma module `Z_chi(lambda)`: induction of the character that is
/// `lambda` on the Cartan part and zero on the positive part, from the
/// Borel defined by the nonnegative grades of the slice.
/// Requires `chi` to vanish on the Borel.
pub fn baby_verma(
    l: &RestrictedLieAlgebra,
    slice: &GradedSlice,
    chi: &PChar,
    lambda: &[u64],
) -> Result<FpModule, ModularError> {
    let borel: Vec<usize> = (0..l.dim).filter(|&i| slice.grading[i] >= 0).collect();
    let cartan: Vec<usize> = (0..l.dim).filter(|&i| slice.grading[i] == 0).collect();
    assert_eq!(lambda.len(), cartan.len(), "one weight per Cartan basis element");
    for &i in &borel {
        if chi.0[i] != 0 {
            return Err(ModularError::CharacterNotAdmissible(
                "chi does not vanish on the Borel".into(),
            ));
        }
    }
    let sub: Vec<Vec<u64>> = borel.iter().map(|&i| super::unit(l.dim, i)).collect();
    let phi: Vec<u64> = borel
        .iter()
        .map(|&i| {
            cartan
                .iter()
                .position(|&c| c == i)
                .map(|k| lambda[k] % l.p)
                .unwrap_or(0)
        })
        .collect();
    let complement: Vec<Vec<u64>> = (0..l.dim)
        .filter(|&i| slice.grading[i] < 0)
        .map(|i| super::unit(l.dim, i))
        .collect();
    build_module(l, &complement, &sub, &phi, chi)
}
