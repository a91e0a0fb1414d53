//! Partition combinatorics of nilpotent orbits in `gl(N)`: Jordan types,
//! centralizer dimensions, Lusztig-Spaltenstein induction, Richardson
//! orbits, rigidity, sheets, and the type-A Krull dimension of the
//! abelianized W-algebra.
//!
//! Component groups of centralizers in `GL(N)` are connected, so a nilpotent
//! orbit lies in exactly one sheet; everything here assumes type A.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("orbit {orbit:?} is not a partition of block {block}")]
    BlockMismatch { block: u32, orbit: Vec<u32> },
    #[error("number of orbits ({orbits}) does not match number of blocks ({blocks})")]
    ArityMismatch { blocks: usize, orbits: usize },
}

/// A partition of `N`, i.e. the Jordan type of a nilpotent orbit of `gl(N)`.
/// Parts are stored weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Self, OrbitError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(OrbitError::InvalidPartition);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(OrbitError::InvalidPartition);
        }
        Ok(Partition(parts.to_vec()))
    }

    /// Sorts the given parts; zero parts are dropped.
    pub fn from_unsorted(parts: &[u32]) -> Self {
        let mut v: Vec<u32> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Parts in weakly increasing order (the indexing `p_1 <= ... <= p_n`).
    pub fn parts_increasing(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.reverse();
        v
    }

    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn largest_part(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn is_zero_orbit(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Transpose of the Young diagram. Involution.
    pub fn conjugate(&self) -> Partition {
        let m = self.largest_part() as usize;
        let mut cols = vec![0u32; m];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// The zero orbit `(1^N)`.
    pub fn zero_orbit(n: u32) -> Partition {
        Partition(vec![1; n as usize])
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(acc.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                acc.push(p);
                go(rest - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            out.push(Partition(vec![]));
        } else {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

/// Dimension data of the nilpotent orbit with Jordan type `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitProfile {
    pub lambda: Partition,
    /// dim O = N^2 - sum (lambda'_k)^2
    pub orbit_dim: u32,
    /// d(e) = dim O / 2
    pub d_e: u32,
    /// dim of the centralizer g_e = sum (lambda'_k)^2
    pub r: u32,
}

pub fn orbit_profile(lambda: &Partition) -> OrbitProfile {
    let n = lambda.n();
    let r: u32 = lambda
        .conjugate()
        .parts()
        .iter()
        .map(|&c| c * c)
        .sum();
    let orbit_dim = n * n - r;
    debug_assert!(orbit_dim % 2 == 0);
    OrbitProfile { lambda: lambda.clone(), orbit_dim, d_e: orbit_dim / 2, r }
}

/// Conjugacy class of a Levi subalgebra `gl(q_1) + ... + gl(q_m)` of `gl(N)`,
/// canonicalized by sorting the blocks decreasingly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviDescriptor {
    blocks: Vec<u32>,
}

impl LeviDescriptor {
    pub fn new(blocks: &[u32]) -> Result<Self, OrbitError> {
        if blocks.iter().any(|&b| b == 0) || blocks.is_empty() {
            return Err(OrbitError::InvalidPartition);
        }
        let mut v = blocks.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LeviDescriptor { blocks: v })
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn n(&self) -> u32 {
        self.blocks.iter().sum()
    }

    /// dim of the centre = number of blocks.
    pub fn center_dim(&self) -> u32 {
        self.blocks.len() as u32
    }
}

/// The unique sheet of `gl(N)` through a given nilpotent orbit, described by
/// its Levi and (trivial, in type A) rigid datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheetDescriptor {
    pub levi: LeviDescriptor,
    pub rigid_orbits: Vec<Partition>,
    pub nilpotent_rep: Partition,
    pub z_dim: u32,
}

/// Lusztig-Spaltenstein induction of a tuple of nilpotent orbits of the
/// Levi blocks up to `gl(N)`: zero-pad the block partitions to a common
/// length and add componentwise.
pub fn induce(levi: &LeviDescriptor, orbits: &[Partition]) -> Result<Partition, OrbitError> {
    if orbits.len() != levi.blocks.len() {
        return Err(OrbitError::ArityMismatch {
            blocks: levi.blocks.len(),
            orbits: orbits.len(),
        });
    }
    let mut len = 0usize;
    for (orbit, &block) in orbits.iter().zip(&levi.blocks) {
        if orbit.n() != block {
            return Err(OrbitError::BlockMismatch { block, orbit: orbit.parts().to_vec() });
        }
        len = len.max(orbit.num_parts());
    }
    let mut sum = vec![0u32; len];
    for orbit in orbits {
        for (s, &p) in sum.iter_mut().zip(orbit.parts()) {
            *s += p;
        }
    }
    // componentwise sums of decreasing sequences are decreasing
    Partition::new(&sum)
}

/// Richardson orbit of the parabolic with Levi block sizes `mu`: induction
/// of the zero orbit, which lands on the conjugate partition.
pub fn richardson(mu: &Partition) -> Partition {
    let levi = LeviDescriptor::new(mu.parts()).expect("valid partition");
    let zeros: Vec<Partition> = mu.parts().iter().map(|&q| Partition::zero_orbit(q)).collect();
    induce(&levi, &zeros).expect("blocks match by construction")
}

fn orbit_tuples(blocks: &[u32]) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![vec![]];
    for &b in blocks {
        let choices = Partition::all(b);
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for prefix in &out {
            for c in &choices {
                let mut v = prefix.clone();
                v.push(c.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// True iff the orbit admits no presentation as induced from a proper Levi.
/// Decided by exhaustive search over all proper Levi classes and all orbit
/// tuples; in `gl(N)` only the zero orbit survives.
pub fn is_rigid(lambda: &Partition) -> bool {
    let n = lambda.n();
    for mu in Partition::all(n) {
        if mu.num_parts() < 2 {
            continue; // the whole algebra is not a proper Levi
        }
        let levi = LeviDescriptor::new(mu.parts()).unwrap();
        for orbits in orbit_tuples(levi.blocks()) {
            if &induce(&levi, &orbits).unwrap() == lambda {
                return false;
            }
        }
    }
    true
}

/// The sheets of `gl(N)` containing the orbit of Jordan type `lambda`.
/// In type A there is exactly one: the sheet of the Levi with block sizes
/// `lambda'` carrying the zero rigid orbit in every block.
pub fn sheets_containing(lambda: &Partition) -> Vec<SheetDescriptor> {
    let conj = lambda.conjugate();
    let levi = LeviDescriptor::new(conj.parts()).expect("valid partition");
    let rigid_orbits: Vec<Partition> =
        levi.blocks().iter().map(|&q| Partition::zero_orbit(q)).collect();
    let z_dim = levi.center_dim();
    vec![SheetDescriptor { levi, rigid_orbits, nilpotent_rep: lambda.clone(), z_dim }]
}

/// Krull dimension of the abelianized W-algebra: the maximum of `dim z(l)`
/// over the sheets through the orbit. In type A this is the largest part
/// of `lambda`.
pub fn krull_dim_ab(lambda: &Partition) -> u32 {
    sheets_containing(lambda)
        .iter()
        .map(|s| s.z_dim)
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpectrumKind {
    FiniteSpectrum,
    PositiveDimensional,
}

/// Finite spectrum exactly for rigid orbits.
pub fn rigid_finiteness_flag(lambda: &Partition) -> SpectrumKind {
    if is_rigid(lambda) {
        SpectrumKind::FiniteSpectrum
    } else {
        SpectrumKind::PositiveDimensional
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(pt(&[2, 2]).conjugate(), pt(&[2, 2]));
        assert_eq!(pt(&[3, 1]).conjugate(), pt(&[2, 1, 1]));
        assert_eq!(pt(&[5]).conjugate(), pt(&[1, 1, 1, 1, 1]));
        assert_eq!(Partition::new(&[]).unwrap().conjugate(), Partition::new(&[]).unwrap());
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=12 {
            for lam in Partition::all(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().n(), n);
            }
        }
    }

    #[test]
    fn profile_examples() {
        let p = orbit_profile(&pt(&[1, 1, 1, 1]));
        assert_eq!((p.orbit_dim, p.d_e, p.r), (0, 0, 16));
        let p = orbit_profile(&pt(&[2, 2]));
        assert_eq!((p.orbit_dim, p.d_e, p.r), (8, 4, 8));
        let p = orbit_profile(&pt(&[2, 1]));
        assert_eq!((p.orbit_dim, p.d_e, p.r), (4, 2, 5));
    }

    #[test]
    fn profile_consistency() {
        for n in 1..=8u32 {
            for lam in Partition::all(n) {
                let p = orbit_profile(&lam);
                assert_eq!(p.orbit_dim + p.r, n * n);
                assert_eq!(p.orbit_dim % 2, 0);
            }
        }
    }

    #[test]
    fn induce_examples() {
        // induction from g itself is the identity
        let levi = LeviDescriptor::new(&[4]).unwrap();
        assert_eq!(induce(&levi, &[pt(&[2, 2])]).unwrap(), pt(&[2, 2]));
        // Richardson orbit of (2,2) is (2,2)
        let levi = LeviDescriptor::new(&[2, 2]).unwrap();
        assert_eq!(induce(&levi, &[pt(&[1, 1]), pt(&[1, 1])]).unwrap(), pt(&[2, 2]));
        // Borel case: regular orbit
        let levi = LeviDescriptor::new(&[1, 1, 1, 1]).unwrap();
        let ones = vec![pt(&[1]); 4];
        assert_eq!(induce(&levi, &ones).unwrap(), pt(&[4]));
    }

    #[test]
    fn induce_block_mismatch() {
        let levi = LeviDescriptor::new(&[2, 2]).unwrap();
        assert!(matches!(
            induce(&levi, &[pt(&[3]), pt(&[1])]),
            Err(OrbitError::BlockMismatch { .. })
        ));
        assert!(matches!(
            induce(&levi, &[pt(&[2])]),
            Err(OrbitError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn richardson_is_conjugate() {
        for n in 1..=10u32 {
            for mu in Partition::all(n) {
                assert_eq!(richardson(&mu), mu.conjugate());
            }
        }
    }

    #[test]
    fn rigidity_small() {
        assert!(is_rigid(&pt(&[1, 1, 1, 1, 1])));
        for n in 2..=6u32 {
            assert!(!is_rigid(&pt(&[n])));
        }
        assert!(!is_rigid(&pt(&[2, 2])));
        assert_eq!(rigid_finiteness_flag(&pt(&[1, 1, 1])), SpectrumKind::FiniteSpectrum);
        assert_eq!(rigid_finiteness_flag(&pt(&[2, 2])), SpectrumKind::PositiveDimensional);
        assert_eq!(rigid_finiteness_flag(&pt(&[3, 1])), SpectrumKind::PositiveDimensional);
    }

    #[test]
    fn sheets_examples() {
        let s = sheets_containing(&pt(&[2, 2]));
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].levi.blocks(), &[2, 2]);
        assert_eq!(s[0].z_dim, 2);
        assert_eq!(s[0].nilpotent_rep, pt(&[2, 2]));
        assert!(s[0].rigid_orbits.iter().all(|o| o.is_zero_orbit()));

        let s = sheets_containing(&pt(&[5]));
        assert_eq!(s[0].levi.blocks(), &[1, 1, 1, 1, 1]);
        assert_eq!(s[0].z_dim, 5);

        let s = sheets_containing(&pt(&[1, 1, 1]));
        assert_eq!(s[0].levi.blocks(), &[3]);
        assert_eq!(s[0].z_dim, 1);
    }

    #[test]
    fn krull_dim_examples() {
        assert_eq!(krull_dim_ab(&pt(&[2, 2])), 2);
        assert_eq!(krull_dim_ab(&pt(&[6])), 6);
        assert_eq!(krull_dim_ab(&pt(&[1, 1, 1, 1])), 1);
        for n in 1..=12u32 {
            for lam in Partition::all(n) {
                assert_eq!(krull_dim_ab(&lam), lam.largest_part());
                assert_eq!(krull_dim_ab(&lam), lam.conjugate().num_parts() as u32);
            }
        }
    }
}
