//! Dense linear algebra over the prime field F_p, p a small prime.

/// Dense matrix over F_p. Entries are kept reduced in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

pub fn fp_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0
    fp_pow(a % p, p - 2, p)
}

pub fn fp_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

impl FpMat {
    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        FpMat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut m = Self::zero(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols, self.p), (other.rows, other.cols, other.p));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a + b) % self.p)
            .collect();
        FpMat { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols, self.p), (other.rows, other.cols, other.p));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a + self.p - b) % self.p)
            .collect();
        FpMat { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        let data = self.data.iter().map(|a| a * c % self.p).collect();
        FpMat { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    /// i-k-j loop; reduction is delayed to the end of each row when
    /// `(p-1)^2 * cols` fits in u64, which always holds for the single-digit
    /// primes used here.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p = self.p;
        let delayed = (p - 1)
            .checked_mul(p - 1)
            .and_then(|x| x.checked_mul(self.cols as u64))
            .is_some();
        let mut out = FpMat::zero(p, self.rows, other.cols);
        for i in 0..self.rows {
            let trow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                if delayed {
                    for (t, &o) in trow.iter_mut().zip(orow) {
                        *t += a * o;
                    }
                } else {
                    for (t, &o) in trow.iter_mut().zip(orow) {
                        *t = (*t + a * o) % p;
                    }
                }
            }
            if delayed {
                for t in trow.iter_mut() {
                    *t %= p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b) % self.p)
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = FpMat::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Row echelon form in place; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.data.swap_with_slice_rows(r, pr, self.cols);
            let inv = fp_inv(self.get(r, c), p);
            for j in 0..self.cols {
                let v = self.get(r, j) * inv % p;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) != 0 {
                    let f = self.get(i, c);
                    for j in 0..self.cols {
                        let v = (self.get(i, j) + (p - f) * self.get(r, j)) % p;
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = m.get(r, free);
                if coeff != 0 {
                    v[pc] = p - coeff;
                }
            }
            basis.push(v);
        }
        basis
    }
}

trait SwapRows {
    fn swap_with_slice_rows(&mut self, a: usize, b: usize, cols: usize);
}

impl SwapRows for Vec<u64> {
    fn swap_with_slice_rows(&mut self, a: usize, b: usize, cols: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (left, right) = self.split_at_mut(hi * cols);
        left[lo * cols..(lo + 1) * cols].swap_with_slice(&mut right[..cols]);
    }
}

/// Row-echelon accumulator for vectors over F_p; used to track the span of
/// a growing set (Burnside closure, invariant subspaces).
pub struct SpanBuilder {
    p: u64,
    len: usize,
    /// rows in echelon form, each with its pivot index
    rows: Vec<(usize, Vec<u64>)>,
}

impl SpanBuilder {
    pub fn new(p: u64, len: usize) -> Self {
        SpanBuilder { p, len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span; if independent, inserts the normalized
    /// residue and returns it.
    pub fn insert(&mut self, mut v: Vec<u64>) -> Option<Vec<u64>> {
        assert_eq!(v.len(), self.len);
        let p = self.p;
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        match v.iter().position(|&x| x != 0) {
            None => None,
            Some(piv) => {
                let inv = fp_inv(v[piv], p);
                for x in v.iter_mut() {
                    *x = *x * inv % p;
                }
                self.rows.push((piv, v.clone()));
                self.rows.sort_by_key(|(i, _)| *i);
                Some(v)
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn basis(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace() {
        let p = 5;
        let m = FpMat::from_rows(p, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let p = 7;
        let m = FpMat::from_rows(p, &[vec![1, 1], vec![1, 0]]);
        let m5 = m.mul(&m).mul(&m).mul(&m).mul(&m);
        assert_eq!(m.pow(5), m5);
    }

    #[test]
    fn span_builder() {
        let mut s = SpanBuilder::new(3, 3);
        assert!(s.insert(vec![1, 2, 0]).is_some());
        assert!(s.insert(vec![0, 1, 1]).is_some());
        assert!(s.insert(vec![1, 0, 1]).is_none()); // = row1 - 2*row2 over F_3
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[1, 1, 2]));
        assert!(!s.contains(&[0, 0, 1]));
    }
}
