//! Sparse multivariate polynomials over the rationals, monomial orders,
//! truncated series in `u^{-1}` and a Buchberger-based Gröbner engine.

mod groebner;
mod order;
mod series;

pub use groebner::{groebner, normal_form, subalgebra_contains, GroebnerBasis};
pub use order::MonomialOrder;
pub use series::{series_neg_inverse, TruncSeries};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Rat = BigRational;

/// Exponent vector; length always equals the length of the variable list.
pub type Exp = Vec<u32>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operands are defined over different variable lists")]
    VariableMismatch,
    #[error("series constant term is not 1")]
    NonUnitConstantTerm,
    #[error("tag variable `{0}` collides with an existing variable")]
    VariableClash(String),
    #[error("invalid polynomial encoding: {0}")]
    BadEncoding(String),
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in a `BTreeMap` keyed by exponent vector, so equal
/// polynomials have identical representations and iteration order is
/// deterministic. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exp, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly { vars: vars.to_vec(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[String], c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn from_int(vars: &[String], n: i64) -> Self {
        Self::constant(vars, Rat::from_integer(BigInt::from(n)))
    }

    /// The monomial `x_idx`.
    pub fn var(vars: &[String], idx: usize) -> Self {
        assert!(idx < vars.len());
        let mut e = vec![0u32; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(e, Rat::one());
        p
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Exp, Rat)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0u32; self.vars.len()])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, e: Exp, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_same_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::VariableMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_vars(other).expect("variable mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_vars(other).expect("variable mismatch");
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c;
        }
        out
    }

    pub fn mul_monomial(&self, e: &Exp, c: &Rat) -> Self {
        let mut out = Self::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (ea, ca) in &self.terms {
            let exp: Exp = ea.iter().zip(e).map(|(a, b)| a + b).collect();
            out.terms.insert(exp, ca * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(&self.vars, Rat::one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Leading term under `order`, as `(exponent, coefficient)`.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(Exp, Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp_exp(a, b))
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => self.scale(&(Rat::one() / lc)),
        }
    }

    pub fn eval(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`. All images must share one
    /// variable list, which becomes the variable list of the result.
    pub fn substitute(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.vars.len());
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_default();
        let mut acc = MultiPoly::zero(&target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&img.pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Re-expresses the polynomial over a larger variable list that contains
    /// the current one as a prefix.
    pub fn extend_vars(&self, vars: &[String]) -> Self {
        assert!(vars.len() >= self.vars.len());
        assert_eq!(&vars[..self.vars.len()], &self.vars[..]);
        let pad = vars.len() - self.vars.len();
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e2 = e.clone();
            e2.extend(std::iter::repeat(0).take(pad));
            (e2, c.clone())
        });
        Self::from_terms(vars, terms)
    }

    /// True if every term has the same degree under the given variable weights.
    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> bool {
        let mut seen: Option<u64> = None;
        for e in self.terms.keys() {
            let d: u64 = e.iter().zip(weights).map(|(&a, &w)| a as u64 * w as u64).sum();
            match seen {
                None => seen = Some(d),
                Some(s) if s != d => return false,
                _ => {}
            }
        }
        true
    }

    /// Indices of variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut used = vec![false; self.vars.len()];
        for e in self.terms.keys() {
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| u.then_some(i))
            .collect()
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    e: e.clone(),
                    c: [c.numer().to_string(), c.denom().to_string()],
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self, PolyError> {
        let mut p = Self::zero(&j.vars);
        for t in &j.terms {
            if t.e.len() != j.vars.len() {
                return Err(PolyError::BadEncoding(
                    "exponent vector length does not match vars".into(),
                ));
            }
            let num = BigInt::from_str(&t.c[0])
                .map_err(|e| PolyError::BadEncoding(e.to_string()))?;
            let den = BigInt::from_str(&t.c[1])
                .map_err(|e| PolyError::BadEncoding(e.to_string()))?;
            if den.is_zero() || den.is_negative() {
                return Err(PolyError::BadEncoding("denominator must be positive".into()));
            }
            p.add_term(t.e.clone(), Rat::new(num, den));
        }
        Ok(p)
    }
}

/// JSON form: `{"vars":["X","Y"],"terms":[{"e":[2,0],"c":["1","1"]}]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub e: Exp,
    pub c: [String; 2],
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest total degree first, then reverse key order
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then(b.cmp(a))
        });
        for (i, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        self.vars[j].clone()
                    } else {
                        format!("{}^{}", self.vars[j], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl PartialOrd for MultiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .cmp(&other.vars)
            .then_with(|| self.terms.iter().rev().cmp(other.terms.iter().rev()))
    }
}
