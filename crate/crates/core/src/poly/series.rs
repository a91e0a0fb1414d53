use num_traits::One;

use super::{MultiPoly, PolyError, Rat};

/// Truncated formal series in `u^{-1}` with polynomial coefficients:
/// `coeffs[r]` is the coefficient of `u^{-r}`, `r = 0..=order`.
///
/// All arithmetic is exact through the truncation order and discards
/// everything beyond it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncSeries {
    /// The zero series of truncation order `order`.
    pub fn zero(vars: &[String], order: usize) -> Self {
        TruncSeries { coeffs: vec![MultiPoly::zero(vars); order + 1] }
    }

    /// The constant series 1.
    pub fn one(vars: &[String], order: usize) -> Self {
        let mut s = Self::zero(vars, order);
        s.coeffs[0] = MultiPoly::constant(vars, Rat::one());
        s
    }

    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, r: usize) -> &MultiPoly {
        &self.coeffs[r]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, r: usize, p: MultiPoly) {
        self.coeffs[r] = p;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        let n = self.order();
        let vars = self.coeffs[0].vars();
        let mut out = Self::zero(vars, n);
        for r in 0..=n {
            let mut acc = MultiPoly::zero(vars);
            for t in 0..=r {
                if self.coeffs[t].is_zero() || other.coeffs[r - t].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[t].mul(&other.coeffs[r - t]));
            }
            out.coeffs[r] = acc;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self, PolyError> {
        let vars = self.coeffs[0].vars();
        let one = MultiPoly::constant(vars, Rat::one());
        if self.coeffs[0] != one {
            return Err(PolyError::NonUnitConstantTerm);
        }
        let n = self.order();
        let mut inv = Self::zero(vars, n);
        inv.coeffs[0] = one;
        for r in 1..=n {
            // b_r = -sum_{t=1..r} a_t b_{r-t}
            let mut acc = MultiPoly::zero(vars);
            for t in 1..=r {
                if self.coeffs[t].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[t].mul(&inv.coeffs[r - t]));
            }
            inv.coeffs[r] = acc.neg();
        }
        Ok(inv)
    }

    /// Integer power, exponent >= 0.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.coeffs[0].vars(), self.order());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

/// `D(u) -> -D(u)^{-1}` on truncated series, the tilde operation on the
/// diagonal generating series. Requires constant term 1; the result has
/// constant term -1 and satisfies `D * (-result) = 1` through the
/// truncation order.
pub fn series_neg_inverse(d: &TruncSeries) -> Result<TruncSeries, PolyError> {
    Ok(d.inverse()?.neg())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Vec<String> {
        vec!["X".into(), "Y".into()]
    }

    #[test]
    fn inverse_of_one_plus_x() {
        // (1 + X u^{-1})^{-1} = sum (-X)^r u^{-r}
        let v = vars();
        let mut d = TruncSeries::one(&v, 6);
        d.set_coeff(1, MultiPoly::var(&v, 0));
        let inv = d.inverse().unwrap();
        for r in 0..=6 {
            let sign = if r % 2 == 0 { 1 } else { -1 };
            let expected =
                MultiPoly::var(&v, 0).pow(r as u32).scale(&Rat::from_integer(sign.into()));
            assert_eq!(inv.coeff(r), &expected);
        }
        assert_eq!(d.mul(&inv), TruncSeries::one(&v, 6));
    }

    #[test]
    fn neg_inverse_cancels() {
        let v = vars();
        let mut d = TruncSeries::one(&v, 5);
        d.set_coeff(1, MultiPoly::var(&v, 0));
        d.set_coeff(2, MultiPoly::var(&v, 1));
        let tilde = series_neg_inverse(&d).unwrap();
        assert_eq!(
            tilde.coeff(0),
            &MultiPoly::from_int(&v, -1),
            "tilde series starts at -1"
        );
        assert_eq!(d.mul(&tilde.neg()), TruncSeries::one(&v, 5));
    }

    #[test]
    fn inverse_requires_unit_constant_term() {
        let v = vars();
        let mut d = TruncSeries::zero(&v, 3);
        d.set_coeff(0, MultiPoly::var(&v, 0));
        assert!(matches!(d.inverse(), Err(PolyError::NonUnitConstantTerm)));
        assert!(matches!(
            TruncSeries::zero(&v, 3).inverse(),
            Err(PolyError::NonUnitConstantTerm)
        ));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let v = vars();
        let mut d = TruncSeries::one(&v, 4);
        d.set_coeff(1, MultiPoly::from_int(&v, -1));
        let sq = d.mul(&d);
        assert_eq!(d.pow(2), sq);
        assert_eq!(d.pow(0), TruncSeries::one(&v, 4));
        // (1 - u^{-1})^2 = 1 - 2 u^{-1} + u^{-2}
        assert_eq!(sq.coeff(1), &MultiPoly::from_int(&v, -2));
        assert_eq!(sq.coeff(2), &MultiPoly::from_int(&v, 1));
        assert!(sq.coeff(3).is_zero());
    }
}
