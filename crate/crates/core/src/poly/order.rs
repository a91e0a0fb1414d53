use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Exp;

/// A monomial order on exponent vectors.
///
/// All three kinds are total, multiplicative well-orders with 1 minimal.
/// `Elimination { split }` compares the first `split` variables by degrevlex
/// and breaks ties on the remaining block, so any monomial involving a
/// variable from the first block is greater than every monomial in the
/// second block alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Elimination { split: usize },
}

fn cmp_lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

fn cmp_degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // equal degree: the last position where they differ decides, with the
    // smaller exponent winning
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp_exp(&self, a: &Exp, b: &Exp) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match *self {
            MonomialOrder::Lex => cmp_lex(a, b),
            MonomialOrder::DegRevLex => cmp_degrevlex(a, b),
            MonomialOrder::Elimination { split } => {
                cmp_degrevlex(&a[..split], &b[..split])
                    .then_with(|| cmp_degrevlex(&a[split..], &b[split..]))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exp {
        v.to_vec()
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp_exp(&e(&[1, 0]), &e(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp_exp(&e(&[2, 1]), &e(&[2, 3])), Ordering::Less);
    }

    #[test]
    fn degrevlex_classic() {
        // x^2 y z > x y^3 is false in degrevlex (degrees 4 vs 5)
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.cmp_exp(&e(&[2, 1, 1]), &e(&[1, 3, 0])), Ordering::Less);
        // degree ties: x^2 z < x y^2 since last differing exponent favours y^2
        assert_eq!(o.cmp_exp(&e(&[2, 0, 1]), &e(&[1, 2, 0])), Ordering::Less);
        // one is minimal
        assert_eq!(o.cmp_exp(&e(&[0, 0, 0]), &e(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn elimination_blocks() {
        let o = MonomialOrder::Elimination { split: 1 };
        // any power of x beats any monomial in the tail block
        assert_eq!(o.cmp_exp(&e(&[1, 0]), &e(&[0, 9])), Ordering::Greater);
        assert_eq!(o.cmp_exp(&e(&[0, 2]), &e(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn multiplicative() {
        let o = MonomialOrder::DegRevLex;
        let a = e(&[2, 0, 1]);
        let b = e(&[1, 2, 0]);
        let m = e(&[3, 1, 4]);
        let am: Exp = a.iter().zip(&m).map(|(x, y)| x + y).collect();
        let bm: Exp = b.iter().zip(&m).map(|(x, y)| x + y).collect();
        assert_eq!(o.cmp_exp(&a, &b), o.cmp_exp(&am, &bm));
    }
}
